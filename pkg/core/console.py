import json
import logging
import sys
from datetime import datetime
from typing import Any, Dict, Optional, TextIO

# QUIET deixa passar só os erros
LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "QUIET": logging.ERROR,
}

PREFIXES = {logging.WARNING: "⚠️ ", logging.ERROR: "❌ "}


class EmojiFormatter(logging.Formatter):
    """Prefixa avisos e erros com emoji; demais níveis saem como a mensagem pura"""

    def format(self, record: logging.LogRecord) -> str:
        return PREFIXES.get(record.levelno, "") + super().format(record)


class ConsoleHandler(logging.Handler):
    """Escreve no stream do Console, resolvendo sys.stderr a cada registro"""

    def __init__(self, owner: "Console"):
        super().__init__()
        self.owner = owner

    def emit(self, record: logging.LogRecord):
        try:
            print(self.format(record), file=self.owner.stream or sys.stderr)
        except Exception:
            self.handleError(record)


class Console:
    """
    Logger de console do ViesPy
    Linhas com emoji no fluxo de diagnóstico (stderr); detalhes em JSON só em DEBUG
    """

    def __init__(self, log_level: str = "INFO", stream: Optional[TextIO] = None, name: str = "viespy"):
        self.log_level = "INFO"
        self.stream = stream
        self.logger = logging.getLogger(name)
        self.logger.propagate = False
        self.logger.handlers.clear()
        handler = ConsoleHandler(self)
        handler.setFormatter(EmojiFormatter("%(message)s"))
        self.logger.addHandler(handler)
        self.set_level(log_level)

    def set_level(self, log_level: str):
        """Define o nível de log (DEBUG, INFO, WARNING, ERROR, QUIET)"""
        level = log_level.upper()
        if level not in LEVELS:
            raise ValueError(f"Nível de log desconhecido: {log_level} (use {', '.join(LEVELS)})")
        self.log_level = level
        self.logger.setLevel(LEVELS[level])

    def enabled_for(self, level: str) -> bool:
        return self.logger.isEnabledFor(LEVELS[level])

    def debug(self, message: str):
        self.logger.debug(message)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str):
        self.logger.error(message)

    def details(self, title: str, data: Dict[str, Any]):
        """
        Registra um bloco de detalhes estruturados (apenas em DEBUG)

        Args:
            title: Título do bloco
            data: Dados serializáveis em JSON
        """
        if not self.enabled_for("DEBUG"):
            return
        payload = {"timestamp": datetime.now().isoformat(), **data}
        self.logger.debug(f"📋 {title}: {json.dumps(payload, indent=2, default=str)}")


console = Console()
