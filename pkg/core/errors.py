"""
ViesPy Errors
Hierarquia de exceções do ViesPy
"""

from typing import Optional


class ViesPyError(Exception):
    """Erro base do ViesPy (sempre com contexto de localização quando houver)"""

    def __init__(self, message: str, location: Optional[str] = None):
        self.message = message
        self.location = location
        super().__init__(f"{message} [{location}]" if location else message)


class ZeroMassError(ViesPyError):
    """Massa de probabilidade nula sobre os rótulos em um x"""


class DomainError(ViesPyError):
    """Valor fora do domínio matemático da operação"""


class RejectionLimitError(ViesPyError):
    """O processo gerativo excedeu o limite de rejeições consecutivas"""


class ParseError(ViesPyError):
    """Célula que não pôde ser interpretada"""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None,
                 path: Optional[str] = None):
        self.row = row
        self.column = column
        self.path = path
        super().__init__(message, _format_location(path, row, column))


class SchemaError(ViesPyError):
    """Violação do contrato estrutural de um arquivo"""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None,
                 path: Optional[str] = None):
        self.row = row
        self.column = column
        self.path = path
        super().__init__(message, _format_location(path, row, column))


class UsageError(ViesPyError):
    """Combinação inválida de flags na linha de comando"""


def _format_location(path: Optional[str], row: Optional[int], column: Optional[str]) -> Optional[str]:
    parts = []
    if path is not None:
        parts.append(f"arquivo {path}")
    if row is not None:
        parts.append(f"linha de dados {row}")
    if column is not None:
        parts.append(f"coluna '{column}'")
    return ", ".join(parts) if parts else None
