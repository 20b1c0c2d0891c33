from pathlib import Path
from typing import Any, Dict, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined

TEMPLATE_DIR = Path(__file__).parent / "templates"


class ReportRenderer:
    """Renderizador de relatórios de texto (tabelas) com templates Jinja2"""

    def __init__(self, template_dir: Optional[str] = None):
        self.template_dir = template_dir or str(TEMPLATE_DIR)
        self.jinja_env = Environment(
            loader=FileSystemLoader(self.template_dir),
            autoescape=False,
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self.jinja_env.filters["num"] = _format_number

    def render(self, template_name: str, context: Dict[str, Any]) -> str:
        """
        Renderiza um relatório

        Args:
            template_name: Nome do template (ex.: 'evaluate.txt.j2')
            context: Variáveis do template

        Returns:
            str: Texto renderizado
        """
        return self.jinja_env.get_template(template_name).render(**context)


def _format_number(value: Any, digits: int = 6) -> str:
    if value is None:
        return "-"
    value = float(value)
    if value != value:
        return "-"
    return f"{value:.{digits}f}"
