import json
import math
from typing import Any

REAL_FORMAT = "%.17g"
INDENT = "  "


def dumps_document(value: Any, level: int = 0) -> str:
    """
    Serializa um documento JSON com indentação de 2 espaços e reais em 17 dígitos significativos

    Mesmo layout de json.dumps(indent=2); só a escrita dos reais muda.

    Args:
        value: dict, list, str, int, float, bool ou None
        level: Nível de indentação corrente

    Returns:
        str: Texto JSON sem quebra de linha final
    """
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Real não finito não cabe em JSON: {value!r}")
        return REAL_FORMAT % value
    inner = INDENT * (level + 1)
    if isinstance(value, dict) and value:
        items = [f"{inner}{json.dumps(str(key))}: {dumps_document(item, level + 1)}" for key, item in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + INDENT * level + "}"
    if isinstance(value, (list, tuple)) and value:
        items = [inner + dumps_document(item, level + 1) for item in value]
        return "[\n" + ",\n".join(items) + "\n" + INDENT * level + "]"
    return json.dumps(value)
