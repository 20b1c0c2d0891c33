import json
from pathlib import Path
from typing import List, Literal, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from core.console import console
from core.errors import ParseError, SchemaError, ViesPyError
from core.logistic import LogisticModel
from .documents import dumps_document

MODEL_FIELDS = ("intercept", "weights", "feature_count", "lambda", "train_s_r_mode")


class ModelDocument(BaseModel):
    """Documento JSON de um modelo logístico treinado"""
    intercept: float
    weights: List[float]
    feature_count: int = Field(ge=0)
    lam: float = Field(alias="lambda", ge=0.0)
    train_s_r_mode: Literal["constant", "per-instance"]

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def _check_length(self) -> "ModelDocument":
        if len(self.weights) != self.feature_count:
            raise ValueError(f"{len(self.weights)} pesos para feature_count = {self.feature_count}")
        return self

    def to_model(self) -> LogisticModel:
        return LogisticModel(self.intercept, self.weights)


def write_model(model: LogisticModel, destination: Union[str, Path], lam: float = 0.0,
                train_s_r_mode: str = "constant"):
    """
    Grava o modelo como JSON com campos fixos

    Os reais são escritos com 17 dígitos significativos (ida e volta exata).
    """
    document = ModelDocument(
        intercept=model.intercept,
        weights=model.weights.tolist(),
        feature_count=model.feature_count,
        lam=lam,
        train_s_r_mode=train_s_r_mode,
    )
    payload = dict(zip(MODEL_FIELDS, (
        document.intercept, document.weights, document.feature_count, document.lam, document.train_s_r_mode,
    )))
    try:
        Path(destination).write_text(dumps_document(payload) + "\n", encoding="utf-8")
    except OSError as e:
        raise ViesPyError(f"Falha ao gravar modelo: {e}", location=f"arquivo {destination}") from e
    console.debug(f"📂 Modelo gravado: {destination}")


def read_model_document(path: Union[str, Path]) -> ModelDocument:
    """Lê e valida o documento JSON completo de um modelo"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SchemaError("Arquivo de modelo não encontrado", path=str(path)) from None
    except UnicodeDecodeError as e:
        raise ParseError(f"Texto não é UTF-8 válido (byte {e.start})", path=str(path)) from e
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON inválido: {e.msg} (coluna {e.colno})", row=e.lineno, path=str(path)) from e
    if not isinstance(raw, dict):
        raise SchemaError("Documento de modelo deve ser um objeto JSON", path=str(path))
    missing = [name for name in MODEL_FIELDS if name not in raw]
    if missing:
        raise SchemaError(f"Campos ausentes no modelo: {', '.join(missing)}", path=str(path))
    try:
        return ModelDocument.model_validate(raw)
    except ValidationError as e:
        raise SchemaError(f"Modelo inválido: {e.errors()[0]['msg']}", path=str(path)) from e


def read_model(path: Union[str, Path]) -> LogisticModel:
    return read_model_document(path).to_model()
