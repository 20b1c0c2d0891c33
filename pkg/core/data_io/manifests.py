import json
from pathlib import Path
from typing import Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from core.errors import ParseError, SchemaError, ViesPyError
from core.datagen import TruthManifest
from core.sampling import SamplingManifest
from .documents import dumps_document

Document = TypeVar("Document", bound=BaseModel)

COMPANION_SUFFIXES = {
    "sampling": ".manifest.json",
    "truth": ".truth.json",
}


def companion_path(data_path: Union[str, Path], kind: str) -> Path:
    """Caminho do manifesto ao lado do dataset: dados.csv -> dados.manifest.json / dados.truth.json"""
    data_path = Path(data_path)
    return data_path.with_name(data_path.stem + COMPANION_SUFFIXES[kind])


def write_manifest(document: BaseModel, destination: Union[str, Path]):
    try:
        Path(destination).write_text(dumps_document(document.model_dump()) + "\n", encoding="utf-8")
    except OSError as e:
        raise ViesPyError(f"Falha ao gravar manifesto: {e}", location=f"arquivo {destination}") from e


def _read_document(path: Union[str, Path], model: Type[Document]) -> Document:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise SchemaError("Manifesto não encontrado", path=str(path)) from None
    except UnicodeDecodeError as e:
        raise ParseError(f"Texto não é UTF-8 válido (byte {e.start})", path=str(path)) from e
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON inválido: {e.msg} (coluna {e.colno})", row=e.lineno, path=str(path)) from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or None
        raise SchemaError(f"Manifesto inválido: {error['msg']}", column=field, path=str(path)) from e


def read_sampling_manifest(path: Union[str, Path]) -> SamplingManifest:
    return _read_document(path, SamplingManifest)


def read_truth_manifest(path: Union[str, Path]) -> TruthManifest:
    return _read_document(path, TruthManifest)
