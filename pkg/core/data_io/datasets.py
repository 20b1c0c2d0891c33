import re
from pathlib import Path
from typing import IO, Dict, Optional, Union

import numpy as np
import pandas as pd

from core.console import console
from core.errors import ParseError, SchemaError, ViesPyError
from core.model import Dataset, LabelSpace

Source = Union[str, Path, IO]

FEATURE_COLUMN = re.compile(r"^f(\d+)$")
RATE_COLUMN = re.compile(r"^s(\d+)$")
LABEL_COLUMN = "y"
ID_COLUMN = "id"
FLOAT_FORMAT = "%.17g"


def _source_name(source: Source) -> str:
    if isinstance(source, (str, Path)):
        return str(source)
    return getattr(source, "name", "<stream>")


def _parse_reals(column: pd.Series, name: str, path: str) -> np.ndarray:
    """Converte uma coluna de texto em float64, apontando a primeira célula inválida"""
    try:
        values = column.astype(np.float64).to_numpy()
    except ValueError:
        for row, cell in enumerate(column):
            try:
                float(cell)
            except ValueError:
                raise ParseError(f"Valor não numérico {cell!r}", row=row, column=name, path=path) from None
        raise
    if not np.all(np.isfinite(values)):
        row = int(np.flatnonzero(~np.isfinite(values))[0])
        raise SchemaError(f"Valor não finito {column.iloc[row]!r}", row=row, column=name, path=path)
    return values


def _column_index(match: re.Match, name: str, path: str) -> int:
    index = int(match.group(1))
    if match.group(1) != str(index):
        raise SchemaError(f"Nome de coluna com zeros à esquerda: '{name}'", column=name, path=path)
    return index


def read_dataset(source: Source) -> Dataset:
    """
    Lê um Dataset de um CSV (caminho ou stream de bytes)

    Colunas: f0..f{|F|-1} (features), y (rótulo em {0, 1}), s0/s1 (taxas opcionais),
    id (ordinal opcional). Colunas desconhecidas são ignoradas.

    Args:
        source: Caminho ou stream

    Returns:
        Dataset: Ordem das linhas preservada
    """
    path = _source_name(source)
    try:
        frame = pd.read_csv(source, header=None, dtype=str, keep_default_na=False, skip_blank_lines=True)
    except FileNotFoundError:
        raise SchemaError("Arquivo de dataset não encontrado", path=path) from None
    except pd.errors.EmptyDataError:
        raise SchemaError("Arquivo vazio: cabeçalho ausente", path=path) from None
    except pd.errors.ParserError as e:
        raise SchemaError(f"Linhas irregulares (número de colunas diferente do cabeçalho): {e}", path=path) from e
    except UnicodeDecodeError as e:
        raise ParseError(f"Texto não é UTF-8 válido (byte {e.start})", path=path) from e

    header = [str(name).strip() for name in frame.iloc[0]]
    body = frame.iloc[1:].reset_index(drop=True)
    body.columns = header

    if len(set(header)) != len(header):
        raise SchemaError(f"Colunas repetidas no cabeçalho: {header}", path=path)
    if LABEL_COLUMN not in header:
        raise SchemaError("Coluna obrigatória 'y' ausente", path=path)

    if len(body):
        stripped = body.apply(lambda col: col.str.strip())
        ragged = (body.isna() | stripped.eq("")).to_numpy()
        if ragged.any():
            row, col = np.argwhere(ragged)[0]
            raise SchemaError("Célula vazia ou linha irregular", row=int(row), column=header[col], path=path)

    feature_columns: Dict[int, str] = {}
    rate_columns: Dict[int, str] = {}
    for name in header:
        if match := FEATURE_COLUMN.match(name):
            feature_columns[_column_index(match, name, path)] = name
        elif match := RATE_COLUMN.match(name):
            rate_columns[_column_index(match, name, path)] = name
        elif name not in (LABEL_COLUMN, ID_COLUMN):
            console.warning(f"Coluna desconhecida '{name}' ignorada em {path}")

    if sorted(feature_columns) != list(range(len(feature_columns))):
        raise SchemaError(f"Colunas de features devem ser contíguas a partir de f0: {sorted(feature_columns.values())}",
                          path=path)
    if rate_columns and sorted(rate_columns) != [0, 1]:
        raise SchemaError(f"Colunas de taxa devem ser exatamente s0 e s1, recebeu {sorted(rate_columns.values())}",
                          path=path)

    n = len(body)
    feature_count = len(feature_columns)
    features = np.zeros((n, feature_count))
    for index in range(feature_count):
        name = feature_columns[index]
        features[:, index] = _parse_reals(body[name], name, path)

    raw_labels = _parse_reals(body[LABEL_COLUMN], LABEL_COLUMN, path)
    invalid = (raw_labels != 0.0) & (raw_labels != 1.0)
    if invalid.any():
        row = int(np.flatnonzero(invalid)[0])
        raise SchemaError(f"Rótulo {body[LABEL_COLUMN].iloc[row]!r} fora de {{0, 1}}", row=row,
                          column=LABEL_COLUMN, path=path)
    labels = raw_labels.astype(np.int64)

    rates = None
    if rate_columns:
        rates = np.column_stack([_parse_reals(body[rate_columns[k]], rate_columns[k], path) for k in (0, 1)])
        outside = (rates < 0.0) | (rates > 1.0)
        if outside.any():
            row, k = np.argwhere(outside)[0]
            raise SchemaError(f"Taxa de amostragem {rates[row, k]!r} fora de [0, 1]", row=int(row),
                              column=rate_columns[int(k)], path=path)

    ids = None
    if ID_COLUMN in header:
        raw_ids = _parse_reals(body[ID_COLUMN], ID_COLUMN, path)
        if np.any(raw_ids != np.round(raw_ids)):
            row = int(np.flatnonzero(raw_ids != np.round(raw_ids))[0])
            raise SchemaError("id deve ser inteiro", row=row, column=ID_COLUMN, path=path)
        ids = raw_ids.astype(np.int64)

    console.debug(f"📂 Dataset lido: {path} ({n} instâncias, |F| = {feature_count})")
    return Dataset(features, labels, LabelSpace.binary(), rates, ids)


def dataset_frame(data: Dataset, extra_columns: Optional[Dict[str, np.ndarray]] = None) -> pd.DataFrame:
    """Monta o DataFrame na ordem de colunas do arquivo: [id], f*, [s*], y, extras"""
    columns: Dict[str, np.ndarray] = {}
    if not data.has_default_ids:
        columns[ID_COLUMN] = data.ids
    for index in range(data.feature_count):
        columns[f"f{index}"] = data.features[:, index]
    if data.has_rates:
        for k in range(data.label_space.size):
            columns[f"s{k}"] = data.rates[:, k]
    columns[LABEL_COLUMN] = data.labels
    for name, values in (extra_columns or {}).items():
        if name in columns:
            raise SchemaError(f"Coluna extra '{name}' colide com uma coluna do dataset")
        columns[name] = np.asarray(values)
    return pd.DataFrame(columns)


def write_dataset(data: Dataset, destination: Source,
                  extra_columns: Optional[Dict[str, np.ndarray]] = None):
    """
    Grava um Dataset em CSV com reais em 17 dígitos significativos

    Args:
        data: Dataset
        destination: Caminho ou stream de texto
        extra_columns: Colunas adicionais anexadas ao final (ex.: probabilidade prevista)
    """
    frame = dataset_frame(data, extra_columns)
    try:
        frame.to_csv(destination, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise ViesPyError(f"Falha ao gravar dataset: {e}", location=f"arquivo {_source_name(destination)}") from e
    console.debug(f"📂 Dataset gravado: {_source_name(destination)} ({len(data)} instâncias)")
