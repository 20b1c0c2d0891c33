from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from core.errors import DomainError
from .labels import LabelSpace


def as_feature_vector(values: Sequence[float], feature_count: Optional[int] = None) -> np.ndarray:
    """
    Converte valores em um FeatureVector (array float64 1-D, somente finitos)

    Args:
        values: Valores reais das features
        feature_count: Dimensão esperada |F| (opcional)

    Returns:
        np.ndarray: Vetor validado
    """
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1:
        raise DomainError(f"FeatureVector deve ser 1-D, recebeu formato {x.shape}")
    if feature_count is not None and x.shape[0] != feature_count:
        raise DomainError(f"FeatureVector com dimensão {x.shape[0]}, esperado {feature_count}")
    if not np.all(np.isfinite(x)):
        raise DomainError("FeatureVector contém valores não finitos (NaN/inf)")
    return x


@dataclass(frozen=True)
class LabeledInstance:
    """Par (x, y) de treino"""
    x: np.ndarray
    y: int


@dataclass
class Dataset:
    """
    Dataset denso: features (N x |F|), rótulos (índices no LabelSpace),
    taxas de amostragem por instância opcionais (N x K) e ids ordinais
    """
    features: np.ndarray
    labels: np.ndarray
    label_space: LabelSpace = field(default_factory=LabelSpace.binary)
    rates: Optional[np.ndarray] = None
    ids: Optional[np.ndarray] = None

    def __post_init__(self):
        features = np.array(self.features, dtype=np.float64)
        if features.ndim != 2:
            raise DomainError(f"features deve ser uma matriz N x |F|, recebeu formato {features.shape}")
        n = features.shape[0]

        labels = np.asarray(self.labels)
        if labels.shape != (n,):
            raise DomainError(f"labels com formato {labels.shape}, esperado ({n},)")
        if n and not np.all(np.isfinite(features)):
            bad = int(np.argwhere(~np.isfinite(features))[0][0])
            raise DomainError(f"Valor não finito nas features da instância {bad}")
        if n and (not np.issubdtype(labels.dtype, np.number) or np.any(labels != np.round(labels))):
            raise DomainError("labels devem ser índices inteiros")
        labels = labels.astype(np.int64)
        outside = (labels < 0) | (labels >= self.label_space.size)
        if np.any(outside):
            bad = int(np.flatnonzero(outside)[0])
            raise DomainError(f"Rótulo {labels[bad]} da instância {bad} fora do LabelSpace {self.label_space.labels}")

        rates = self.rates
        if rates is not None:
            rates = np.array(rates, dtype=np.float64)
            if rates.shape != (n, self.label_space.size):
                raise DomainError(f"rates com formato {rates.shape}, esperado ({n}, {self.label_space.size})")
            invalid = ~np.isfinite(rates) | (rates < 0.0) | (rates > 1.0)
            if np.any(invalid):
                bad = int(np.argwhere(invalid)[0][0])
                raise DomainError(f"Taxa de amostragem fora de [0, 1] na instância {bad}")
            rates.setflags(write=False)

        ids = np.arange(n, dtype=np.int64) if self.ids is None else np.array(self.ids, dtype=np.int64)
        if ids.shape != (n,):
            raise DomainError(f"ids com formato {ids.shape}, esperado ({n},)")

        features.setflags(write=False)
        labels.setflags(write=False)
        ids.setflags(write=False)
        self.features, self.labels, self.rates, self.ids = features, labels, rates, ids

    @classmethod
    def empty(cls, feature_count: int, label_space: Optional[LabelSpace] = None) -> "Dataset":
        return cls(np.zeros((0, feature_count)), np.zeros(0, dtype=np.int64), label_space or LabelSpace.binary())

    @property
    def feature_count(self) -> int:
        return self.features.shape[1]

    @property
    def has_rates(self) -> bool:
        return self.rates is not None

    @property
    def has_default_ids(self) -> bool:
        return bool(np.array_equal(self.ids, np.arange(len(self))))

    def __len__(self) -> int:
        return self.features.shape[0]

    def instance(self, n: int) -> LabeledInstance:
        return LabeledInstance(self.features[n], int(self.labels[n]))

    def instances(self) -> Iterator[LabeledInstance]:
        for n in range(len(self)):
            yield self.instance(n)

    def label_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.label_space.size)

    def subset(self, selector: Union[np.ndarray, Sequence[int]]) -> "Dataset":
        """Subconjunto preservando ordem, ids e taxas (máscara booleana ou índices)"""
        selector = np.asarray(selector)
        if selector.dtype != np.bool_:
            selector = selector.astype(np.int64)
        return Dataset(
            features=self.features[selector],
            labels=self.labels[selector],
            label_space=self.label_space,
            rates=None if self.rates is None else self.rates[selector],
            ids=self.ids[selector],
        )

    def with_rates(self, rates: Optional[np.ndarray]) -> "Dataset":
        return Dataset(self.features, self.labels, self.label_space, rates, self.ids)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        same_rates = (self.rates is None and other.rates is None) or (
            self.rates is not None and other.rates is not None and np.array_equal(self.rates, other.rates)
        )
        return (
            self.label_space == other.label_space
            and self.features.shape == other.features.shape
            and np.array_equal(self.features, other.features)
            and np.array_equal(self.labels, other.labels)
            and np.array_equal(self.ids, other.ids)
            and same_rates
        )
