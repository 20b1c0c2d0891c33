from dataclasses import dataclass
from typing import Hashable, Tuple

from core.errors import DomainError


@dataclass(frozen=True)
class LabelSpace:
    """Espaço finito e ordenado de rótulos (K >= 2); rótulos são tratados por índice"""
    labels: Tuple[Hashable, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) < 2:
            raise DomainError(f"LabelSpace exige pelo menos 2 rótulos, recebeu {len(labels)}")
        if len(set(labels)) != len(labels):
            raise DomainError(f"Rótulos repetidos no LabelSpace: {labels}")

    @classmethod
    def binary(cls) -> "LabelSpace":
        """Espaço binário {0, 1}, nesta ordem"""
        return cls((0, 1))

    @classmethod
    def of_size(cls, k: int) -> "LabelSpace":
        return cls(tuple(range(k)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def is_binary(self) -> bool:
        return self.labels == (0, 1)

    def index_of(self, label: Hashable) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"Rótulo {label!r} fora do LabelSpace {self.labels}") from None

    def check_index(self, y: int) -> int:
        """Valida um índice de rótulo e o devolve como int"""
        if isinstance(y, bool) or int(y) != y or not 0 <= int(y) < self.size:
            raise DomainError(f"Índice de rótulo {y!r} fora de 0..{self.size - 1}")
        return int(y)
