from abc import ABC, abstractmethod
from typing import Callable, Optional, Sequence

import numpy as np

from core.errors import DomainError
from .labels import LabelSpace


class DiscretePredictor(ABC):
    """
    Função de probabilidade relativa f_h(x, y) sobre um conjunto finito de rótulos
    Não precisa estar normalizada; só precisa ser não negativa e normalizável
    """

    def __init__(self, label_space: LabelSpace):
        self.label_space = label_space

    @abstractmethod
    def rel_probs(self, x: np.ndarray) -> np.ndarray:
        """
        Avalia f_h(x, ·) para todos os rótulos

        Args:
            x: FeatureVector

        Returns:
            np.ndarray: Vetor de tamanho K com valores >= 0
        """
        pass

    def rel_prob(self, x: np.ndarray, y: int) -> float:
        return float(self.rel_probs(x)[self.label_space.check_index(y)])

    def rel_prob_matrix(self, features: np.ndarray) -> np.ndarray:
        """Avalia f_h linha a linha (N x K); subclasses vetorizam quando possível"""
        if features.shape[0] == 0:
            return np.zeros((0, self.label_space.size))
        return np.vstack([self.rel_probs(x) for x in features])


class TabulatedPredictor(DiscretePredictor):
    """Preditor com pesos fixos por rótulo, independente de x"""

    def __init__(self, weights: Sequence[float], label_space: Optional[LabelSpace] = None):
        table = np.asarray(weights, dtype=np.float64)
        super().__init__(label_space or LabelSpace.of_size(table.shape[0]))
        if table.shape != (self.label_space.size,):
            raise DomainError(f"Tabela com {table.shape[0]} pesos para {self.label_space.size} rótulos")
        self.table = table

    def rel_probs(self, x: np.ndarray) -> np.ndarray:
        return self.table.copy()

    def rel_prob_matrix(self, features: np.ndarray) -> np.ndarray:
        return np.tile(self.table, (features.shape[0], 1))


class SoftmaxLinearPredictor(DiscretePredictor):
    """f(x, k) = exp(b_k + W_k · x) para K rótulos"""

    def __init__(self, intercepts: Sequence[float], weights: np.ndarray,
                 label_space: Optional[LabelSpace] = None):
        b = np.asarray(intercepts, dtype=np.float64)
        w = np.asarray(weights, dtype=np.float64)
        super().__init__(label_space or LabelSpace.of_size(b.shape[0]))
        if b.shape != (self.label_space.size,) or w.ndim != 2 or w.shape[0] != b.shape[0]:
            raise DomainError(f"Parâmetros incompatíveis: intercepts {b.shape}, weights {w.shape}")
        self.intercepts = b
        self.weights = w

    def rel_probs(self, x: np.ndarray) -> np.ndarray:
        return np.exp(self.intercepts + self.weights @ x)

    def rel_prob_matrix(self, features: np.ndarray) -> np.ndarray:
        return np.exp(self.intercepts + features @ self.weights.T)


class FunctionPredictor(DiscretePredictor):
    """Adapta um callable x -> K valores relativos"""

    def __init__(self, fn: Callable[[np.ndarray], Sequence[float]], label_space: LabelSpace):
        super().__init__(label_space)
        self.fn = fn

    def rel_probs(self, x: np.ndarray) -> np.ndarray:
        values = np.asarray(self.fn(x), dtype=np.float64)
        if values.shape != (self.label_space.size,):
            raise DomainError(f"Função devolveu {values.shape}, esperado ({self.label_space.size},)")
        return values
