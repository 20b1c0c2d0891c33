from dataclasses import dataclass, field
from typing import List

import numpy as np
from pydantic import BaseModel, Field

from core.errors import DomainError


@dataclass
class LogisticModel:
    """Hipótese h = (c, w) da regressão logística"""
    intercept: float
    weights: np.ndarray

    def __post_init__(self):
        self.intercept = float(self.intercept)
        self.weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if not np.isfinite(self.intercept) or not np.all(np.isfinite(self.weights)):
            raise DomainError("LogisticModel com parâmetros não finitos")

    @classmethod
    def zeros(cls, feature_count: int) -> "LogisticModel":
        return cls(0.0, np.zeros(feature_count))

    @property
    def feature_count(self) -> int:
        return self.weights.shape[0]

    def logits(self, features: np.ndarray) -> np.ndarray:
        """z = c + w · x para cada linha"""
        if features.shape[1] != self.feature_count:
            raise DomainError(f"Dataset com {features.shape[1]} features, modelo com {self.feature_count}")
        return self.intercept + features @ self.weights

    def logit(self, x: np.ndarray) -> float:
        if x.shape != (self.feature_count,):
            raise DomainError(f"FeatureVector com dimensão {x.shape[0]}, modelo com {self.feature_count}")
        return float(self.intercept + x @ self.weights)

    def step(self, d_c: float, d_w: np.ndarray, t: float) -> "LogisticModel":
        return LogisticModel(self.intercept - t * d_c, self.weights - t * d_w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogisticModel):
            return NotImplemented
        return self.intercept == other.intercept and np.array_equal(self.weights, other.weights)


@dataclass(frozen=True)
class SampleRatioView:
    """s_r(x_n) = s(x_n, 0) / s(x_n, 1) materializado uma vez por instância"""
    ratios: np.ndarray
    mode: str

    @property
    def log_ratios(self) -> np.ndarray:
        return np.log(self.ratios)


class TrainConfig(BaseModel):
    """Configuração do treino por gradiente descendente (MAP)"""
    lam: float = Field(0.0, ge=0.0, alias="lambda")
    learning_rate: float = Field(1.0, gt=0.0)
    max_iters: int = Field(10_000, gt=0)
    grad_tol: float = Field(1e-8, gt=0.0)
    backtracking: bool = True
    armijo: float = Field(1e-4, gt=0.0, lt=1.0)
    max_halvings: int = Field(60, gt=0)

    model_config = {"populate_by_name": True, "frozen": True}


@dataclass
class TrainReport:
    """Resultado do treino: modelo, trilhas de perda e gradiente, status de convergência"""
    model: LogisticModel
    loss_trace: List[float] = field(default_factory=list)
    grad_norm_trace: List[float] = field(default_factory=list)
    final_grad_norm: float = float("inf")
    converged: bool = False
    iterations: int = 0
    stop_reason: str = "max-iters"

    @property
    def final_loss(self) -> float:
        return self.loss_trace[-1] if self.loss_trace else float("nan")
