from typing import List

import numpy as np
from pydantic import BaseModel, Field, model_validator
from scipy.special import expit

from core.console import console
from core.model import Dataset, LabelSpace


class GenSpec(BaseModel):
    """Parâmetros do gerador sintético com verdade conhecida"""
    n: int = Field(ge=1)
    feature_count: int = Field(ge=0)
    true_intercept: float
    true_weights: List[float]
    seed: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _check_weights(self) -> "GenSpec":
        if len(self.true_weights) != self.feature_count:
            raise ValueError(f"{len(self.true_weights)} pesos para feature_count = {self.feature_count}")
        return self


class TruthManifest(BaseModel):
    """Parâmetros verdadeiros (c*, w*) registrados ao lado do Dataset gerado"""
    intercept: float
    weights: List[float]
    seed: int
    n: int
    feature_count: int

    @classmethod
    def from_spec(cls, spec: GenSpec) -> "TruthManifest":
        return cls(
            intercept=spec.true_intercept,
            weights=list(spec.true_weights),
            seed=spec.seed,
            n=spec.n,
            feature_count=spec.feature_count,
        )


def generate(spec: GenSpec) -> Dataset:
    """
    Gera N instâncias: x ~ Normal(0, I), y ~ Bernoulli(sigmoide(c* + w* · x))

    Args:
        spec: Especificação validada

    Returns:
        Dataset: Determinístico na semente
    """
    rng = np.random.default_rng(spec.seed)
    features = rng.standard_normal((spec.n, spec.feature_count))
    u = rng.random(spec.n)
    p = expit(spec.true_intercept + features @ np.asarray(spec.true_weights, dtype=np.float64))
    labels = (u < p).astype(np.int64)

    console.info(f"🎲 Gerado: {spec.n} instâncias, |F| = {spec.feature_count}, "
                 f"taxa de positivos {labels.mean():.4f} (seed {spec.seed})")
    return Dataset(features, labels, LabelSpace.binary())
