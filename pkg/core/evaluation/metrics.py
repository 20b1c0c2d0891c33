from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from core.datagen import TruthManifest
from core.errors import DomainError
from core.logistic import LogisticModel, log_sr_plus_exp, predict_many
from core.model import Dataset


@dataclass(frozen=True)
class CalibrationBin:
    """Faixa de probabilidade prevista: média prevista vs frequência observada"""
    lower: float
    upper: float
    count: int
    mean_predicted: float
    observed_frequency: float

    @property
    def gap(self) -> float:
        return self.mean_predicted - self.observed_frequency if self.count else 0.0


@dataclass
class EvaluationReport:
    n: int
    deploy_ratio: float
    mean_nll: float
    bins: List[CalibrationBin] = field(default_factory=list)
    intercept_error: Optional[float] = None
    weight_error: Optional[float] = None

    def max_calibration_gap(self, min_count: int = 500) -> float:
        gaps = [abs(b.gap) for b in self.bins if b.count >= min_count]
        return max(gaps) if gaps else 0.0


def calibration_table(probs: np.ndarray, labels: np.ndarray, bins: int = 10) -> List[CalibrationBin]:
    """
    Tabela de calibração com faixas de largura igual em [0, 1]

    Args:
        probs: Probabilidades previstas de y = 1
        labels: Rótulos observados
        bins: Número de faixas

    Returns:
        List[CalibrationBin]: Uma entrada por faixa (faixas vazias incluídas)
    """
    edges = np.linspace(0.0, 1.0, bins + 1)
    index = np.clip(np.floor(probs * bins).astype(np.int64), 0, bins - 1)
    table = []
    for b in range(bins):
        members = index == b
        count = int(members.sum())
        table.append(CalibrationBin(
            lower=float(edges[b]),
            upper=float(edges[b + 1]),
            count=count,
            mean_predicted=float(probs[members].mean()) if count else float("nan"),
            observed_frequency=float(labels[members].mean()) if count else float("nan"),
        ))
    return table


def mean_nll(model: LogisticModel, data: Dataset, s_r_deploy: float = 1.0) -> float:
    """-ln P(y | x) médio sob a razão de implantação (1 = população original)"""
    if len(data) == 0:
        raise DomainError("mean_nll exige pelo menos uma instância")
    z = model.logits(data.features)
    y = data.labels
    nll = log_sr_plus_exp(z, s_r_deploy) - y * z - (1 - y) * np.log(s_r_deploy)
    return float(nll.mean())


def parameter_error(model: LogisticModel, truth: TruthManifest):
    """(|ĉ - c*|, ||ŵ - w*||∞)"""
    if len(truth.weights) != model.feature_count:
        raise DomainError(f"Manifesto com {len(truth.weights)} pesos, modelo com {model.feature_count}")
    weight_gap = np.abs(model.weights - np.asarray(truth.weights))
    return abs(model.intercept - truth.intercept), float(weight_gap.max()) if weight_gap.size else 0.0


def evaluate(model: LogisticModel, data: Dataset, truth: Optional[TruthManifest] = None,
             s_r_deploy: float = 1.0, bins: int = 10) -> EvaluationReport:
    """Calibração, NLL médio e, se houver manifesto de verdade, erro de parâmetros"""
    probs = predict_many(model, data.features, s_r_deploy)
    report = EvaluationReport(
        n=len(data),
        deploy_ratio=s_r_deploy,
        mean_nll=mean_nll(model, data, s_r_deploy),
        bins=calibration_table(probs, data.labels, bins),
    )
    if truth is not None:
        report.intercept_error, report.weight_error = parameter_error(model, truth)
    return report
