import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from core.console import console
from core.errors import DomainError, RejectionLimitError
from .correction import normalize
from .predictors import DiscretePredictor
from .sampling_spec import SamplingSpec

DEFAULT_MAX_REJECTIONS = 10 ** 6


@dataclass(frozen=True)
class OracleEstimate:
    """Frequência Monte-Carlo de um rótulo e seu erro padrão binomial"""
    label: int
    estimate: float
    standard_error: float
    trials: int

    def z_score(self, expected: float) -> float:
        diff = self.estimate - expected
        if self.standard_error == 0.0:
            return 0.0 if diff == 0.0 else math.copysign(math.inf, diff)
        return diff / self.standard_error


def _acceptance_setup(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray,
                      instance_rates: Optional[Sequence[float]]):
    f_hat = normalize(pred, x)
    rates = s.rates_at(instance_rates)
    if rates.shape != f_hat.shape:
        raise DomainError(f"SamplingSpec com {rates.shape[0]} taxas para {f_hat.shape[0]} rótulos")
    if float(np.sum(f_hat * rates)) <= 0.0:
        raise RejectionLimitError("Massa de aceitação nula: nenhum rótulo com f > 0 e s > 0 neste x")
    return f_hat, rates


def generative_draw(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray, rng: np.random.Generator,
                    max_rejections: int = DEFAULT_MAX_REJECTIONS,
                    instance_rates: Optional[Sequence[float]] = None) -> int:
    """
    Processo gerativo com rejeição: sorteia y* ~ f̂(x, ·), aceita com probabilidade s(x, y*)

    Args:
        pred: Preditor
        s: Função de amostragem
        x: FeatureVector
        rng: Gerador semeado (nunca compartilhado entre consumidores)
        max_rejections: Limite de rejeições consecutivas

    Returns:
        int: Primeiro rótulo aceito
    """
    f_hat, rates = _acceptance_setup(pred, s, x, instance_rates)
    k = f_hat.shape[0]
    for _ in range(max_rejections):
        candidate = int(rng.choice(k, p=f_hat))
        if rng.random() < rates[candidate]:
            return candidate
    raise RejectionLimitError(f"{max_rejections} rejeições consecutivas; massa de aceitação muito baixa")


def monte_carlo_label_frequencies(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray, trials: int,
                                  rng: np.random.Generator,
                                  max_rejections: int = DEFAULT_MAX_REJECTIONS,
                                  instance_rates: Optional[Sequence[float]] = None) -> List[OracleEstimate]:
    """
    Executa o processo gerativo `trials` vezes em rodadas vetorizadas

    Cada rodada propõe um candidato para todos os ensaios ainda pendentes;
    a distribuição de saída é a mesma de repetir generative_draw.

    Returns:
        List[OracleEstimate]: Uma estimativa por rótulo
    """
    if trials < 1:
        raise DomainError(f"trials deve ser >= 1, recebeu {trials}")
    f_hat, rates = _acceptance_setup(pred, s, x, instance_rates)
    k = f_hat.shape[0]

    counts = np.zeros(k, dtype=np.int64)
    pending = trials
    rounds = 0
    while pending:
        if rounds >= max_rejections:
            raise RejectionLimitError(
                f"{pending} ensaio(s) com {max_rejections} rejeições consecutivas; massa de aceitação muito baixa"
            )
        candidates = rng.choice(k, size=pending, p=f_hat)
        accepted = rng.random(pending) < rates[candidates]
        counts += np.bincount(candidates[accepted], minlength=k)
        pending -= int(accepted.sum())
        rounds += 1

    console.debug(f"🧪 Oráculo: {trials} ensaios em {rounds} rodada(s)")
    frequencies = counts / trials
    return [
        OracleEstimate(label, float(p), math.sqrt(p * (1.0 - p) / trials), trials)
        for label, p in enumerate(frequencies)
    ]


def monte_carlo_corrected_prob(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray, y: int, trials: int,
                               rng: np.random.Generator,
                               max_rejections: int = DEFAULT_MAX_REJECTIONS,
                               instance_rates: Optional[Sequence[float]] = None) -> OracleEstimate:
    """Estimativa Monte-Carlo de P(y | x, h, s) com erro padrão sqrt(p̂(1 - p̂) / trials)"""
    y = pred.label_space.check_index(y)
    return monte_carlo_label_frequencies(pred, s, x, trials, rng, max_rejections, instance_rates)[y]
