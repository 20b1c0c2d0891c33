"""
Fórmulas gerais de correção de viés amostral para rótulos discretos

P(y | x, h, s) = f(x, y) s(x, y) / Σ_y' f(x, y') s(x, y')
"""

from typing import Optional, Sequence

import numpy as np
from scipy.special import logsumexp

from core.errors import DomainError, ZeroMassError
from .dataset import Dataset
from .predictors import DiscretePredictor
from .sampling_spec import SamplingSpec


def _checked_rel_probs(pred: DiscretePredictor, x: np.ndarray) -> np.ndarray:
    f = np.asarray(pred.rel_probs(x), dtype=np.float64)
    if not np.all(np.isfinite(f)) or np.any(f < 0.0):
        raise DomainError(f"rel_prob deve ser finita e >= 0, recebeu {f.tolist()}")
    return f


def normalize(pred: DiscretePredictor, x: np.ndarray) -> np.ndarray:
    """
    Probabilidade normalizada f̂(x, ·)

    Args:
        pred: Preditor com probabilidade relativa
        x: FeatureVector

    Returns:
        np.ndarray: Distribuição sobre os rótulos (soma 1)
    """
    f = _checked_rel_probs(pred, x)
    total = f.sum()
    if total <= 0.0:
        raise ZeroMassError("Todas as probabilidades relativas são zero neste x; não há como normalizar")
    return f / total


def corrected_probs(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray,
                    instance_rates: Optional[Sequence[float]] = None) -> np.ndarray:
    """Distribuição corrigida P(· | x, h, s) sobre todos os rótulos"""
    f = _checked_rel_probs(pred, x)
    rates = s.rates_at(instance_rates)
    if rates.shape != f.shape:
        raise DomainError(f"SamplingSpec com {rates.shape[0]} taxas para {f.shape[0]} rótulos")
    mass = f * rates
    total = mass.sum()
    if total <= 0.0:
        raise ZeroMassError("A amostragem anula toda a massa de rótulos neste x (Σ f·s = 0)")
    return mass / total


def corrected_prob(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray, y: int,
                   instance_rates: Optional[Sequence[float]] = None) -> float:
    """
    Probabilidade corrigida P(y | x, h, s)

    Args:
        pred: Preditor (f não precisa estar normalizada)
        s: Função de amostragem
        x: FeatureVector
        y: Índice do rótulo
        instance_rates: Taxas da instância no modo per-instance

    Returns:
        float: Probabilidade em [0, 1]
    """
    y = pred.label_space.check_index(y)
    return float(corrected_probs(pred, s, x, instance_rates)[y])


def corrected_nll(data: Dataset, pred: DiscretePredictor, s: SamplingSpec, reg: float = 0.0) -> float:
    """
    Negative log-likelihood corrigida:
    Σ_n [ -ln f(x_n, y_n) - ln s(x_n, y_n) + ln Σ_y f(x_n, y) s(x_n, y) ] + r(h)

    Args:
        data: Dataset observado (amostrado)
        pred: Preditor
        s: Função de amostragem que gerou o Dataset
        reg: Valor do regularizador r(h), tratado como termo aditivo

    Returns:
        float: Perda total
    """
    if len(data) == 0:
        return float(reg)

    f = pred.rel_prob_matrix(data.features)
    if not np.all(np.isfinite(f)) or np.any(f < 0.0):
        raise DomainError("rel_prob deve ser finita e >= 0 em todas as instâncias")
    rates = s.rate_matrix(data)
    rows = np.arange(len(data))

    mass = (f * rates).sum(axis=1)
    if np.any(mass <= 0.0):
        bad = int(np.flatnonzero(mass <= 0.0)[0])
        raise ZeroMassError("A amostragem anula toda a massa de rótulos", location=f"instância {bad}")

    observed_rate = rates[rows, data.labels]
    if np.any(observed_rate <= 0.0):
        bad = int(np.flatnonzero(observed_rate <= 0.0)[0])
        raise DomainError("Instância observada com s(x, y) = 0: não poderia ter sido amostrada",
                          location=f"instância {bad}")

    observed_f = f[rows, data.labels]
    if np.any(observed_f <= 0.0):
        bad = int(np.flatnonzero(observed_f <= 0.0)[0])
        raise DomainError("Instância observada com f(x, y) = 0: impossível sob o preditor",
                          location=f"instância {bad}")

    terms = -np.log(observed_f) - np.log(observed_rate) + np.log(mass)
    return float(terms.sum() + reg)


def recursion_residual(pred: DiscretePredictor, s: SamplingSpec, x: np.ndarray, y: int, p: float,
                       instance_rates: Optional[Sequence[float]] = None) -> float:
    """
    Resíduo da equação recursiva do processo gerativo:
    Σ_y' f̂(x, y') [ s(x, y') 1(y = y') + (1 - s(x, y')) p ] - p

    Zero (até arredondamento) quando p = corrected_prob(pred, s, x, y).
    """
    y = pred.label_space.check_index(y)
    f_hat = normalize(pred, x)
    rates = s.rates_at(instance_rates)
    indicator = np.zeros_like(f_hat)
    indicator[y] = 1.0
    return float(np.sum(f_hat * (rates * indicator + (1.0 - rates) * p)) - p)


def candidate_posterior(data: Dataset, candidates: Sequence[DiscretePredictor], s: SamplingSpec,
                        log_priors: Optional[Sequence[float]] = None) -> np.ndarray:
    """
    Posterior normalizado sobre um espaço finito de preditores, com verossimilhança corrigida

    Args:
        data: Dataset amostrado
        candidates: Preditores candidatos
        s: Função de amostragem
        log_priors: ln P(h) (não normalizado); omitido = prior uniforme

    Returns:
        np.ndarray: P(h | D, s) para cada candidato
    """
    if not candidates:
        raise DomainError("candidate_posterior exige pelo menos um candidato")
    if log_priors is None:
        log_priors = np.zeros(len(candidates))
    log_priors = np.asarray(log_priors, dtype=np.float64)
    if log_priors.shape != (len(candidates),):
        raise DomainError(f"{log_priors.shape[0]} priors para {len(candidates)} candidatos")

    log_post = np.array([-corrected_nll(data, h, s) for h in candidates]) + log_priors
    return np.exp(log_post - logsumexp(log_post))
