"""
Perdas e gradientes da regressão logística binária sob viés amostral

Perda total: Σ_n [ ln(s_r(x_n) + e^{z_n}) - y_n z_n ] + ½ λ (w · w), com z_n = c + w · x_n.
O intercepto não é regularizado.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from core.errors import DomainError
from core.model import Dataset, SamplingSpec
from .model import LogisticModel, SampleRatioView
from .numerics import log_sr_plus_exp, shifted_sigmoid


def _check_binary(k: int):
    if k != 2:
        raise DomainError(f"A regressão logística é binária; SamplingSpec/Dataset com {k} rótulos")


def sample_ratio(s: SamplingSpec, x: Optional[np.ndarray] = None,
                 instance_rates: Optional[Sequence[float]] = None, training: bool = True) -> float:
    """
    Razão de amostragem s_r(x) = s(x, 0) / s(x, 1)

    Args:
        s: Função de amostragem binária
        x: FeatureVector (as taxas constantes não dependem de x)
        instance_rates: Taxas da instância no modo per-instance
        training: Se True, s(x, 0) = 0 também é rejeitado

    Returns:
        float: s_r > 0
    """
    rates = s.rates_at(instance_rates)
    _check_binary(rates.shape[0])
    s0, s1 = float(rates[0]), float(rates[1])
    if s1 == 0.0:
        raise DomainError("s(x, 1) = 0: razão de amostragem infinita não é suportada")
    if training and s0 == 0.0:
        raise DomainError("s(x, 0) = 0: razão de amostragem nula não é suportada no treino")
    return s0 / s1


def sample_ratios(data: Dataset, s: SamplingSpec, training: bool = True) -> SampleRatioView:
    """Materializa s_r para todas as instâncias do Dataset"""
    _check_binary(data.label_space.size)
    rates = s.rate_matrix(data)
    if len(data) == 0:
        return SampleRatioView(np.zeros(0), s.mode)
    s0, s1 = rates[:, 0], rates[:, 1]
    if np.any(s1 == 0.0):
        bad = int(np.flatnonzero(s1 == 0.0)[0])
        raise DomainError("s(x, 1) = 0: razão de amostragem infinita", location=f"instância {bad}")
    if training and np.any(s0 == 0.0):
        bad = int(np.flatnonzero(s0 == 0.0)[0])
        raise DomainError("s(x, 0) = 0: razão de amostragem nula no treino", location=f"instância {bad}")
    ratios = np.ascontiguousarray(s0 / s1)
    ratios.setflags(write=False)
    return SampleRatioView(ratios, s.mode)


def _check_ratio(s_r):
    if np.any(~np.isfinite(s_r)) or np.any(np.asarray(s_r) <= 0.0):
        raise DomainError(f"s_r deve ser finito e > 0, recebeu {s_r}")


def target_prob(m: LogisticModel, x: np.ndarray, s_r: float = 1.0) -> float:
    """
    Probabilidade da condição alvo P(y = 1 | x, c, w, s) = e^z / (s_r + e^z)

    Args:
        m: Modelo logístico
        x: FeatureVector
        s_r: Razão de amostragem (> 0)

    Returns:
        float: Probabilidade em [0, 1]
    """
    _check_ratio(s_r)
    return float(shifted_sigmoid(m.logit(x), s_r))


def target_probs(m: LogisticModel, features: np.ndarray, s_r) -> np.ndarray:
    """Versão vetorizada de target_prob (s_r escalar ou por instância)"""
    _check_ratio(s_r)
    return shifted_sigmoid(m.logits(features), s_r)


def instance_loss(m: LogisticModel, x: np.ndarray, y: int, s_r: float) -> float:
    """Perda simplificada de uma instância: ln(s_r + e^z) - y z"""
    _check_ratio(s_r)
    y = _check_label(y)
    z = m.logit(x)
    return float(log_sr_plus_exp(z, s_r) - y * z)


def full_instance_nll(m: LogisticModel, x: np.ndarray, y: int, s_r: float) -> float:
    """-ln P(y | x, c, w, s) completo: ln(s_r + e^z) - y z - (1 - y) ln s_r"""
    y = _check_label(y)
    return instance_loss(m, x, y, s_r) - (1 - y) * float(np.log(s_r))


def _check_label(y) -> int:
    if y not in (0, 1):
        raise DomainError(f"Rótulo {y!r} fora de {{0, 1}}")
    return int(y)


def _resolve(data: Dataset, s: SamplingSpec, ratios: Optional[SampleRatioView]) -> np.ndarray:
    return (ratios if ratios is not None else sample_ratios(data, s)).ratios


def total_loss(data: Dataset, m: LogisticModel, s: SamplingSpec, lam: float,
               ratios: Optional[SampleRatioView] = None) -> float:
    """
    Perda total corrigida com regularização L2 nos pesos

    Args:
        data: Dataset amostrado
        m: Modelo logístico
        s: Função de amostragem
        lam: Precisão λ do prior gaussiano nos pesos
        ratios: s_r pré-computado (opcional)

    Returns:
        float: Σ_n instance_loss + ½ λ (w · w)
    """
    regularizer = 0.5 * lam * float(m.weights @ m.weights)
    if len(data) == 0:
        return regularizer
    s_r = _resolve(data, s, ratios)
    z = m.logits(data.features)
    return float(np.sum(log_sr_plus_exp(z, s_r) - data.labels * z) + regularizer)


def gradient(data: Dataset, m: LogisticModel, s: SamplingSpec, lam: float,
             ratios: Optional[SampleRatioView] = None) -> Tuple[float, np.ndarray]:
    """
    Gradiente na forma com probabilidades pré-computadas:
    d_c = Σ_n (P_n - y_n),  d_w = Σ_n x_n (P_n - y_n) + λ w
    """
    if len(data) == 0:
        return 0.0, lam * m.weights
    s_r = _resolve(data, s, ratios)
    residual = shifted_sigmoid(m.logits(data.features), s_r) - data.labels
    return float(residual.sum()), data.features.T @ residual + lam * m.weights


def gradient_explicit(data: Dataset, m: LogisticModel, s: SamplingSpec, lam: float,
                      ratios: Optional[SampleRatioView] = None) -> Tuple[float, np.ndarray]:
    """Gradiente na forma explícita, com e^z / (s_r + e^z) calculado em linha"""
    if len(data) == 0:
        return 0.0, lam * m.weights
    s_r = _resolve(data, s, ratios)
    z = m.logits(data.features)
    residual = np.exp(z - log_sr_plus_exp(z, s_r)) - data.labels
    d_w = np.array([np.sum(data.features[:, f] * residual) for f in range(data.feature_count)])
    return float(residual.sum()), d_w + lam * m.weights


def full_total_loss(data: Dataset, m: LogisticModel, s: SamplingSpec, lam: float,
                    ratios: Optional[SampleRatioView] = None) -> float:
    """Perda total com o termo -(1 - y_n) ln s_r, constante nos parâmetros"""
    if len(data) == 0:
        return total_loss(data, m, s, lam)
    s_r = _resolve(data, s, ratios)
    return total_loss(data, m, s, lam, SampleRatioView(s_r, s.mode)) - float(np.sum((1 - data.labels) * np.log(s_r)))


def full_gradient(data: Dataset, m: LogisticModel, s: SamplingSpec, lam: float,
                  ratios: Optional[SampleRatioView] = None) -> Tuple[float, np.ndarray]:
    """
    Gradiente de full_total_loss a partir de P(y_n | x_n) do rótulo observado:
    d(-ln P_obs)/dz = -(1 - P_obs) se y = 1, (1 - P_obs) se y = 0
    """
    if len(data) == 0:
        return 0.0, lam * m.weights
    s_r = _resolve(data, s, ratios)
    z = m.logits(data.features)
    y = data.labels
    log_p_obs = y * z + (1 - y) * np.log(s_r) - log_sr_plus_exp(z, s_r)
    sign = np.where(y == 1, -1.0, 1.0)
    dz = sign * -np.expm1(log_p_obs)
    return float(dz.sum()), data.features.T @ dz + lam * m.weights
