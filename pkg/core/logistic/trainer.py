import time
from typing import Optional

import numpy as np

from core.console import console
from core.errors import DomainError
from core.model import Dataset, SamplingSpec
from .loss import gradient, sample_ratios, total_loss
from .model import LogisticModel, SampleRatioView, TrainConfig, TrainReport

_ROUNDING = 64 * np.finfo(np.float64).eps


def _max_norm(d_c: float, d_w: np.ndarray) -> float:
    return max(abs(d_c), float(np.max(np.abs(d_w)))) if d_w.size else abs(d_c)


def train(data: Dataset, s: SamplingSpec, config: Optional[TrainConfig] = None,
          ratios: Optional[SampleRatioView] = None) -> TrainReport:
    """
    Estimativa MAP da regressão logística corrigida por gradiente descendente

    Parte de c = 0, w = 0. Para quando a norma máxima do gradiente fica abaixo de grad_tol
    ou após max_iters iterações. Com backtracking, o passo é reduzido à metade até
    satisfazer a condição de Armijo.

    Args:
        data: Dataset amostrado (rótulos {0, 1})
        s: Função de amostragem que gerou o Dataset
        config: Configuração do treino
        ratios: s_r pré-computado (opcional)

    Returns:
        TrainReport: Modelo ajustado e trilhas do treino
    """
    config = config or TrainConfig()
    if not data.label_space.is_binary:
        raise DomainError(f"Treino logístico exige rótulos {{0, 1}}, recebeu {data.label_space.labels}")
    ratios = ratios if ratios is not None else sample_ratios(data, s, training=True)

    def loss_at(m: LogisticModel) -> float:
        return total_loss(data, m, s, config.lam, ratios)

    def grad_at(m: LogisticModel):
        return gradient(data, m, s, config.lam, ratios)

    model = LogisticModel.zeros(data.feature_count)
    loss = loss_at(model)
    d_c, d_w = grad_at(model)
    grad_norm = _max_norm(d_c, d_w)
    report = TrainReport(model=model, loss_trace=[loss], grad_norm_trace=[grad_norm])

    console.info(f"🏋️ Treinando com {len(data)} instâncias, |F| = {data.feature_count}, λ = {config.lam}")
    started = time.time()
    step = config.learning_rate

    for iteration in range(config.max_iters):
        if grad_norm < config.grad_tol:
            report.stop_reason = "grad-tol"
            break

        if config.backtracking:
            g2 = d_c * d_c + float(d_w @ d_w)
            resolution = _ROUNDING * max(abs(loss), 1.0)
            t = step
            for _ in range(config.max_halvings):
                candidate = model.step(d_c, d_w, t)
                candidate_loss = loss_at(candidate)
                if candidate_loss <= loss - config.armijo * t * g2:
                    break
                # decréscimo abaixo da resolução da perda: aceita se o gradiente diminui
                if loss - resolution <= candidate_loss <= loss and _max_norm(*grad_at(candidate)) < grad_norm:
                    break
                t *= 0.5
            else:
                report.stop_reason = "line-search-stalled"
                console.debug(f"⚠️ Busca linear sem decréscimo na iteração {iteration}")
                break
            step = min(config.learning_rate, 2.0 * t)
        else:
            candidate = model.step(d_c, d_w, config.learning_rate)
            candidate_loss = loss_at(candidate)
            if not np.isfinite(candidate_loss):
                raise DomainError(f"Treino divergiu na iteração {iteration}; reduza a taxa de aprendizado")

        model, loss = candidate, candidate_loss
        d_c, d_w = grad_at(model)
        grad_norm = _max_norm(d_c, d_w)
        report.loss_trace.append(loss)
        report.grad_norm_trace.append(grad_norm)
        report.iterations = iteration + 1

        if report.iterations % 500 == 0:
            console.debug(f"🏋️ Iteração {report.iterations}: perda {loss:.10g}, |grad|∞ {grad_norm:.3e}")
    else:
        if grad_norm < config.grad_tol:
            report.stop_reason = "grad-tol"

    report.model = model
    report.final_grad_norm = grad_norm
    report.converged = grad_norm < config.grad_tol
    elapsed = (time.time() - started) * 1000

    status = "✅ convergiu" if report.converged else f"⚠️ parou ({report.stop_reason})"
    console.info(f"🏋️ {status} após {report.iterations} iterações em {round(elapsed, 2)}ms")
    console.details("Treino", {
        "iterations": report.iterations,
        "final_loss": loss,
        "final_grad_norm": grad_norm,
        "stop_reason": report.stop_reason,
        "intercept": model.intercept,
        "weights": model.weights.tolist(),
    })
    return report
