from typing import Dict

from core.model import SamplingSpec

# Três propostas para um conjunto com rótulo raro (y = 1) e muitos negativos
LION_PLANS: Dict[str, SamplingSpec] = {
    "all": SamplingSpec.constant([1.0, 1.0]),
    "uniform-quarter": SamplingSpec.constant([0.25, 0.25]),
    "negatives-quarter": SamplingSpec.constant([0.25, 1.0]),
}


def sampling_plan(name: str) -> SamplingSpec:
    """Devolve um plano de amostragem pré-definido pelo nome"""
    try:
        return LION_PLANS[name]
    except KeyError:
        raise KeyError(f"Plano de amostragem desconhecido: {name} (disponíveis: {', '.join(LION_PLANS)})") from None
