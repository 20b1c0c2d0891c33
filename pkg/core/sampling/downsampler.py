from typing import Tuple

import numpy as np

from core.console import console
from core.model import Dataset, SamplingSpec
from .counter_rng import counter_uniforms
from .manifest import SamplingManifest, SamplingSpecDocument


def retention_mask(data: Dataset, s: SamplingSpec, seed: int) -> np.ndarray:
    """Decide, instância a instância, se ela fica: u(seed, id) < s(x_n, y_n)"""
    if len(data) == 0:
        return np.zeros(0, dtype=bool)
    rates = s.rate_matrix(data)[np.arange(len(data)), data.labels]
    return counter_uniforms(seed, data.ids) < rates


def downsample(data: Dataset, s: SamplingSpec, seed: int) -> Tuple[Dataset, SamplingManifest]:
    """
    Subamostragem independente por instância (Bernoulli com probabilidade s(x_n, y_n))

    Args:
        data: Dataset original D+
        s: Função de amostragem
        seed: Semente do gerador baseado em contador

    Returns:
        Tuple (Dataset amostrado na ordem original, SamplingManifest)
    """
    mask = retention_mask(data, s, seed)
    sampled = data.subset(mask)

    manifest = SamplingManifest(
        seed=seed,
        spec=SamplingSpecDocument.from_spec(s),
        original_count=len(data),
        retained_count=len(sampled),
        per_label_retained=[int(c) for c in sampled.label_counts()],
        per_label_original=[int(c) for c in data.label_counts()],
    )

    console.info(f"🎲 Amostragem: {manifest.retained_count}/{manifest.original_count} instâncias mantidas "
                 f"(por rótulo: {manifest.per_label_retained})")
    console.details("Manifesto de amostragem", manifest.model_dump())
    return sampled, manifest
