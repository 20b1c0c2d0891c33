"""
ViesPy Sampling
Subamostragem independente por instância com manifesto de proveniência
"""

from .counter_rng import counter_uniforms
from .manifest import SamplingManifest, SamplingSpecDocument
from .downsampler import downsample, retention_mask
from .presets import LION_PLANS, sampling_plan

__all__ = [
    'counter_uniforms',
    'SamplingManifest',
    'SamplingSpecDocument',
    'downsample',
    'retention_mask',
    'LION_PLANS',
    'sampling_plan',
]
