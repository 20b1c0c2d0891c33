"""
ViesPy Core Model
Maquinário geral de correção de viés para rótulos discretos
"""

from .labels import LabelSpace
from .dataset import Dataset, LabeledInstance, as_feature_vector
from .predictors import DiscretePredictor, TabulatedPredictor, SoftmaxLinearPredictor, FunctionPredictor
from .sampling_spec import SamplingSpec
from .correction import (
    normalize,
    corrected_probs,
    corrected_prob,
    corrected_nll,
    recursion_residual,
    candidate_posterior,
)
from .oracle import (
    OracleEstimate,
    DEFAULT_MAX_REJECTIONS,
    generative_draw,
    monte_carlo_label_frequencies,
    monte_carlo_corrected_prob,
)

__all__ = [
    'LabelSpace',
    'Dataset',
    'LabeledInstance',
    'as_feature_vector',
    'DiscretePredictor',
    'TabulatedPredictor',
    'SoftmaxLinearPredictor',
    'FunctionPredictor',
    'SamplingSpec',
    'normalize',
    'corrected_probs',
    'corrected_prob',
    'corrected_nll',
    'recursion_residual',
    'candidate_posterior',
    'OracleEstimate',
    'DEFAULT_MAX_REJECTIONS',
    'generative_draw',
    'monte_carlo_label_frequencies',
    'monte_carlo_corrected_prob',
]
