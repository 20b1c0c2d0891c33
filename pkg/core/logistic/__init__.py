"""
ViesPy Logistic
Regressão logística binária com correção de viés amostral
"""

from .model import LogisticModel, SampleRatioView, TrainConfig, TrainReport
from .numerics import log_sr_plus_exp, shifted_sigmoid
from .loss import (
    sample_ratio,
    sample_ratios,
    target_prob,
    target_probs,
    instance_loss,
    full_instance_nll,
    total_loss,
    gradient,
    gradient_explicit,
    full_total_loss,
    full_gradient,
)
from .trainer import train
from .predictor import LogisticPredictor, predict, predict_many

__all__ = [
    'LogisticModel',
    'SampleRatioView',
    'TrainConfig',
    'TrainReport',
    'log_sr_plus_exp',
    'shifted_sigmoid',
    'sample_ratio',
    'sample_ratios',
    'target_prob',
    'target_probs',
    'instance_loss',
    'full_instance_nll',
    'total_loss',
    'gradient',
    'gradient_explicit',
    'full_total_loss',
    'full_gradient',
    'train',
    'LogisticPredictor',
    'predict',
    'predict_many',
]
