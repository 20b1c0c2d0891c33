"""
ViesPy Evaluation
Calibração, NLL médio, erro de parâmetros e relatórios de texto
"""

from .metrics import (
    CalibrationBin,
    EvaluationReport,
    calibration_table,
    mean_nll,
    parameter_error,
    evaluate,
)
from .renderer import ReportRenderer

__all__ = [
    'CalibrationBin',
    'EvaluationReport',
    'calibration_table',
    'mean_nll',
    'parameter_error',
    'evaluate',
    'ReportRenderer',
]
