import numpy as np
from scipy.special import expit


def log_sr_plus_exp(z, s_r):
    """
    ln(s_r + e^z) estável: max(z, ln s_r) + ln(1 + e^{-|z - ln s_r|})
    """
    return np.logaddexp(z, np.log(s_r))


def shifted_sigmoid(z, s_r):
    """
    e^z / (s_r + e^z) sem overflow (sigmoide de z - ln s_r)
    """
    return expit(np.asarray(z, dtype=np.float64) - np.log(s_r))
