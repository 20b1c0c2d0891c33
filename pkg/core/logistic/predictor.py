import numpy as np

from core.model import DiscretePredictor, LabelSpace
from .loss import target_prob, target_probs
from .model import LogisticModel


class LogisticPredictor(DiscretePredictor):
    """f(x, y) = e^{y (c + w · x)} sobre {0, 1}: a regressão logística vista pelo motor geral"""

    def __init__(self, model: LogisticModel):
        super().__init__(LabelSpace.binary())
        self.model = model

    def rel_probs(self, x: np.ndarray) -> np.ndarray:
        return np.array([1.0, np.exp(self.model.logit(x))])

    def rel_prob_matrix(self, features: np.ndarray) -> np.ndarray:
        z = self.model.logits(features)
        return np.column_stack([np.ones_like(z), np.exp(z)])


def predict(m: LogisticModel, x: np.ndarray, s_r_deploy: float = 1.0) -> float:
    """
    Probabilidade prevista de y = 1 na população de implantação

    Com s_r_deploy = 1 (padrão), devolve a probabilidade da população original, sem viés.
    """
    return target_prob(m, x, s_r_deploy)


def predict_many(m: LogisticModel, features: np.ndarray, s_r_deploy: float = 1.0) -> np.ndarray:
    return target_probs(m, features, s_r_deploy)
