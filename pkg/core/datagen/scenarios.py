import numpy as np

from core.model import Dataset, LabelSpace


def lion_scenario(n_negative: int = 400_000, n_positive: int = 2_000, feature_count: int = 2,
                  separation: float = 1.0, seed: int = 0) -> Dataset:
    """
    Conjunto com o formato do exemplo de reconhecimento de imagens: poucos positivos, muitos negativos

    Os positivos têm features deslocadas em `separation` para que haja sinal a aprender;
    a posição dos positivos é embaralhada.
    """
    rng = np.random.default_rng(seed)
    n = n_negative + n_positive
    labels = np.zeros(n, dtype=np.int64)
    labels[rng.permutation(n)[:n_positive]] = 1
    features = rng.standard_normal((n, feature_count)) + separation * labels[:, None]
    return Dataset(features, labels, LabelSpace.binary())
