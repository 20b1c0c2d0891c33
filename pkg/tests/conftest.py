import numpy as np
import pytest

from core.console import console
from core.model import Dataset, LabelSpace


@pytest.fixture(autouse=True)
def reset_console():
    """O CLI altera o nível global do console; cada teste começa em INFO"""
    console.set_level("INFO")
    yield
    console.set_level("INFO")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def _binary_dataset(features, labels, rates=None, ids=None) -> Dataset:
    return Dataset(np.asarray(features, dtype=np.float64), np.asarray(labels), LabelSpace.binary(), rates, ids)


@pytest.fixture
def make_dataset():
    return _binary_dataset


@pytest.fixture
def small_dataset(rng) -> Dataset:
    features = rng.standard_normal((40, 3))
    labels = (rng.random(40) < 0.4).astype(np.int64)
    return _binary_dataset(features, labels)
