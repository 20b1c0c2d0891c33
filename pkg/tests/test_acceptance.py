"""
Recuperação ponta a ponta: c* = -2, w* = (1.0, -0.5), n = 200.000,
subamostragem de 10% dos negativos (s_r = 0.1)
"""

import math

import numpy as np
import pytest
from scipy.special import expit

from core.cli import run
from core.data_io import read_model
from core.datagen import GenSpec, generate
from core.evaluation import evaluate
from core.logistic import LogisticModel, target_prob, train
from core.model import SamplingSpec
from core.sampling import downsample

TRUE_INTERCEPT = -2.0
TRUE_WEIGHTS = [1.0, -0.5]
S_R = 0.1
TOLERANCE = 0.05

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def trained_models():
    population = generate(GenSpec(n=200_000, feature_count=2, true_intercept=TRUE_INTERCEPT,
                                  true_weights=TRUE_WEIGHTS, seed=0))
    spec = SamplingSpec.constant([S_R, 1.0])
    sample, _ = downsample(population, spec, seed=0)
    corrected = train(sample, spec).model
    uncorrected = train(sample, SamplingSpec.uniform(1.0)).model
    return corrected, uncorrected


@pytest.fixture(scope="module")
def held_out():
    """Conjunto sem viés, independente do treino"""
    return generate(GenSpec(n=2_000_000, feature_count=2, true_intercept=TRUE_INTERCEPT,
                            true_weights=TRUE_WEIGHTS, seed=1))


class TestBiasCorrection:

    def test_shift_algebra(self):
        """Amostrar com s_r constante transforma a condicional em sigmoide(c - ln s_r + w · x)"""
        rng = np.random.default_rng(5)
        model = LogisticModel(TRUE_INTERCEPT, TRUE_WEIGHTS)
        for _ in range(100):
            x = rng.normal(size=2)
            p = expit(TRUE_INTERCEPT + x @ np.array(TRUE_WEIGHTS))
            biased = p / (p + S_R * (1 - p))
            assert biased == pytest.approx(expit(TRUE_INTERCEPT - math.log(S_R) + x @ np.array(TRUE_WEIGHTS)),
                                           rel=1e-12)
            assert target_prob(model, x, S_R) == pytest.approx(biased, rel=1e-12)

    def test_corrected_recovers_truth(self, trained_models):
        corrected, _ = trained_models
        assert abs(corrected.intercept - TRUE_INTERCEPT) <= TOLERANCE
        assert np.max(np.abs(corrected.weights - TRUE_WEIGHTS)) <= TOLERANCE

    def test_uncorrected_intercept_is_shifted(self, trained_models):
        _, uncorrected = trained_models
        assert abs(uncorrected.intercept - (TRUE_INTERCEPT - math.log(S_R))) <= TOLERANCE
        assert uncorrected.intercept == pytest.approx(0.3026, abs=TOLERANCE)
        assert np.max(np.abs(uncorrected.weights - TRUE_WEIGHTS)) <= TOLERANCE


class TestCalibration:

    def test_corrected_model_is_calibrated(self, trained_models, held_out):
        corrected, _ = trained_models
        assert evaluate(corrected, held_out).max_calibration_gap(min_count=500) <= 0.02

    def test_uncorrected_model_is_not(self, trained_models, held_out):
        _, uncorrected = trained_models
        report = evaluate(uncorrected, held_out, s_r_deploy=1.0)
        assert report.max_calibration_gap(min_count=500) > 0.02
        overconfident = [b for b in report.bins if b.count >= 500 and b.gap > 0.02]
        assert overconfident

    def test_deploying_with_training_ratio_matches_sample(self, trained_models, held_out):
        corrected, _ = trained_models
        sample, _ = downsample(held_out, SamplingSpec.constant([S_R, 1.0]), seed=2)
        assert evaluate(corrected, sample, s_r_deploy=S_R).max_calibration_gap(min_count=500) <= 0.02


class TestDeterminism:

    def _pipeline(self, workdir):
        data, sample, model = workdir / "data.csv", workdir / "sample.csv", workdir / "model.json"
        assert run(["generate", "--n", "200000", "--features", "2", "--intercept", "-2", "--weights=1.0,-0.5",
                    "--seed", "0", "--out", str(data)]) == 0
        assert run(["sample", "--in", str(data), "--s0", "0.1", "--s1", "1", "--seed", "0",
                    "--out", str(sample)]) == 0
        assert run(["train", "--in", str(sample), "--manifest", str(workdir / "sample.manifest.json"),
                    "--out-model", str(model)]) == 0
        return [data, workdir / "data.truth.json", sample, workdir / "sample.manifest.json", model]

    def test_repeated_pipeline_is_byte_identical(self, tmp_path):
        first_dir, second_dir = tmp_path / "first", tmp_path / "second"
        first_dir.mkdir()
        second_dir.mkdir()
        first = self._pipeline(first_dir)
        second = self._pipeline(second_dir)
        for a, b in zip(first, second):
            assert a.read_bytes() == b.read_bytes(), a.name

    def test_cli_model_recovers_truth(self, tmp_path):
        self._pipeline(tmp_path)
        model = read_model(tmp_path / "model.json")
        assert abs(model.intercept - TRUE_INTERCEPT) <= TOLERANCE
        assert np.max(np.abs(model.weights - TRUE_WEIGHTS)) <= TOLERANCE
