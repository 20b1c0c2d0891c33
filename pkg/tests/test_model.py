"""Testes do maquinário geral de correção (rótulos discretos)"""

import math

import numpy as np
import pytest
from scipy.special import expit

from core.errors import DomainError, ZeroMassError
from core.model import (
    Dataset,
    FunctionPredictor,
    LabelSpace,
    SamplingSpec,
    SoftmaxLinearPredictor,
    TabulatedPredictor,
    as_feature_vector,
    candidate_posterior,
    corrected_nll,
    corrected_prob,
    corrected_probs,
    normalize,
    recursion_residual,
)

NO_FEATURES = np.zeros(0)


def _label_only_dataset(labels, k=2) -> Dataset:
    labels = np.asarray(labels)
    return Dataset(np.zeros((labels.shape[0], 0)), labels, LabelSpace.of_size(k))


class TestLabelSpace:

    def test_binary_order(self):
        space = LabelSpace.binary()
        assert space.labels == (0, 1)
        assert space.is_binary
        assert space.index_of(1) == 1

    def test_needs_two_distinct_labels(self):
        with pytest.raises(DomainError):
            LabelSpace(("a",))
        with pytest.raises(DomainError):
            LabelSpace(("a", "a"))

    def test_check_index(self):
        space = LabelSpace.of_size(3)
        assert space.check_index(2) == 2
        for bad in (3, -1, 1.5, True):
            with pytest.raises(DomainError):
                space.check_index(bad)


class TestDataset:

    def test_default_ids_and_read_only(self, make_dataset):
        data = make_dataset([[1.0], [2.0], [3.0]], [0, 1, 1])
        assert data.ids.tolist() == [0, 1, 2]
        assert data.has_default_ids
        with pytest.raises(ValueError):
            data.features[0, 0] = 9.0

    def test_caller_arrays_stay_writable(self):
        features = np.zeros((2, 1))
        labels = np.array([0, 1], dtype=np.int64)
        rates = np.full((2, 2), 0.5)
        ids = np.array([3, 7], dtype=np.int64)
        data = Dataset(features, labels, LabelSpace.binary(), rates, ids)
        features[0, 0] = 1.0
        labels[0] = 1
        rates[0, 0] = 1.0
        ids[0] = 4
        assert data.features[0, 0] == 0.0
        assert data.labels.tolist() == [0, 1]
        assert data.rates[0, 0] == 0.5
        assert data.ids.tolist() == [3, 7]

    def test_subset_keeps_ids_and_rates(self, make_dataset):
        rates = [[0.5, 1.0], [0.25, 1.0], [1.0, 1.0]]
        data = make_dataset([[1.0], [2.0], [3.0]], [0, 1, 0], rates=rates)
        sub = data.subset(np.array([True, False, True]))
        assert sub.ids.tolist() == [0, 2]
        assert not sub.has_default_ids
        np.testing.assert_array_equal(sub.rates, [[0.5, 1.0], [1.0, 1.0]])
        assert len(data.subset([])) == 0

    def test_label_counts(self, make_dataset):
        data = make_dataset(np.zeros((5, 1)), [0, 1, 1, 0, 1])
        assert data.label_counts().tolist() == [2, 3]

    @pytest.mark.parametrize("labels", [[0, 2], [0, -1], [0.5, 1]])
    def test_rejects_labels_outside_space(self, make_dataset, labels):
        with pytest.raises(DomainError):
            make_dataset(np.zeros((2, 1)), labels)

    def test_rejects_non_finite_features(self, make_dataset):
        with pytest.raises(DomainError):
            make_dataset([[np.nan], [1.0]], [0, 1])

    def test_rejects_rates_outside_unit_interval(self, make_dataset):
        with pytest.raises(DomainError):
            make_dataset([[1.0]], [0], rates=[[1.5, 1.0]])

    def test_feature_vector(self):
        assert as_feature_vector([1, 2], 2).dtype == np.float64
        with pytest.raises(DomainError):
            as_feature_vector([1.0, np.inf])
        with pytest.raises(DomainError):
            as_feature_vector([1.0], feature_count=2)


class TestSamplingSpec:

    def test_constant_rates_validated(self):
        assert SamplingSpec.uniform(0.5, 3).rates.tolist() == [0.5, 0.5, 0.5]
        with pytest.raises(DomainError):
            SamplingSpec.constant([1.2, 1.0])
        with pytest.raises(DomainError):
            SamplingSpec.constant([0.5])

    def test_per_instance_needs_instance_rates(self, make_dataset):
        spec = SamplingSpec.per_instance()
        with pytest.raises(DomainError):
            spec.rates_at()
        with pytest.raises(DomainError):
            spec.rate_matrix(make_dataset([[0.0]], [1]))
        np.testing.assert_array_equal(spec.rates_at([0.25, 1.0]), [0.25, 1.0])

    def test_description_round_trip(self):
        spec = SamplingSpec.constant([0.25, 1.0])
        again = SamplingSpec.from_description(spec.describe())
        assert again.mode == "constant"
        assert again.rates.tolist() == [0.25, 1.0]


class TestNormalize:

    def test_symmetric(self):
        np.testing.assert_array_equal(normalize(TabulatedPredictor([1.0, 1.0]), NO_FEATURES), [0.5, 0.5])

    def test_three_labels_with_zero(self):
        np.testing.assert_allclose(normalize(TabulatedPredictor([2.0, 6.0, 0.0]), NO_FEATURES), [0.25, 0.75, 0.0])

    def test_sigmoid_form(self, rng):
        for _ in range(20):
            z = rng.normal(scale=5.0)
            pred = FunctionPredictor(lambda x, z=z: [1.0, math.exp(z)], LabelSpace.binary())
            np.testing.assert_allclose(normalize(pred, NO_FEATURES), [expit(-z), expit(z)], rtol=1e-12)

    def test_zero_mass(self):
        with pytest.raises(ZeroMassError):
            normalize(TabulatedPredictor([0.0, 0.0]), NO_FEATURES)

    def test_negative_relative_probability(self):
        with pytest.raises(DomainError):
            normalize(TabulatedPredictor([1.0, -0.5]), NO_FEATURES)


class TestCorrectedProb:

    def test_three_label_example(self):
        probs = corrected_probs(TabulatedPredictor([1.0, 2.0, 1.0]), SamplingSpec.constant([1.0, 0.5, 0.25]),
                                NO_FEATURES)
        np.testing.assert_allclose(probs, [1 / 2.25, 1 / 2.25, 0.25 / 2.25], rtol=1e-15)

    def test_quarter_of_negatives(self):
        p = corrected_prob(TabulatedPredictor([1.0, 1.0]), SamplingSpec.constant([0.25, 1.0]), NO_FEATURES, 1)
        assert p == pytest.approx(0.8, abs=1e-15)

    def test_uniform_sampling_reduces_to_normalize(self, rng):
        """1000 casos aleatórios de s constante = p em todos os rótulos"""
        for _ in range(1000):
            k = int(rng.integers(2, 6))
            f = rng.uniform(0.0, 10.0, size=k)
            p = rng.uniform(0.01, 1.0)
            pred = TabulatedPredictor(f)
            expected = normalize(pred, NO_FEATURES)
            got = corrected_probs(pred, SamplingSpec.uniform(p, k), NO_FEATURES)
            np.testing.assert_allclose(got, expected, rtol=0, atol=1e-12)

    def test_scale_invariance(self, rng):
        f = rng.uniform(0.1, 2.0, size=4)
        s = SamplingSpec.constant(rng.uniform(0.05, 1.0, size=4))
        base = corrected_probs(TabulatedPredictor(f), s, NO_FEATURES)
        for alpha in (1e-3, 7.0, 1e5):
            np.testing.assert_allclose(corrected_probs(TabulatedPredictor(alpha * f), s, NO_FEATURES), base,
                                       rtol=1e-12)

    def test_sums_to_one_with_features(self, rng):
        pred = SoftmaxLinearPredictor(rng.normal(size=3), rng.normal(size=(3, 2)))
        s = SamplingSpec.constant([0.2, 0.7, 1.0])
        for _ in range(50):
            probs = corrected_probs(pred, s, rng.normal(size=2))
            assert probs.sum() == pytest.approx(1.0, abs=1e-12)
            assert np.all(probs >= 0.0)

    def test_per_instance_rates(self):
        pred = TabulatedPredictor([1.0, 1.0])
        p = corrected_prob(pred, SamplingSpec.per_instance(), NO_FEATURES, 1, instance_rates=[0.25, 1.0])
        assert p == pytest.approx(0.8)

    def test_sampling_removes_all_mass(self):
        with pytest.raises(ZeroMassError):
            corrected_probs(TabulatedPredictor([1.0, 0.0]), SamplingSpec.constant([0.0, 1.0]), NO_FEATURES)

    def test_rate_count_mismatch(self):
        with pytest.raises(DomainError):
            corrected_probs(TabulatedPredictor([1.0, 1.0, 1.0]), SamplingSpec.constant([1.0, 1.0]), NO_FEATURES)

    def test_label_out_of_range(self):
        with pytest.raises(DomainError):
            corrected_prob(TabulatedPredictor([1.0, 1.0]), SamplingSpec.uniform(1.0), NO_FEATURES, 2)


class TestCorrectedNLL:

    def test_empty_dataset(self):
        data = Dataset.empty(0)
        assert corrected_nll(data, TabulatedPredictor([1.0, 1.0]), SamplingSpec.uniform(1.0)) == 0.0
        assert corrected_nll(data, TabulatedPredictor([1.0, 1.0]), SamplingSpec.uniform(1.0), reg=2.5) == 2.5

    def test_uniform_sampling_single_instance(self):
        """Com s = p constante, a perda é -ln f̂(x_0, y_0) para qualquer p"""
        data = _label_only_dataset([1])
        pred = TabulatedPredictor([1.0, 3.0])
        for p in (1.0, 0.5):
            assert corrected_nll(data, pred, SamplingSpec.uniform(p)) == pytest.approx(-math.log(0.75), abs=1e-12)

    def test_quarter_of_negatives(self):
        data = _label_only_dataset([1])
        loss = corrected_nll(data, TabulatedPredictor([1.0, 1.0]), SamplingSpec.constant([0.25, 1.0]))
        assert loss == pytest.approx(-math.log(0.8), abs=1e-12)
        assert loss == pytest.approx(0.22314, abs=1e-5)

    def test_matches_sum_of_corrected_probs(self, rng):
        pred = SoftmaxLinearPredictor(rng.normal(size=3), rng.normal(size=(3, 2)))
        s = SamplingSpec.constant([0.3, 1.0, 0.6])
        features = rng.normal(size=(25, 2))
        labels = rng.integers(0, 3, size=25)
        data = Dataset(features, labels, LabelSpace.of_size(3))
        expected = -sum(math.log(corrected_prob(pred, s, x, int(y))) for x, y in zip(features, labels))
        assert corrected_nll(data, pred, s) == pytest.approx(expected, rel=1e-12)

    def test_observed_instance_with_zero_rate(self):
        data = _label_only_dataset([0])
        with pytest.raises(DomainError):
            corrected_nll(data, TabulatedPredictor([1.0, 1.0]), SamplingSpec.constant([0.0, 1.0]))

    def test_observed_instance_impossible_under_predictor(self):
        data = _label_only_dataset([0])
        with pytest.raises(DomainError):
            corrected_nll(data, TabulatedPredictor([0.0, 1.0]), SamplingSpec.uniform(1.0))


class TestRecursionResidual:

    def test_closed_form_is_fixed_point(self, rng):
        for _ in range(200):
            k = int(rng.integers(2, 6))
            pred = TabulatedPredictor(rng.uniform(0.05, 1.0, size=k))
            s = SamplingSpec.constant(rng.uniform(0.05, 1.0, size=k))
            y = int(rng.integers(0, k))
            p = corrected_prob(pred, s, NO_FEATURES, y)
            assert abs(recursion_residual(pred, s, NO_FEATURES, y, p)) < 1e-12

    def test_other_values_are_not_fixed_points(self):
        pred = TabulatedPredictor([1.0, 2.0, 1.0])
        s = SamplingSpec.constant([1.0, 0.5, 0.25])
        p = corrected_prob(pred, s, NO_FEATURES, 2)
        assert abs(recursion_residual(pred, s, NO_FEATURES, 2, p + 0.1)) > 1e-3


class TestCandidatePosterior:

    def test_uniform_prior_without_sampling(self):
        data = _label_only_dataset([0] * 10 + [1] * 30)
        candidates = [TabulatedPredictor(t) for t in ([1.0, 1.0], [1.0, 3.0], [3.0, 1.0])]
        log_lik = np.array([10 * math.log(f0 / (f0 + f1)) + 30 * math.log(f1 / (f0 + f1))
                            for f0, f1 in ([1.0, 1.0], [1.0, 3.0], [3.0, 1.0])])
        expected = np.exp(log_lik - log_lik.max())
        expected /= expected.sum()
        posterior = candidate_posterior(data, candidates, SamplingSpec.uniform(1.0))
        np.testing.assert_allclose(posterior, expected, rtol=1e-10)
        assert int(np.argmax(posterior)) == 1

    def test_sampling_moves_the_posterior(self):
        """Uma amostra 3:1 com um quarto dos negativos favorece f = (4, 3) sobre f = (1, 3)"""
        data = _label_only_dataset([0] * 100 + [1] * 300)
        candidates = [TabulatedPredictor([1.0, 3.0]), TabulatedPredictor([4.0, 3.0])]
        plain = candidate_posterior(data, candidates, SamplingSpec.uniform(1.0))
        corrected = candidate_posterior(data, candidates, SamplingSpec.constant([0.25, 1.0]))
        assert plain[0] > 0.99
        assert corrected[1] > 0.99

    def test_log_priors(self):
        data = _label_only_dataset([0, 1])
        candidates = [TabulatedPredictor([1.0, 1.0]), TabulatedPredictor([1.0, 1.0])]
        posterior = candidate_posterior(data, candidates, SamplingSpec.uniform(1.0), log_priors=[0.0, math.log(3.0)])
        np.testing.assert_allclose(posterior, [0.25, 0.75])

    def test_requires_candidates(self):
        with pytest.raises(DomainError):
            candidate_posterior(_label_only_dataset([0]), [], SamplingSpec.uniform(1.0))
