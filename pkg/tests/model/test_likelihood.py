import unittest

import numpy as np
from scipy.special import digamma, log_softmax

from hsbnn.distributions import GammaQ, normal_logpdf
from hsbnn.exceptions import ContractError, DimensionError, DomainError
from hsbnn.model import (
    LikelihoodFactory,
    NoiseModel,
    PredictiveSummary,
    expected_log_likelihood,
)
from hsbnn.model.config import CATEGORICAL, GAUSSIAN_REGRESSION
from hsbnn.model.likelihood import CategoricalLikelihood, GaussianRegressionLikelihood


class BaseTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(13)
        self.f = np.asarray([[0.2], [-1.0], [0.7]])
        self.y = np.asarray([0.0, -0.5, 1.5])
        self.q = GammaQ(np.asarray(4.0), np.asarray(2.0))


class TestGaussianRegression(BaseTest):
    def test_closed_form(self):
        value = expected_log_likelihood(self.f, self.y, GAUSSIAN_REGRESSION, self.q)

        squared = float(np.sum((self.y - self.f[:, 0]) ** 2))
        expected = 3 * (0.5 * (digamma(4.0) - np.log(2.0)) - 0.5 * np.log(2 * np.pi))
        expected -= 0.5 * 2.0 * squared
        self.assertAlmostEqual(float(value), expected, places=10)

    def test_matches_monte_carlo_over_the_precision(self):
        gamma = self.q.sample(self.rng, size=200000)

        mc = normal_logpdf(self.y[None, :], self.f[:, 0][None, :], 1.0 / gamma[:, None])

        value = expected_log_likelihood(self.f, self.y, GAUSSIAN_REGRESSION, self.q)
        self.assertAlmostEqual(float(value), float(mc.sum(axis=1).mean()), delta=0.02)

    def test_needs_a_noise_posterior(self):
        with self.assertRaises(ContractError):
            expected_log_likelihood(self.f, self.y, GAUSSIAN_REGRESSION)

    def test_shape_mismatch_raises(self):
        with self.assertRaises(DimensionError):
            expected_log_likelihood(self.f, np.zeros(4), GAUSSIAN_REGRESSION, self.q)

    def test_predictive_density_with_one_sample_is_the_normal_density(self):
        gamma = np.asarray([2.0])

        lpd = GaussianRegressionLikelihood().log_predictive_density(
            self.f[None, :, :], self.y, gamma
        )

        np.testing.assert_allclose(lpd, normal_logpdf(self.y, self.f[:, 0], 0.5))


class TestCategorical(BaseTest):
    def setUp(self):
        super().setUp()
        self.logits = np.asarray([[1.0, 0.0, -1.0], [0.5, 2.0, 0.1]])
        self.labels = np.asarray([0, 1])

    def test_is_the_summed_log_softmax_of_the_labels(self):
        value = expected_log_likelihood(self.logits, self.labels, CATEGORICAL)

        expected = log_softmax(self.logits, axis=1)[[0, 1], [0, 1]].sum()
        self.assertAlmostEqual(float(value), float(expected), places=12)

    def test_out_of_range_label_raises(self):
        with self.assertRaises(DomainError):
            expected_log_likelihood(self.logits, np.asarray([0, 3]), CATEGORICAL)

    def test_fractional_label_raises(self):
        with self.assertRaises(DomainError):
            expected_log_likelihood(self.logits, np.asarray([0.0, 1.5]), CATEGORICAL)

    def test_predictive_density_averages_probabilities_not_logs(self):
        f_samples = np.stack([self.logits, -self.logits])

        likelihood = CategoricalLikelihood()
        lpd = likelihood.log_predictive_density(f_samples, self.labels, None)

        probs = np.exp(log_softmax(f_samples, axis=2))[:, [0, 1], [0, 1]].mean(axis=0)
        np.testing.assert_allclose(lpd, np.log(probs))

    def test_unknown_likelihood_raises(self):
        with self.assertRaises(LikelihoodFactory.InvalidLikelihoodTypeError):
            LikelihoodFactory.create("poisson")


class TestNoiseModel(BaseTest):
    def test_starts_at_the_prior(self):
        q = NoiseModel.initialize().q()

        self.assertAlmostEqual(float(q.alpha), 6.0, places=10)
        self.assertAlmostEqual(float(q.beta), 6.0, places=10)

    def test_kl_to_the_prior_is_zero_at_initialization(self):
        noise = NoiseModel.initialize()

        self.assertAlmostEqual(
            float(noise.expected_log_prior()) + float(noise.entropy()), 0.0, places=10
        )

    def test_rejects_unknown_parameters(self):
        with self.assertRaises(DomainError):
            NoiseModel({"alpha_raw": np.asarray(1.0)})


class TestPredictiveSummary(BaseTest):
    def test_regression_mean_variance_and_metrics(self):
        f_samples = np.asarray([[[1.0], [2.0]], [[3.0], [2.0]]])
        summary = PredictiveSummary(
            GaussianRegressionLikelihood(), f_samples, np.asarray([1.0, 4.0])
        )

        np.testing.assert_allclose(summary.mean, [2.0, 2.0])
        np.testing.assert_allclose(summary.variance, [1.0 + 0.625, 0.625])
        self.assertAlmostEqual(summary.metrics(np.asarray([2.0, 2.0]))["rmse"], 0.0)

    def test_classification_error_rate(self):
        f_samples = np.asarray([[[2.0, 0.0], [0.0, 2.0]]])
        summary = PredictiveSummary(CategoricalLikelihood(), f_samples)

        self.assertEqual(summary.metrics(np.asarray([0, 0]))["error_rate"], 0.5)

    def test_mean_is_regression_only(self):
        summary = PredictiveSummary(CategoricalLikelihood(), np.zeros((1, 2, 2)))

        with self.assertRaises(ContractError):
            summary.mean

    def test_requires_three_dimensional_samples(self):
        with self.assertRaises(DimensionError):
            PredictiveSummary(CategoricalLikelihood(), np.zeros((2, 2)))
