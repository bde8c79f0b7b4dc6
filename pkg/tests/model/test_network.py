import unittest

import numpy as np
from scipy import stats

from hsbnn.autograd import Tensor, backward, ops
from hsbnn.exceptions import ContractError, DimensionError, DomainError
from hsbnn.model import HorseshoeBNN, NetworkConfig, PriorConfig, elbo, sum_terms
from hsbnn.model.config import (
    CATEGORICAL,
    GAUSSIAN_BASELINE,
    HS_CENTERED,
    HS_NONCENTERED,
    SAMPLED_SCALES,
)
from hsbnn.model.layers import raw_from_sigma2


class BaseTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(5)
        self.x = self.rng.normal(size=(6, 2))
        self.y = self.rng.normal(size=6)
        self.labels = np.asarray([0, 1, 2, 1, 0, 2])

    def regression_model(self, mode=HS_NONCENTERED, **prior):
        return HorseshoeBNN.initialize(
            NetworkConfig([2, 3, 1]),
            PriorConfig(mode=mode, **prior),
            np.random.default_rng(0),
        )

    def classification_model(self, mode=HS_NONCENTERED):
        return HorseshoeBNN.initialize(
            NetworkConfig([2, 4, 3], likelihood=CATEGORICAL),
            PriorConfig(mode=mode),
            np.random.default_rng(0),
        )

    def frozen_elbo(self, model, y, overrides):
        return float(model.elbo(self.x, y, 12, 1, np.random.default_rng(9), overrides))

    def assert_gradient_matches_finite_differences(self, model, y, h=1e-6):
        leaves = model.leaves()
        root = model.elbo(self.x, y, 12, 1, np.random.default_rng(9), leaves)
        grads = backward(root, leaves.values()).named(leaves)
        for name, value in model.parameters().items():
            for index in np.ndindex(*value.shape):
                up, down = value.copy(), value.copy()
                up[index] += h
                down[index] -= h
                ahead = self.frozen_elbo(model, y, {name: up})
                behind = self.frozen_elbo(model, y, {name: down})
                numeric = (ahead - behind) / (2.0 * h)
                self.assertAlmostEqual(
                    grads[name][index],
                    numeric,
                    delta=1e-4 * max(1.0, abs(numeric)),
                    msg="%s%s" % (name, index),
                )


class TestInitialize(BaseTest):
    def test_hidden_layers_follow_the_prior_mode_and_the_last_is_output(self):
        layer_types = self.regression_model().layer_types()

        self.assertEqual(layer_types, [HS_NONCENTERED, "output"])
        self.assertEqual(
            self.regression_model(GAUSSIAN_BASELINE).layer_types(),
            [GAUSSIAN_BASELINE, "output"],
        )

    def test_regression_has_a_noise_model_and_classification_does_not(self):
        self.assertIsNotNone(self.regression_model().noise)
        self.assertIsNone(self.classification_model().noise)

    def test_parameters_are_named_by_layer_and_sorted(self):
        names = list(self.regression_model().parameters())

        self.assertEqual(names[0], "layers.0.beta_mu")
        self.assertIn("layers.1.kappa_mu", names)
        self.assertEqual(names[-2:], ["noise.alpha_raw", "noise.beta_raw"])

    def test_same_seed_gives_same_parameters(self):
        first, second = self.regression_model(), self.regression_model()

        for name, value in first.parameters().items():
            np.testing.assert_array_equal(value, second.parameters()[name])

    def test_weight_means_start_with_fan_in_variance(self):
        for widths, index in (([1000, 20, 1], 0), ([3, 1000, 1], 1)):
            with self.subTest(widths=widths):
                model = HorseshoeBNN.initialize(
                    NetworkConfig(widths), PriorConfig(), np.random.default_rng(4)
                )

                beta_mu = model.parameters()["layers.%d.beta_mu" % index]

                self.assertEqual(beta_mu.shape[0], 1001)
                self.assertAlmostEqual(
                    beta_mu.var() * 1001.0, 1.0, delta=0.2, msg=str(widths)
                )


class TestSetParameters(BaseTest):
    def test_updates_the_named_array(self):
        model = self.regression_model()

        model.set_parameters({"layers.0.tau_mu": np.asarray([1.0, 2.0, 3.0])})

        np.testing.assert_array_equal(model.layers[0].params["tau_mu"], [1.0, 2.0, 3.0])

    def test_unknown_name_raises(self):
        with self.assertRaises(ContractError):
            self.regression_model().set_parameters({"layers.0.gamma": np.zeros(3)})

    def test_wrong_shape_raises(self):
        with self.assertRaises(DimensionError):
            self.regression_model().set_parameters({"layers.0.tau_mu": np.zeros(4)})

    def test_non_finite_value_raises(self):
        with self.assertRaises(DomainError):
            self.regression_model().set_parameters(
                {"noise.alpha_raw": np.asarray(np.inf)}
            )


class TestForward(BaseTest):
    def test_output_shape(self):
        f = self.classification_model().forward(self.x, self.rng)

        self.assertEqual(f.shape, (6, 3))

    def test_input_width_mismatch_raises(self):
        with self.assertRaises(DimensionError):
            self.regression_model().forward(np.ones((3, 5)), self.rng)

    def test_same_seed_gives_same_sample(self):
        model = self.regression_model()

        np.testing.assert_array_equal(
            model.forward(self.x, np.random.default_rng(3)),
            model.forward(self.x, np.random.default_rng(3)),
        )


class TestElbo(BaseTest):
    def test_terms_are_named_by_source(self):
        terms = self.regression_model().elbo_terms(self.x, self.y, 12, 1, self.rng)

        self.assertEqual(
            list(terms),
            [
                "likelihood",
                "layers.0.prior",
                "layers.0.entropy",
                "layers.1.prior",
                "layers.1.entropy",
                "noise.prior",
                "noise.entropy",
            ],
        )

    def test_total_is_the_sum_of_the_terms(self):
        model = self.regression_model()
        terms = model.elbo_terms(self.x, self.y, 12, 1, np.random.default_rng(2))

        total = elbo(model, self.x, self.y, 12, 1, np.random.default_rng(2))

        self.assertAlmostEqual(float(total), float(sum(terms.values())), places=8)

    def test_ablation_drops_every_term_of_a_kind(self):
        model = self.regression_model()
        terms = model.elbo_terms(self.x, self.y, 12, 1, np.random.default_rng(2))

        without_entropy = model.elbo(
            self.x, self.y, 12, 1, np.random.default_rng(2), ablate=("entropy",)
        )

        expected = sum(v for k, v in terms.items() if not k.endswith("entropy"))
        self.assertAlmostEqual(float(without_entropy), float(expected), places=8)

    def test_unknown_ablation_kind_raises(self):
        with self.assertRaises(ContractError):
            sum_terms({"likelihood": 1.0}, ablate=("kl",))

    def test_likelihood_is_rescaled_to_the_full_dataset(self):
        model = self.regression_model()

        small = model.elbo_terms(self.x, self.y, 6, 1, np.random.default_rng(4))
        large = model.elbo_terms(self.x, self.y, 60, 1, np.random.default_rng(4))

        self.assertAlmostEqual(
            float(large["likelihood"]), 10.0 * float(small["likelihood"]), places=6
        )

    def test_batch_larger_than_dataset_raises(self):
        with self.assertRaises(ContractError):
            self.regression_model().elbo(self.x, self.y, 3, 1, self.rng)

    def test_elbo_on_leaves_is_a_tape_scalar(self):
        model = self.regression_model()

        root = model.elbo(self.x, self.y, 12, 2, self.rng, model.leaves())

        self.assertIsInstance(root, Tensor)
        self.assertEqual(root.shape, ())

    def test_more_samples_lower_the_variance_of_the_estimate(self):
        model = self.regression_model()
        rng = np.random.default_rng(3)

        def spread(samples):
            estimates = [
                float(model.elbo(self.x, self.y, 12, samples, rng)) for _ in range(200)
            ]
            return np.var(estimates)

        self.assertLess(spread(10), spread(1))

    def test_single_point_matches_a_joint_monte_carlo_estimate(self):
        model = HorseshoeBNN.initialize(
            NetworkConfig([1, 1]),
            PriorConfig(forward_variant=SAMPLED_SCALES),
            np.random.default_rng(0),
        )
        beta_mu = np.asarray([[0.7], [-0.2]])
        model.set_parameters(
            {
                "layers.0.beta_mu": beta_mu,
                "layers.0.beta_raw": np.full((2, 1), raw_from_sigma2(0.1)),
                "layers.0.kappa_mu": np.asarray(0.1),
                "layers.0.kappa_raw": np.asarray(raw_from_sigma2(0.05)),
                "noise.alpha_raw": np.asarray(ops.softplus_inverse(3.0)),
                "noise.beta_raw": np.asarray(ops.softplus_inverse(2.0)),
            }
        )
        model.layers[0].refresh_aux()
        aux = model.layers[0].aux["rho_kappa"]
        x, y = np.asarray([[0.5]]), np.asarray([1.2])

        rng = np.random.default_rng(17)
        estimates = [float(model.elbo(x, y, 1, 1, rng)) for _ in range(2000)]

        n = 100000
        beta = rng.normal(beta_mu[:, 0], np.sqrt(0.1), size=(n, 2))
        kappa = np.exp(rng.normal(0.1, np.sqrt(0.05), size=n))
        q_rho = stats.invgamma(float(aux.c), scale=float(aux.d))
        rho = q_rho.rvs(size=n, random_state=rng)
        q_gamma = stats.gamma(3.0, scale=0.5)
        gamma = q_gamma.rvs(size=n, random_state=rng)
        f = kappa * (beta[:, 0] * 0.5 + beta[:, 1])
        log_joint = (
            stats.norm.logpdf(1.2, f, 1.0 / np.sqrt(gamma))
            + stats.norm.logpdf(beta).sum(axis=1)
            + stats.invgamma.logpdf(kappa, 0.5, scale=1.0 / rho)
            + stats.invgamma.logpdf(rho, 0.5, scale=1.0 / 25.0)
            + stats.gamma.logpdf(gamma, 6.0, scale=1.0 / 6.0)
        )
        log_q = (
            stats.norm.logpdf(beta, beta_mu[:, 0], np.sqrt(0.1)).sum(axis=1)
            + stats.lognorm.logpdf(kappa, np.sqrt(0.05), scale=np.exp(0.1))
            + q_rho.logpdf(rho)
            + q_gamma.logpdf(gamma)
        )
        joint = log_joint - log_q

        se_model = np.std(estimates) / np.sqrt(len(estimates))
        se_joint = joint.std() / np.sqrt(n)
        self.assertAlmostEqual(
            np.mean(estimates),
            joint.mean(),
            delta=3.0 * np.sqrt(se_model ** 2 + se_joint ** 2),
        )

    def test_noncentered_regression_gradient(self):
        self.assert_gradient_matches_finite_differences(self.regression_model(), self.y)

    def test_sampled_scales_regression_gradient(self):
        model = self.regression_model(forward_variant=SAMPLED_SCALES)

        self.assert_gradient_matches_finite_differences(model, self.y)

    def test_centered_classification_gradient(self):
        model = self.classification_model(HS_CENTERED)

        self.assert_gradient_matches_finite_differences(model, self.labels)

    def test_baseline_classification_gradient(self):
        model = self.classification_model(GAUSSIAN_BASELINE)

        self.assert_gradient_matches_finite_differences(model, self.labels)


class TestNodeWeightsAndPredict(BaseTest):
    def test_expected_node_weights_shape(self):
        weights = self.regression_model().expected_node_weights(0)

        self.assertEqual(weights.shape, (3, 3))

    def test_layer_index_out_of_range_raises(self):
        with self.assertRaises(ContractError):
            self.regression_model().expected_node_weights(2)

    def test_predict_regression_summary(self):
        summary = self.regression_model().predict(self.x, 7, self.rng)

        self.assertEqual(summary.f_samples.shape, (7, 6, 1))
        self.assertEqual(summary.gamma_samples.shape, (7,))
        self.assertTrue(np.all(summary.variance > 0))

    def test_predict_classification_probabilities_sum_to_one(self):
        summary = self.classification_model().predict(self.x, 5, self.rng)

        np.testing.assert_allclose(summary.probabilities.sum(axis=1), np.ones(6))
        self.assertEqual(summary.labels.shape, (6,))

    def test_predict_needs_a_sample(self):
        with self.assertRaises(ContractError):
            self.regression_model().predict(self.x, 0, self.rng)

    def test_copy_is_independent(self):
        model = self.regression_model()
        clone = model.copy()

        clone.layers[0].params["tau_mu"][0] = 10.0

        self.assertNotEqual(model.layers[0].params["tau_mu"][0], 10.0)

    def test_flipping_a_unit_keeps_its_weight_norm(self):
        model = self.regression_model()
        before = model.expected_node_weights(0)
        beta_mu = model.parameters()["layers.0.beta_mu"].copy()
        beta_mu[:, 1] *= -1.0

        model.set_parameters({"layers.0.beta_mu": beta_mu})

        after = model.expected_node_weights(0)
        np.testing.assert_allclose(after[:, 1], -before[:, 1])
        np.testing.assert_allclose(
            np.linalg.norm(after, axis=0), np.linalg.norm(before, axis=0)
        )
