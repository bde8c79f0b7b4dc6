import unittest
from collections import OrderedDict
from unittest.mock import MagicMock, patch

import numpy as np

from hsbnn.data import Dataset, gen_cubic, gen_planted_network, standardize
from hsbnn.exceptions import ContractError, DimensionError, NumericalError
from hsbnn.inference import (
    AdamState,
    TrainConfig,
    Trainer,
    fit,
    make_init_rng,
    make_streams,
    update_noise_model,
)
from hsbnn.inference.adam import clip_gradients
from hsbnn.model import HorseshoeBNN, NetworkConfig, NoiseModel, PriorConfig
from hsbnn.model.config import CATEGORICAL, SAMPLED_SCALES


class BaseTest(unittest.TestCase):
    def setUp(self):
        (self.dataset,), _ = standardize(gen_cubic(20, seed=1))

    def model(self, widths=(1, 10, 1), likelihood="gaussian-regression", seed=0):
        return HorseshoeBNN.initialize(
            NetworkConfig(list(widths), likelihood=likelihood),
            PriorConfig(forward_variant=SAMPLED_SCALES),
            make_init_rng(seed),
        )

    def assert_same_parameters(self, first, second):
        for name, value in first.parameters().items():
            np.testing.assert_array_equal(
                value, second.parameters()[name], err_msg=name
            )


class TestStreams(BaseTest):
    def test_streams_are_reproducible_and_distinct(self):
        first, second = make_streams(4), make_streams(4)

        self.assertEqual(
            first["reparam"].standard_normal(), second["reparam"].standard_normal()
        )
        self.assertNotEqual(
            make_streams(4)["reparam"].standard_normal(),
            make_streams(4)["shuffle"].standard_normal(),
        )

    def test_rng_states_round_trip(self):
        trainer = Trainer(self.model(), TrainConfig(seed=3))
        states = trainer.rng_states()
        expected = trainer.streams["shuffle"].permutation(10)

        trainer.restore_rng_states(states)

        shuffled = trainer.streams["shuffle"].permutation(10)
        np.testing.assert_array_equal(shuffled, expected)


class TestFit(BaseTest):
    def test_zero_epochs_leaves_the_model_unchanged(self):
        model = self.model()
        initial = model.copy()

        _, history = fit(model, self.dataset, TrainConfig(epochs=0))

        self.assert_same_parameters(model, initial)
        self.assertEqual(len(history), 0)

    def test_same_seed_gives_identical_history_and_parameters(self):
        cfg = TrainConfig(epochs=5, seed=2)
        first_model, first = fit(self.model(), self.dataset, cfg)
        second_model, second = fit(self.model(), self.dataset, cfg)

        self.assertEqual(first.to_jsonl(), second.to_jsonl())
        self.assert_same_parameters(first_model, second_model)

    def test_different_seeds_diverge(self):
        _, first = fit(self.model(), self.dataset, TrainConfig(epochs=3, seed=2))
        _, second = fit(self.model(), self.dataset, TrainConfig(epochs=3, seed=3))

        self.assertNotEqual(first.to_jsonl(), second.to_jsonl())

    def test_one_step_per_minibatch(self):
        trainer = Trainer(self.model(), TrainConfig(epochs=3, batch_size=8))

        trainer.fit(self.dataset)

        # 20 points in batches of 8 make three steps per epoch
        self.assertEqual(trainer.step_count, 9)
        self.assertEqual(trainer.epoch, 3)
        self.assertEqual([r.epoch for r in trainer.history][:4], [0, 0, 0, 1])

    def test_steps_override_epochs(self):
        trainer = Trainer(self.model(), TrainConfig(epochs=100, steps=7, batch_size=8))

        trainer.fit(self.dataset)

        self.assertEqual(trainer.step_count, 7)

    def test_log_every_thins_the_history(self):
        trainer = Trainer(self.model(), TrainConfig(steps=6, log_every=2))

        history = trainer.fit(self.dataset)

        self.assertEqual([r.step for r in history], [2, 4, 6])

    def test_callbacks_see_every_record(self):
        callback = MagicMock()
        trainer = Trainer(self.model(), TrainConfig(steps=4))

        trainer.fit(self.dataset, [callback])

        self.assertEqual(callback.call_count, 4)
        record, model = callback.call_args[0]
        self.assertEqual(record.step, 4)
        self.assertIs(model, trainer.model)

    def test_training_raises_the_elbo(self):
        _, history = fit(self.model(), self.dataset, TrainConfig(steps=400))

        values = history.elbo_values()
        self.assertGreater(values[-20:].mean(), values[:20].mean())

    def test_parameters_stay_finite_over_a_long_run(self):
        rng = np.random.default_rng(8)
        data = Dataset(rng.normal(size=(5, 1)), 3.0 * rng.normal(size=5))
        trainer = Trainer(
            self.model((1, 2, 1)), TrainConfig(steps=10000, batch_size=5, log_every=500)
        )

        def check_finite(record, model):
            self.assertTrue(np.isfinite(record.elbo), msg=record.step)
            for name, value in model.parameters().items():
                self.assertTrue(np.all(np.isfinite(value)), msg=name)

        history = trainer.fit(data, [check_finite])

        self.assertEqual(history[-1].step, 10000)
        for name, value in trainer.model.parameters().items():
            self.assertTrue(np.all(np.isfinite(value)), msg=name)

    def test_fit_resumes_where_it_stopped(self):
        whole = Trainer(self.model(), TrainConfig(steps=6, batch_size=8))
        whole.fit(self.dataset)
        split = Trainer(self.model(), TrainConfig(steps=3, batch_size=8))
        split.fit(self.dataset)
        split.fit(self.dataset)

        self.assert_same_parameters(whole.model, split.model)
        self.assertEqual(whole.history, split.history)

    def test_classification(self):
        dataset = gen_planted_network(100, seed=0)
        model = self.model((2, 5, 2), CATEGORICAL)

        trainer = Trainer(model, TrainConfig(steps=5))
        trainer.fit(dataset)

        self.assertIsNone(trainer.noise_adam)
        self.assertEqual(len(trainer.history), 5)

    def test_input_width_mismatch_raises(self):
        with self.assertRaises(DimensionError):
            Trainer(self.model((3, 4, 1)), TrainConfig()).fit(self.dataset)


class TestStep(BaseTest):
    def test_non_finite_term_is_named(self):
        trainer = Trainer(self.model(), TrainConfig())
        trainer.model.elbo_terms = MagicMock(
            return_value=OrderedDict(
                [
                    ("likelihood", np.asarray(1.0)),
                    ("layers.0.prior", np.asarray(np.inf)),
                ]
            )
        )

        with self.assertRaises(NumericalError) as raised:
            trainer.step(self.dataset.features, self.dataset.targets, 20)

        self.assertEqual(raised.exception.term, "layers.0.prior")

    def test_step_refreshes_aux_factors(self):
        trainer = Trainer(self.model(), TrainConfig())

        trainer.step(self.dataset.features, self.dataset.targets, 20)

        layer = trainer.model.layers[0]
        q_tau = layer.multiplier_factors()[0]
        np.testing.assert_allclose(
            layer.aux["lambda"].d, np.asarray(q_tau.mean_inverse()) + 1.0
        )


    def test_clipping_uses_one_norm_over_every_gradient(self):
        trainer = Trainer(self.model(), TrainConfig(clip_norm=1e-3))
        clip = MagicMock(wraps=clip_gradients)

        with patch("hsbnn.inference.trainer.clip_gradients", clip):
            trainer.step(self.dataset.features, self.dataset.targets, 20)

        clip.assert_called_once()
        grads, clip_norm = clip.call_args[0]
        self.assertEqual(clip_norm, 1e-3)
        self.assertEqual(set(grads), set(trainer.model.parameters()))
        self.assertTrue(any(name.startswith("noise.") for name in grads))

    def test_clipped_step_moves_the_parameters(self):
        trainer = Trainer(self.model(), TrainConfig(clip_norm=1e-3))
        before = trainer.model.parameters()

        trainer.step(self.dataset.features, self.dataset.targets, 20)

        after = trainer.model.parameters()
        self.assertTrue(
            any(not np.array_equal(before[name], after[name]) for name in before)
        )


class TestNoiseUpdate(BaseTest):
    def test_positive_gradient_raises_the_shape(self):
        noise = NoiseModel.initialize()
        state = AdamState.zeros_like(noise.params)
        grads = {"alpha_raw": np.asarray(1.0), "beta_raw": np.asarray(-1.0)}

        updated, state = update_noise_model(noise, grads, state, TrainConfig())

        moved = updated.params["alpha_raw"] - noise.params["alpha_raw"]
        self.assertAlmostEqual(float(moved), 0.005, places=6)
        self.assertLess(float(updated.q().beta), float(noise.q().beta))
        self.assertEqual(state.t, 1)

    def test_missing_noise_model_raises(self):
        with self.assertRaises(ContractError):
            update_noise_model(None, {}, AdamState({}, {}), TrainConfig())
