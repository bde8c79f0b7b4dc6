import json
import unittest

import numpy as np

from hsbnn.contrib import Checkpoint, MemoryCheckpointStore
from hsbnn.data import gen_cubic, gen_planted_network, standardize
from hsbnn.exceptions import FormatError
from hsbnn.inference import TrainConfig, Trainer, make_init_rng
from hsbnn.model import HorseshoeBNN, NetworkConfig, PriorConfig
from hsbnn.model.config import (
    CATEGORICAL,
    GAUSSIAN_BASELINE,
    HS_CENTERED,
    SAMPLED_SCALES,
)


def rewrite_header(serialized, **fields):
    length = int.from_bytes(serialized[:8], "little")
    header = json.loads(serialized[8 : 8 + length].decode("utf-8"))
    header.update(fields)
    encoded = json.dumps(header).encode("utf-8")
    return len(encoded).to_bytes(8, "little") + encoded + serialized[8 + length :]


def round_trip(trainer):
    return Checkpoint.deserialize(Checkpoint.from_trainer(trainer).serialize())


class BaseTest(unittest.TestCase):
    def setUp(self):
        (self.dataset,), self.standardization = standardize(gen_cubic(20, seed=1))
        self.cfg = TrainConfig(steps=3, batch_size=8, seed=5)

    def model(self, widths=(1, 10, 1), likelihood="gaussian-regression", **prior):
        return HorseshoeBNN.initialize(
            NetworkConfig(list(widths), likelihood=likelihood),
            PriorConfig(forward_variant=SAMPLED_SCALES, **prior),
            make_init_rng(0),
        )

    def trained(self, model=None, dataset=None):
        trainer = Trainer(model or self.model(), self.cfg)
        trainer.fit(dataset or self.dataset)
        return trainer

    def assert_same_model(self, first, second):
        self.assertEqual(list(first.parameters()), list(second.parameters()))
        for name, value in first.parameters().items():
            np.testing.assert_array_equal(
                value, second.parameters()[name], err_msg=name
            )
        for ours, theirs in zip(first.layers, second.layers):
            self.assertEqual(sorted(ours.aux), sorted(theirs.aux))
            for name in ours.aux:
                np.testing.assert_array_equal(ours.aux[name].d, theirs.aux[name].d)


class TestSerialize(BaseTest):
    def test_bytes_are_reproduced_exactly(self):
        checkpoint = Checkpoint.from_trainer(self.trained(), self.standardization)
        serialized = checkpoint.serialize()

        self.assertEqual(Checkpoint.deserialize(serialized).serialize(), serialized)

    def test_model_is_restored(self):
        trainer = self.trained()

        checkpoint = round_trip(trainer)

        self.assert_same_model(trainer.model, checkpoint.to_model())

    def test_tensor_shapes_are_kept_including_scalars(self):
        trainer = self.trained()
        checkpoint = Checkpoint.from_trainer(trainer)

        restored = Checkpoint.deserialize(checkpoint.serialize())

        shapes = {name: value.shape for name, value in checkpoint.tensors.items()}
        self.assertEqual(shapes["layers.0.upsilon_mu"], ())
        self.assertEqual(shapes["noise.alpha_raw"], ())
        for name, value in restored.tensors.items():
            self.assertEqual(value.shape, shapes[name], msg=name)

    def test_every_prior_mode(self):
        for mode in (HS_CENTERED, GAUSSIAN_BASELINE):
            with self.subTest(mode=mode):
                trainer = self.trained(self.model(mode=mode))

                serialized = Checkpoint.from_trainer(trainer).serialize()

                restored = Checkpoint.deserialize(serialized).to_model()
                self.assert_same_model(trainer.model, restored)

    def test_classification_model_has_no_noise_state(self):
        data = gen_planted_network(100, seed=3)
        trainer = self.trained(self.model((2, 5, 2), CATEGORICAL), data)

        checkpoint = round_trip(trainer)

        self.assertIsNone(checkpoint.meta.noise_adam_t)
        self.assertIsNone(checkpoint.to_model().noise)
        self.assertIsNone(checkpoint.to_trainer().noise_adam)

    def test_standardization_is_carried(self):
        checkpoint = Checkpoint.from_trainer(self.trained(), self.standardization)
        serialized = checkpoint.serialize()

        restored = Checkpoint.deserialize(serialized).meta.standardization

        self.assertEqual(restored.to_dict(), self.standardization.to_dict())

    def test_store_round_trip(self):
        store = MemoryCheckpointStore()
        trainer = self.trained()

        store.save("CHECKPOINT", Checkpoint.from_trainer(trainer))

        self.assert_same_model(trainer.model, store.load("CHECKPOINT").to_model())


class TestResume(BaseTest):
    def test_resumed_training_matches_uninterrupted_training(self):
        serialized = Checkpoint.from_trainer(self.trained()).serialize()
        resumed = Checkpoint.deserialize(serialized).to_trainer()
        resumed.fit(self.dataset)

        uninterrupted = Trainer(self.model(), self.cfg.update(steps=6))
        uninterrupted.fit(self.dataset)

        self.assertEqual(resumed.step_count, 6)
        self.assert_same_model(resumed.model, uninterrupted.model)
        self.assertEqual(resumed.history, uninterrupted.history)

    def test_optimizer_state_is_restored(self):
        trainer = self.trained()

        restored = round_trip(trainer).to_trainer()

        self.assertEqual(restored.adam.t, trainer.adam.t)
        for name, value in trainer.adam.m.items():
            np.testing.assert_array_equal(restored.adam.m[name], value)
            np.testing.assert_array_equal(restored.adam.v[name], trainer.adam.v[name])
        self.assertEqual(restored.epoch, trainer.epoch)


class TestDeserializeErrors(BaseTest):
    def setUp(self):
        super().setUp()
        self.serialized = Checkpoint.from_model(self.model()).serialize()

    def test_truncated_payload(self):
        with self.assertRaises(FormatError) as context:
            Checkpoint.deserialize(self.serialized[:-1])

        self.assertIn("expected", str(context.exception))
        self.assertIn("found", str(context.exception))

    def test_too_short_for_a_header(self):
        with self.assertRaises(FormatError):
            Checkpoint.deserialize(b"\x01\x02")

    def test_truncated_header(self):
        with self.assertRaises(FormatError):
            Checkpoint.deserialize(self.serialized[:20])

    def test_header_is_not_json(self):
        with self.assertRaises(FormatError):
            Checkpoint.deserialize((5).to_bytes(8, "little") + b"{nope")

    def test_unsupported_version(self):
        with self.assertRaises(FormatError) as context:
            Checkpoint.deserialize(rewrite_header(self.serialized, format_version=2))

        self.assertIn("version 2", str(context.exception))

    def test_tensor_out_of_bounds(self):
        length = int.from_bytes(self.serialized[:8], "little")
        header = json.loads(self.serialized[8 : 8 + length].decode("utf-8"))
        header["tensors"][0]["offset"] = header["payload_bytes"]

        with self.assertRaises(FormatError):
            Checkpoint.deserialize(
                rewrite_header(self.serialized, tensors=header["tensors"])
            )

    def test_unknown_layer_type(self):
        checkpoint = Checkpoint.deserialize(self.serialized)
        checkpoint.meta.layer_types[0] = "dropout"

        with self.assertRaises(FormatError):
            checkpoint.to_model()
