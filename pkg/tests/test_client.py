import csv
import io
import json
import os
import shutil
import tempfile
import unittest
from unittest.mock import MagicMock

import numpy as np

from hsbnn import HsbnnClient, MemoryCheckpointStore
from hsbnn.client import (
    CHECKPOINT,
    HISTORY,
    METRICS,
    PREDICTIONS,
    SPARSITY,
    RunConfig,
    build_model,
    evaluate_model,
    load_config,
    load_dataset,
)
from hsbnn.data import gen_cubic, gen_planted_network, standardize, write_csv
from hsbnn.exceptions import CheckpointDoesNotExistError, ConfigError, DimensionError
from hsbnn.inference import History


class BaseTest(unittest.TestCase):
    def setUp(self):
        self.store = MemoryCheckpointStore()
        self.client = HsbnnClient(self.store)
        self.config = RunConfig(
            dataset="cubic", hidden_widths=[10], epochs=2, batch_size=10, seed=3
        )


class TestRunConfig(BaseTest):
    def test_fields_are_split_into_parts(self):
        config = RunConfig(hidden_widths=[20, 20], b0=0.5, epochs=7, dataset="planted")

        self.assertEqual(config.hidden_widths, [20, 20])
        self.assertEqual(config.prior.b0, 0.5)
        self.assertEqual(config.train.epochs, 7)
        self.assertEqual(config.data["dataset"], "planted")

    def test_unknown_field(self):
        with self.assertRaises(ConfigError):
            RunConfig(hidden_width=[10])

    def test_unknown_dataset(self):
        with self.assertRaises(ConfigError):
            RunConfig(dataset="cifar")

    def test_bad_width_is_caught_early(self):
        with self.assertRaises(ConfigError):
            RunConfig(hidden_widths=[0])

    def test_with_seed(self):
        self.assertEqual(self.config.with_seed(9).train.seed, 9)
        self.assertIs(self.config.with_seed(None), self.config)

    def test_dict_form(self):
        copy = RunConfig(**self.config.to_dict())

        self.assertEqual(copy.to_dict(), self.config.to_dict())


class TestLoadConfig(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.path = os.path.join(self.directory, "config.json")

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, text):
        with open(self.path, "w") as f:
            f.write(text)

    def test_reads_a_json_object(self):
        self.write('{"hidden_widths": [5], "learning_rate": 0.01}')

        config = load_config(self.path)

        self.assertEqual(config.hidden_widths, [5])
        self.assertEqual(config.train.learning_rate, 0.01)

    def test_invalid_json(self):
        self.write("{hidden_widths")

        with self.assertRaises(ConfigError):
            load_config(self.path)

    def test_not_an_object(self):
        self.write("[1, 2]")

        with self.assertRaises(ConfigError):
            load_config(self.path)


class TestLoadDataset(BaseTest):
    def test_cubic_splits(self):
        train = load_dataset(self.config)
        test = load_dataset(self.config, split="test")

        np.testing.assert_array_equal(train.targets, gen_cubic(20, 3).targets)
        self.assertEqual(test.size, 100)
        self.assertEqual(test.features[0, 0], -4.0)

    def test_planted_test_split_uses_the_next_seed(self):
        config = RunConfig(dataset="planted", n=200, likelihood="categorical", seed=4)

        test = load_dataset(config, split="test")

        expected = gen_planted_network(200, 5)
        np.testing.assert_array_equal(test.features, expected.features)

    def test_csv_needs_a_path(self):
        with self.assertRaises(ConfigError):
            load_dataset(RunConfig(dataset="csv"))

    def test_csv(self):
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        path = os.path.join(directory, "data.csv")
        write_csv(path, ["x", "y"], [np.arange(5.0), np.arange(5.0) * 2])

        dataset = load_dataset(RunConfig(dataset="csv", target_column="y"), [path])

        np.testing.assert_array_equal(dataset.targets, np.arange(5.0) * 2)


class TestTrain(BaseTest):
    def test_writes_checkpoint_history_and_sparsity(self):
        self.client.train(self.config, load_dataset(self.config))

        self.assertTrue(self.client.exists())
        history = History.from_jsonl(self.store.get_text(HISTORY))
        self.assertEqual(len(history), 4)
        reports = json.loads(self.store.get_text(SPARSITY))
        self.assertEqual([r["width"] for r in reports], [10])

    def test_regression_data_is_standardized(self):
        checkpoint = self.client.train(self.config, load_dataset(self.config))

        self.assertIsNotNone(checkpoint.meta.standardization)

    def test_standardization_can_be_turned_off(self):
        config = RunConfig(**{**self.config.to_dict(), "standardize": False})

        checkpoint = self.client.train(config, load_dataset(config))

        self.assertIsNone(checkpoint.meta.standardization)

    def test_callbacks_see_every_record(self):
        callback = MagicMock()

        self.client.train(self.config, load_dataset(self.config), [callback])

        self.assertEqual(callback.call_count, 4)

    def test_same_seed_same_checkpoint(self):
        dataset = load_dataset(self.config)

        first = self.client.train(self.config, dataset).serialize()
        second = self.client.train(self.config, dataset).serialize()

        self.assertEqual(first, second)


class TestEvaluate(BaseTest):
    def test_missing_checkpoint(self):
        with self.assertRaises(CheckpointDoesNotExistError):
            self.client.evaluate(load_dataset(self.config, split="test"))

    def test_regression_metrics_and_predictions(self):
        self.client.train(self.config, load_dataset(self.config))
        test = load_dataset(self.config, split="test")

        metrics = self.client.evaluate(test, samples=10)

        self.assertEqual(metrics["count"], 100)
        self.assertGreater(metrics["rmse"], 0.0)
        self.assertTrue(np.isfinite(metrics["test_log_likelihood"]))
        self.assertEqual(json.loads(self.store.get_text(METRICS)), metrics)
        rows = list(csv.DictReader(io.StringIO(self.store.get_text(PREDICTIONS))))
        self.assertEqual(len(rows), 100)
        self.assertEqual(float(rows[0]["target"]), test.targets[0])

    def test_evaluation_is_seeded(self):
        self.client.train(self.config, load_dataset(self.config))
        test = load_dataset(self.config, split="test")

        self.assertEqual(
            self.client.evaluate(test, samples=5, seed=1),
            self.client.evaluate(test, samples=5, seed=1),
        )

    def test_schema_mismatch(self):
        self.client.train(self.config, load_dataset(self.config))

        with self.assertRaises(DimensionError):
            self.client.evaluate(gen_planted_network(10))

    def test_classification_metrics(self):
        config = RunConfig(
            dataset="planted",
            likelihood="categorical",
            n=100,
            hidden_widths=[5],
            epochs=1,
        )
        self.client.train(config, load_dataset(config))

        metrics = self.client.evaluate(load_dataset(config, split="test"), samples=5)

        self.assertTrue(0.0 <= metrics["error_rate"] <= 1.0)
        self.assertLessEqual(metrics["test_log_likelihood"], 0.0)


class TestEvaluateModel(BaseTest):
    def test_standardization_maps_back_to_data_units(self):
        train = gen_cubic(20, 0)
        model = build_model(train, [5], self.config.prior, 0)
        (_,), record = standardize(train)

        plain, _ = evaluate_model(model, train, samples=5, seed=2)
        scaled, rows = evaluate_model(
            model, train, samples=5, seed=2, standardization=record
        )

        self.assertNotEqual(plain["rmse"], scaled["rmse"])
        self.assertEqual(
            rows[0], ["index", "target", "prediction", "variance", "log_density"]
        )
        self.assertEqual(len(rows), 21)


class TestInspect(BaseTest):
    def test_writes_the_layer_reports(self):
        self.client.train(self.config, load_dataset(self.config))

        report = self.client.inspect(layer=0, threshold=0.2)

        self.assertEqual(report.width, 10)
        self.assertEqual(report.threshold, 0.2)
        written = ("sparsity-layer0.json", "norms-layer0.csv", "histograms-layer0.csv")
        for name in written:
            self.assertTrue(self.store.exists(name), name)

    def test_missing_checkpoint(self):
        with self.assertRaises(CheckpointDoesNotExistError):
            self.client.inspect(name=CHECKPOINT + ".old")
