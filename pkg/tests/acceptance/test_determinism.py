import shutil
import tempfile
import unittest

from hsbnn import HsbnnClient
from hsbnn.client import HISTORY, METRICS, RunConfig, load_dataset
from hsbnn.contrib import FileCheckpointStore
from hsbnn.experiments import ExperimentFactory, ExperimentOptions

from . import acceptance


@acceptance
class TestDeterminism(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def train_and_evaluate(self, name):
        store = FileCheckpointStore(self.directory + "/" + name)
        client = HsbnnClient(store)
        config = RunConfig(dataset="cubic", hidden_widths=[100], epochs=200, seed=7)
        client.train(config, load_dataset(config))
        client.evaluate(load_dataset(config, split="test"), seed=7)
        return store.get(HISTORY), store.get(METRICS)

    def test_history_and_metrics_are_byte_identical(self):
        self.assertEqual(self.train_and_evaluate("a"), self.train_and_evaluate("b"))

    def test_experiment_results_are_identical(self):
        options = ExperimentOptions(widths=[50], replicates=2, workers=2)

        first = ExperimentFactory.run("planted-pruning", options)
        second = ExperimentFactory.run("planted-pruning", options)

        self.assertEqual(first.to_json(), second.to_json())
