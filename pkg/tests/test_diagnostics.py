import csv
import io
import json
import unittest

import numpy as np

from hsbnn.diagnostics import SparsityReport, active_units, node_norms, sparsity_reports
from hsbnn.exceptions import ContractError
from hsbnn.inference import make_init_rng
from hsbnn.model import HorseshoeBNN, NetworkConfig, PriorConfig


class BaseTest(unittest.TestCase):
    def setUp(self):
        self.model = HorseshoeBNN.initialize(
            NetworkConfig([5, 50, 20, 1]), PriorConfig(), make_init_rng(3)
        )
        self.weights = np.array(
            [
                [0.0, 3.0, 0.01, 0.0],
                [0.0, 4.0, 0.0, 1.0],
            ]
        )


class TestNorms(BaseTest):
    def test_column_norms(self):
        np.testing.assert_allclose(node_norms(self.weights), [0.0, 5.0, 0.01, 1.0])

    def test_active_units_are_relative_to_the_largest(self):
        norms = node_norms(self.weights)

        self.assertEqual(active_units(norms, 0.1), 2)
        self.assertEqual(active_units(norms, 0.5), 1)
        self.assertEqual(active_units(np.zeros(0)), 0)


class TestSparsityReport(BaseTest):
    def test_norms_are_sorted_descending(self):
        report = SparsityReport(0, self.weights)

        np.testing.assert_allclose(report.sorted_norms, [5.0, 1.0, 0.01, 0.0])
        self.assertEqual(report.order.tolist(), [1, 3, 2, 0])
        self.assertEqual(report.active, 2)
        self.assertEqual(report.width, 4)

    def test_units_below(self):
        report = SparsityReport(0, self.weights)

        self.assertEqual(report.units_below(0.1), 2)
        self.assertEqual(report.units_below(0.5), 3)

    def test_single_nonzero_unit(self):
        params = self.model.parameters()
        beta = np.zeros_like(params["layers.0.beta_mu"])
        beta[:, 7] = 0.3
        self.model.set_parameters({"layers.0.beta_mu": beta})

        report = SparsityReport.from_model(self.model, 0)

        self.assertEqual(report.active, 1)
        self.assertEqual(report.order[0], 7)

    def test_fresh_model_has_no_dominant_unit(self):
        report = SparsityReport.from_model(self.model, 0)

        median = np.median(report.sorted_norms)
        self.assertTrue(np.all(report.sorted_norms <= 10 * median))
        self.assertEqual(report.width, 50)

    def test_histograms_cover_the_smallest_units(self):
        report = SparsityReport(0, self.weights, smallest=2, bins=4)

        self.assertEqual([h["unit"] for h in report.histograms], [0, 2])
        for histogram in report.histograms:
            self.assertEqual(sum(histogram["counts"]), 2)
            self.assertEqual(len(histogram["edges"]), 5)

    def test_log_norm_curve(self):
        curve = SparsityReport(0, self.weights).log_norm_curve()

        np.testing.assert_allclose(curve[:, 0], [0.25, 0.5, 0.75, 1.0])
        self.assertAlmostEqual(curve[0, 1], np.log(5.0))
        self.assertEqual(curve[-1, 1], -np.inf)

    def test_json(self):
        fields = json.loads(SparsityReport(2, self.weights).to_json())

        self.assertEqual(fields["layer"], 2)
        self.assertEqual(fields["active_units"], 2)
        self.assertEqual(fields["unit_order"], [1, 3, 2, 0])

    def test_curve_csv(self):
        text = SparsityReport(0, self.weights).curve_csv()

        rows = list(csv.DictReader(io.StringIO(text)))

        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[0]["unit"], "1")
        self.assertEqual(float(rows[0]["norm"]), 5.0)

    def test_histogram_csv(self):
        text = SparsityReport(0, self.weights, smallest=1, bins=3).histogram_csv()

        rows = list(csv.DictReader(io.StringIO(text)))

        self.assertEqual(len(rows), 3)
        self.assertEqual({row["unit"] for row in rows}, {"0"})

    def test_threshold_must_be_a_fraction(self):
        with self.assertRaises(ContractError):
            SparsityReport(0, self.weights, threshold=1.5)

    def test_layer_out_of_range(self):
        with self.assertRaises(ContractError):
            SparsityReport.from_model(self.model, 3)


class TestSparsityReports(BaseTest):
    def test_one_report_per_hidden_layer(self):
        reports = sparsity_reports(self.model)

        self.assertEqual([r.layer for r in reports], [0, 1])
        self.assertEqual([r.width for r in reports], [50, 20])

    def test_single_layer(self):
        self.assertEqual([r.layer for r in sparsity_reports(self.model, layer=1)], [1])
