# Copyright 2026 The hsbnn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed
# under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
# CONDITIONS OF ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.

import logging

from hsbnn.client import evaluate_model
from hsbnn.data import gen_planted_network
from hsbnn.diagnostics import DEFAULT_THRESHOLD, SparsityReport
from hsbnn.inference import TrainConfig
from hsbnn.model import PriorConfig
from hsbnn.model.config import (
    GAUSSIAN_BASELINE,
    HS_CENTERED,
    HS_NONCENTERED,
    SAMPLED_SCALES,
)

from .base import (
    AbstractExperiment,
    ExperimentOptions,
    ResultsBundle,
    fit_model,
    group_summary,
    replicate_seeds,
    run_replicates,
)

logger = logging.getLogger(__name__)


class PlantedPruningExperiment(AbstractExperiment):
    WIDTHS = [15, 100]
    MODES = [HS_NONCENTERED, HS_CENTERED, GAUSSIAN_BASELINE]
    POINTS = 500
    EPOCHS = 2000
    REPLICATES = 5
    SAMPLES = 100
    PLANTED_UNITS = 2

    @staticmethod
    def get_type() -> str:
        return "planted-pruning"

    def run(self, options: ExperimentOptions) -> ResultsBundle:
        widths = options.get("widths", self.WIDTHS)
        modes = options.get("modes", self.MODES)
        samples = options.get("samples", self.SAMPLES)
        variant = options.get("forward_variant", SAMPLED_SCALES)

        def replicate(index: int):
            data_seed, train_seed = replicate_seeds(options.seed, index)
            train = gen_planted_network(self.POINTS, data_seed)
            cfg = TrainConfig(
                epochs=options.get("epochs", self.EPOCHS),
                steps=options.steps,
                seed=train_seed,
            )
            rows = []
            for width in widths:
                for mode in modes:
                    prior = PriorConfig(mode=mode, forward_variant=variant)
                    model = fit_model(train, [width], prior, cfg)
                    report = SparsityReport.from_model(model, 0, DEFAULT_THRESHOLD)
                    metrics, _ = evaluate_model(model, train, samples, train_seed)
                    logger.info(
                        "replicate %d width %d %s: %d active units",
                        index,
                        width,
                        mode,
                        report.active,
                    )
                    rows.append(
                        {
                            "replicate": index,
                            "width": width,
                            "mode": mode,
                            "active_units": report.active,
                            "recovered": report.active == self.PLANTED_UNITS,
                            "train_error": metrics["error_rate"],
                        }
                    )
            return rows

        count = options.get("replicates", self.REPLICATES)
        records = [
            row
            for rows in run_replicates(replicate, count, options.workers)
            for row in rows
        ]
        summary = group_summary(
            records, ["width", "mode"], ["active_units", "recovered", "train_error"]
        )
        return ResultsBundle(self.get_type(), options.to_dict(), records, summary)
