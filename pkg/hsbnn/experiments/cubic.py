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
from hsbnn.data import gen_cubic, gen_cubic_grid, standardize
from hsbnn.inference import TrainConfig
from hsbnn.model import PriorConfig
from hsbnn.model.config import GAUSSIAN_BASELINE, HS_NONCENTERED, SAMPLED_SCALES

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


class CubicRobustnessExperiment(AbstractExperiment):
    WIDTHS = [50, 100, 1000]
    MODES = [GAUSSIAN_BASELINE, HS_NONCENTERED]
    TRAIN_POINTS = 20
    GRID_POINTS = 100
    STEPS = 1000
    REPLICATES = 5
    SAMPLES = 100

    @staticmethod
    def get_type() -> str:
        return "cubic-robustness"

    def run(self, options: ExperimentOptions) -> ResultsBundle:
        widths = options.get("widths", self.WIDTHS)
        modes = options.get("modes", self.MODES)
        samples = options.get("samples", self.SAMPLES)
        variant = options.get("forward_variant", SAMPLED_SCALES)

        def replicate(index: int):
            data_seed, grid_seed, train_seed = replicate_seeds(options.seed, index, 3)
            train = gen_cubic(self.TRAIN_POINTS, data_seed)
            test = gen_cubic_grid(self.GRID_POINTS, grid_seed)
            (train,), record = standardize(train)
            cfg = TrainConfig(
                steps=options.get("steps", self.STEPS),
                epochs=options.get("epochs", 1),
                seed=train_seed,
            )
            rows = []
            for width in widths:
                for mode in modes:
                    prior = PriorConfig(mode=mode, forward_variant=variant)
                    model = fit_model(train, [width], prior, cfg)
                    metrics, _ = evaluate_model(
                        model, test, samples, train_seed, record
                    )
                    logger.info(
                        "replicate %d width %d %s: test ll %.4f",
                        index,
                        width,
                        mode,
                        metrics["test_log_likelihood"],
                    )
                    rows.append(
                        {
                            "replicate": index,
                            "width": width,
                            "mode": mode,
                            "test_log_likelihood": metrics["test_log_likelihood"],
                            "rmse": metrics["rmse"],
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
            records, ["width", "mode"], ["test_log_likelihood", "rmse"]
        )
        return ResultsBundle(self.get_type(), options.to_dict(), records, summary)
