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

import numpy as np

from hsbnn.client import evaluate_model
from hsbnn.data import read_mnist_dir
from hsbnn.diagnostics import DEFAULT_THRESHOLD, SparsityReport
from hsbnn.exceptions import ConfigError
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


class MnistSubsetExperiment(AbstractExperiment):
    WIDTHS = [400, 800, 1200]
    MODES = [HS_NONCENTERED, GAUSSIAN_BASELINE]
    DEPTH = 2
    SUBSET = 10000
    EPOCHS = 50
    REPLICATES = 1
    SAMPLES = 10
    PRUNE_FRACTION = 0.1

    @staticmethod
    def get_type() -> str:
        return "mnist-subset"

    def run(self, options: ExperimentOptions) -> ResultsBundle:
        if options.data is None:
            raise ConfigError("the mnist-subset experiment needs a --data directory")
        widths = options.get("widths", self.WIDTHS)
        modes = options.get("modes", self.MODES)
        samples = options.get("samples", self.SAMPLES)
        variant = options.get("forward_variant", SAMPLED_SCALES)
        full_train = read_mnist_dir(options.data, "train")
        test = read_mnist_dir(options.data, "test")
        subset = min(options.get("subset", self.SUBSET), full_train.size)

        def replicate(index: int):
            data_seed, train_seed = replicate_seeds(options.seed, index)
            rng = np.random.default_rng(data_seed)
            train = full_train.subset(
                np.sort(rng.choice(full_train.size, subset, replace=False))
            )
            cfg = TrainConfig(
                epochs=options.get("epochs", self.EPOCHS),
                steps=options.steps,
                seed=train_seed,
            )
            rows = []
            for width in widths:
                for mode in modes:
                    prior = PriorConfig(mode=mode, forward_variant=variant)
                    model = fit_model(train, [width] * self.DEPTH, prior, cfg)
                    metrics, _ = evaluate_model(model, test, samples, train_seed)
                    report = SparsityReport.from_model(model, 0, DEFAULT_THRESHOLD)
                    logger.info(
                        "replicate %d width %d %s: test error %.4f",
                        index,
                        width,
                        mode,
                        metrics["error_rate"],
                    )
                    rows.append(
                        {
                            "replicate": index,
                            "width": width,
                            "mode": mode,
                            "error_rate": metrics["error_rate"],
                            "test_log_likelihood": metrics["test_log_likelihood"],
                            "units_below": report.units_below(self.PRUNE_FRACTION),
                            "active_units": report.active,
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
            records,
            ["width", "mode"],
            ["error_rate", "test_log_likelihood", "units_below", "active_units"],
        )
        return ResultsBundle(self.get_type(), options.to_dict(), records, summary)
