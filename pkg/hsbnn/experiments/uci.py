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
import os

from hsbnn.client import evaluate_model
from hsbnn.data import (
    PROTEIN,
    UCI_SMALL,
    protocol_splits,
    read_csv_regression,
    standardize,
)
from hsbnn.exceptions import ConfigError
from hsbnn.inference import TrainConfig
from hsbnn.model import PriorConfig
from hsbnn.model.config import HS_NONCENTERED, SAMPLED_SCALES

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


def default_protocol(path: str) -> str:
    return PROTEIN if "protein" in os.path.basename(path).lower() else UCI_SMALL


class UciRegressionExperiment(AbstractExperiment):
    WIDTH = 50
    PROTEIN_WIDTH = 100
    EPOCHS = 500
    SAMPLES = 100

    @staticmethod
    def get_type() -> str:
        return "uci"

    def run(self, options: ExperimentOptions) -> ResultsBundle:
        if options.data is None:
            raise ConfigError("the uci experiment needs a --data csv file")
        protocol = options.get("protocol", default_protocol(options.data))
        default_width = self.PROTEIN_WIDTH if protocol == PROTEIN else self.WIDTH
        widths = options.get("widths", [default_width])
        modes = options.get("modes", [HS_NONCENTERED])
        samples = options.get("samples", self.SAMPLES)
        variant = options.get("forward_variant", SAMPLED_SCALES)
        dataset = read_csv_regression(options.data)
        splits = protocol_splits(dataset, protocol, options.seed)
        name = os.path.splitext(dataset.name or "")[0]

        def replicate(index: int):
            train, test = splits[index]
            train_seed = replicate_seeds(options.seed, index)[0]
            (train,), record = standardize(train)
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
                    metrics, _ = evaluate_model(
                        model, test, samples, train_seed, record
                    )
                    logger.info(
                        "%s split %d: rmse %.4f test ll %.4f",
                        name,
                        index,
                        metrics["rmse"],
                        metrics["test_log_likelihood"],
                    )
                    rows.append(
                        {
                            "dataset": name,
                            "split": index,
                            "width": width,
                            "mode": mode,
                            "rmse": metrics["rmse"],
                            "test_log_likelihood": metrics["test_log_likelihood"],
                        }
                    )
            return rows

        count = min(options.get("replicates", len(splits)), len(splits))
        records = [
            row
            for rows in run_replicates(replicate, count, options.workers)
            for row in rows
        ]
        summary = group_summary(
            records, ["dataset", "width", "mode"], ["rmse", "test_log_likelihood"]
        )
        return ResultsBundle(self.get_type(), options.to_dict(), records, summary)
