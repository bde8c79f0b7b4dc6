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

import csv
import io
import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .contrib import AbstractCheckpointStore, Checkpoint
from .data import (
    CLASSIFICATION,
    REGRESSION,
    Dataset,
    Standardization,
    gen_cubic,
    gen_cubic_grid,
    gen_planted_network,
    read_csv_classification,
    read_csv_regression,
    read_mnist_dir,
    standardize,
)
from .diagnostics import DEFAULT_THRESHOLD, SparsityReport, sparsity_reports
from .exceptions import ConfigError, DimensionError
from .inference import TrainConfig, Trainer, make_init_rng
from .inference.config import DEFAULTS as TRAIN_DEFAULTS
from .inference.trainer import Callback
from .model import HorseshoeBNN, NetworkConfig, PriorConfig
from .model.config import CATEGORICAL, GAUSSIAN_REGRESSION

logger = logging.getLogger(__name__)

CHECKPOINT = "checkpoint.hsbnn"
HISTORY = "history.jsonl"
SPARSITY = "sparsity.json"
METRICS = "metrics.json"
PREDICTIONS = "predictions.csv"

DEFAULT_PREDICTIVE_SAMPLES = 100
CUBIC_GRID_POINTS = 100

NETWORK_DEFAULTS = {
    "hidden_widths": [50],
    "nonlinearity": "relu",
    "likelihood": GAUSSIAN_REGRESSION,
}  # type: Dict[str, Any]
PRIOR_DEFAULTS = PriorConfig().to_dict()
DATA_DEFAULTS = {
    "dataset": "csv",
    "target_column": -1,
    "standardize": True,
    "n": None,
    "subset": None,
}  # type: Dict[str, Any]
DATASETS = ("csv", "mnist", "cubic", "planted")


class RunConfig:
    def __init__(self, **fields: Any) -> None:
        known = {
            **NETWORK_DEFAULTS,
            **PRIOR_DEFAULTS,
            **TRAIN_DEFAULTS,
            **DATA_DEFAULTS,
        }
        for key in fields:
            if key not in known:
                raise ConfigError("unknown config field: %s" % key)
        values = {**known, **fields}
        self.hidden_widths = list(values["hidden_widths"])  # type: List[int]
        self.nonlinearity = values["nonlinearity"]  # type: str
        self.likelihood = values["likelihood"]  # type: str
        self.prior = PriorConfig.from_dict({k: values[k] for k in PRIOR_DEFAULTS})
        self.train = TrainConfig.from_dict({k: values[k] for k in TRAIN_DEFAULTS})
        self.data = {k: values[k] for k in DATA_DEFAULTS}  # type: Dict[str, Any]
        if self.data["dataset"] not in DATASETS:
            raise ConfigError(
                "invalid value for dataset: %r (expected one of %s)"
                % (self.data["dataset"], ", ".join(DATASETS))
            )
        # catch bad widths before any data is read
        self.network_config(1, 2 if self.likelihood == CATEGORICAL else 1)

    def network_config(self, input_dim: int, output_dim: int) -> NetworkConfig:
        return NetworkConfig.from_dims(
            input_dim,
            self.hidden_widths,
            output_dim,
            nonlinearity=self.nonlinearity,
            likelihood=self.likelihood,
        )

    def with_seed(self, seed: Optional[int]) -> "RunConfig":
        if seed is None:
            return self
        return RunConfig(**{**self.to_dict(), "seed": seed})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "hidden_widths": list(self.hidden_widths),
            "nonlinearity": self.nonlinearity,
            "likelihood": self.likelihood,
            **self.prior.to_dict(),
            **self.train.to_dict(),
            **self.data,
        }


def load_config(path: str) -> RunConfig:
    with open(path) as f:
        try:
            fields = json.load(f)
        except ValueError as e:
            raise ConfigError("%s is not valid JSON: %s" % (path, e))
    if not isinstance(fields, dict):
        raise ConfigError("%s must hold a JSON object" % path)
    return RunConfig(**fields)


def load_dataset(
    config: RunConfig, paths: Sequence[str] = (), split: str = "train"
) -> Dataset:
    """
    The dataset a config names. "csv" reads the first path, "mnist" reads
    a directory of IDX files, "cubic" and "planted" are generated from the
    config's seed, with the test split drawn from the next seed (the cubic
    one on an even grid).
    """
    kind = config.data["dataset"]
    seed = config.train.seed
    if kind == "cubic":
        if split == "test":
            return gen_cubic_grid(CUBIC_GRID_POINTS, seed + 1)
        return gen_cubic(config.data["n"] or 20, seed)
    if kind == "planted":
        return gen_planted_network(config.data["n"] or 500, seed + (split == "test"))
    if not paths:
        raise ConfigError("dataset %s needs a --data path" % kind)
    if kind == "mnist":
        dataset = read_mnist_dir(paths[0], split)
        subset = config.data["subset"]
        if subset is not None and split == "train" and subset < dataset.size:
            rng = np.random.default_rng(seed)
            index = rng.choice(dataset.size, subset, replace=False)
            dataset = dataset.subset(np.sort(index))
        return dataset
    if config.likelihood == CATEGORICAL:
        return read_csv_classification(paths[0], config.data["target_column"])
    return read_csv_regression(paths[0], config.data["target_column"])


def build_model(
    dataset: Dataset,
    hidden_widths: Sequence[int],
    prior: PriorConfig,
    seed: int,
    nonlinearity: str = "relu",
) -> HorseshoeBNN:
    likelihood = GAUSSIAN_REGRESSION if dataset.kind == REGRESSION else CATEGORICAL
    network = NetworkConfig.from_dims(
        dataset.input_dim,
        hidden_widths,
        dataset.output_dim,
        nonlinearity=nonlinearity,
        likelihood=likelihood,
    )
    return HorseshoeBNN.initialize(network, prior, make_init_rng(seed))


def check_schema(model: HorseshoeBNN, dataset: Dataset) -> None:
    categorical = model.network.likelihood == CATEGORICAL
    expected_kind = CLASSIFICATION if categorical else REGRESSION
    if dataset.kind != expected_kind:
        raise DimensionError(
            "schema mismatch: model expects %s data, got %s"
            % (expected_kind, dataset.kind)
        )
    if dataset.input_dim != model.input_dim:
        raise DimensionError(
            "schema mismatch: model expects %d features, got %d"
            % (model.input_dim, dataset.input_dim)
        )
    classes = model.network.widths[-1]
    if dataset.kind == CLASSIFICATION and dataset.num_classes != classes:
        raise DimensionError(
            "schema mismatch: model has %d classes, data has %d"
            % (classes, dataset.num_classes)
        )


def evaluate_model(
    model: HorseshoeBNN,
    dataset: Dataset,
    samples: int = DEFAULT_PREDICTIVE_SAMPLES,
    seed: int = 0,
    standardization: Optional[Standardization] = None,
) -> Tuple[Dict[str, Any], List[List[Any]]]:
    """
    Predictive metrics in the data's own units plus one predictions row
    per test point (header first).
    """
    check_schema(model, dataset)
    rng = np.random.Generator(np.random.PCG64(seed))
    features = dataset.features
    if standardization is not None:
        features = features - standardization.feature_mean
        features = features / standardization.feature_std
    summary = model.predict(features, samples, rng)
    metrics = {"samples": samples, "count": dataset.size}  # type: Dict[str, Any]

    if dataset.kind == CLASSIFICATION:
        labels = summary.labels
        log_density = summary.log_predictive_density(dataset.targets)
        metrics["error_rate"] = float(np.mean(labels != dataset.targets))
        metrics["test_log_likelihood"] = float(np.mean(log_density))
        probabilities = summary.probabilities
        rows = [
            ["index", "target", "prediction", "log_density"]
            + ["p%d" % c for c in range(probabilities.shape[1])]
        ]  # type: List[List[Any]]
        for index in range(dataset.size):
            target, label = int(dataset.targets[index]), int(labels[index])
            rows.append(
                [index, target, label, log_density[index]] + list(probabilities[index])
            )
        return metrics, rows

    mean, variance = summary.mean, summary.variance
    if standardization is not None:
        log_density = standardization.restore_log_density(
            summary.log_predictive_density(
                standardization.standardize_targets(dataset.targets)
            )
        )
        mean = standardization.restore_targets(mean)
        variance = standardization.restore_variance(variance)
    else:
        log_density = summary.log_predictive_density(dataset.targets)
    metrics["rmse"] = float(np.sqrt(np.mean((mean - dataset.targets) ** 2)))
    metrics["test_log_likelihood"] = float(np.mean(log_density))
    rows = [["index", "target", "prediction", "variance", "log_density"]]
    for index in range(dataset.size):
        rows.append(
            [
                index,
                dataset.targets[index],
                mean[index],
                variance[index],
                log_density[index],
            ]
        )
    return metrics, rows


def _csv_text(rows: Iterable[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for row in rows:
        writer.writerow(
            [repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row]
        )
    return out.getvalue()


def _json_text(value: Any) -> str:
    return json.dumps(value, sort_keys=True, indent=2) + "\n"


class HsbnnClient:
    def __init__(self, store: AbstractCheckpointStore) -> None:
        self._store = store

    @property
    def store(self) -> AbstractCheckpointStore:
        return self._store

    def train(
        self,
        config: RunConfig,
        dataset: Dataset,
        callbacks: Iterable[Callback] = (),
        name: str = CHECKPOINT,
    ) -> Checkpoint:
        standardization = None
        if dataset.kind == REGRESSION and config.data["standardize"]:
            (dataset,), standardization = standardize(dataset)
        model = build_model(
            dataset,
            config.hidden_widths,
            config.prior,
            config.train.seed,
            config.nonlinearity,
        )
        trainer = Trainer(model, config.train)
        trainer.fit(dataset, callbacks)
        checkpoint = Checkpoint.from_trainer(trainer, standardization)
        self._store.save(name, checkpoint)
        history = trainer.history.to_jsonl(config.train.record_wall_time)
        self._store.put_text(HISTORY, history)
        reports = [report.to_dict() for report in sparsity_reports(trainer.model)]
        self._store.put_text(SPARSITY, _json_text(reports))
        logger.info("wrote %s after %d steps", name, trainer.step_count)
        return checkpoint

    def load(self, name: str = CHECKPOINT) -> Checkpoint:
        return self._store.load(name)

    def exists(self, name: str = CHECKPOINT) -> bool:
        return self._store.exists(name)

    def evaluate(
        self,
        dataset: Dataset,
        samples: int = DEFAULT_PREDICTIVE_SAMPLES,
        seed: int = 0,
        name: str = CHECKPOINT,
    ) -> Dict[str, Any]:
        checkpoint = self.load(name)
        metrics, rows = evaluate_model(
            checkpoint.to_model(),
            dataset,
            samples,
            seed,
            checkpoint.meta.standardization,
        )
        self._store.put_text(METRICS, _json_text(metrics))
        self._store.put_text(PREDICTIONS, _csv_text(rows))
        logger.info("evaluated %s on %d points", name, dataset.size)
        return metrics

    def inspect(
        self,
        layer: int = 0,
        threshold: float = DEFAULT_THRESHOLD,
        name: str = CHECKPOINT,
    ) -> SparsityReport:
        report = SparsityReport.from_model(self.load(name).to_model(), layer, threshold)
        self._store.put_text("sparsity-layer%d.json" % layer, report.to_json() + "\n")
        self._store.put_text("norms-layer%d.csv" % layer, report.curve_csv())
        self._store.put_text("histograms-layer%d.csv" % layer, report.histogram_csv())
        return report
