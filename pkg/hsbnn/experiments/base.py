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
from abc import ABCMeta, abstractmethod
from threading import Thread
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from hsbnn.client import build_model
from hsbnn.data import Dataset
from hsbnn.exceptions import ConfigError
from hsbnn.inference import TrainConfig, Trainer
from hsbnn.model import HorseshoeBNN, PriorConfig

logger = logging.getLogger(__name__)

OPTION_DEFAULTS = {
    "seed": 0,
    "replicates": None,
    "workers": 1,
    "samples": None,
    "epochs": None,
    "steps": None,
    "widths": None,
    "modes": None,
    "forward_variant": None,
    "data": None,
    "protocol": None,
    "subset": None,
}  # type: Dict[str, Any]


class ExperimentOptions:
    def __init__(self, **fields: Any) -> None:
        for key in fields:
            if key not in OPTION_DEFAULTS:
                raise ConfigError("unknown experiment option: %s" % key)
        values = {**OPTION_DEFAULTS, **fields}
        for key, value in values.items():
            setattr(self, key, value)
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigError("invalid value for workers: %r" % (self.workers,))
        if self.replicates is not None and (
            not isinstance(self.replicates, int) or self.replicates < 1
        ):
            raise ConfigError("invalid value for replicates: %r" % (self.replicates,))

    def get(self, key: str, default: Any) -> Any:
        value = getattr(self, key)
        return default if value is None else value

    def to_dict(self) -> Dict[str, Any]:
        return {key: getattr(self, key) for key in OPTION_DEFAULTS}


def replicate_seeds(seed: int, replicate: int, count: int = 2) -> List[int]:
    state = np.random.SeedSequence([seed, replicate]).generate_state(count)
    return [int(value) for value in state]


def run_replicates(fn: Callable[[int], Any], count: int, workers: int = 1) -> List[Any]:
    results = [None] * count  # type: List[Any]
    errors = [None] * count  # type: List[Optional[BaseException]]

    def perform(indices: Sequence[int]) -> None:
        for index in indices:
            try:
                results[index] = fn(index)
            except BaseException as e:
                errors[index] = e

    if workers == 1:
        perform(range(count))
    else:
        threads = [
            _start_thread(perform, args=(range(offset, count, workers),))
            for offset in range(min(workers, count))
        ]
        for thread in threads:
            thread.join()

    for error in errors:
        if error is not None:
            raise error
    return results


def _start_thread(fn: Callable, args: tuple = ()) -> Thread:
    thread = Thread(target=fn, args=args)
    thread.daemon = True
    thread.start()
    return thread


def summarize(values: Sequence[float]) -> Dict[str, float]:
    array = np.asarray(values, dtype=np.float64)
    std = float(array.std(ddof=1)) if array.size > 1 else 0.0
    return {
        "mean": float(array.mean()),
        "std": std,
        "se": std / float(np.sqrt(array.size)),
        "count": int(array.size),
    }


class ResultsBundle:
    def __init__(
        self,
        experiment: str,
        options: Dict[str, Any],
        records: List[Dict[str, Any]],
        summary: List[Dict[str, Any]],
    ) -> None:
        self.experiment = experiment
        self.options = options
        self.records = records
        self.summary = summary

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "options": self.options,
            "records": self.records,
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def records_csv(self) -> str:
        if not self.records:
            return ""
        columns = sorted({key for record in self.records for key in record})
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for record in self.records:
            writer.writerow(
                {
                    key: repr(value) if isinstance(value, float) else value
                    for key, value in record.items()
                }
            )
        return out.getvalue()


class AbstractExperiment(metaclass=ABCMeta):
    @staticmethod
    @abstractmethod
    def get_type() -> str:
        pass

    @abstractmethod
    def run(self, options: ExperimentOptions) -> ResultsBundle:
        pass


def group_summary(
    records: Sequence[Dict[str, Any]], keys: Sequence[str], metrics: Sequence[str]
) -> List[Dict[str, Any]]:
    groups = {}  # type: Dict[tuple, List[Dict[str, Any]]]
    for record in records:
        groups.setdefault(tuple(record[key] for key in keys), []).append(record)
    rows = []
    for values, members in groups.items():
        row = dict(zip(keys, values))  # type: Dict[str, Any]
        for metric in metrics:
            row[metric] = summarize([member[metric] for member in members])
        rows.append(row)
    return rows


def fit_model(
    train: Dataset, hidden_widths: Sequence[int], prior: PriorConfig, cfg: TrainConfig
) -> HorseshoeBNN:
    model = build_model(train, hidden_widths, prior, cfg.seed)
    Trainer(model, cfg).fit(train)
    return model
