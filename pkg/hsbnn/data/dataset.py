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

import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from hsbnn.exceptions import ContractError, DimensionError, DomainError

REGRESSION = "regression"
CLASSIFICATION = "classification"


class Dataset:
    def __init__(
        self,
        features: Any,
        targets: Any,
        kind: str = REGRESSION,
        num_classes: Optional[int] = None,
        standardization: Optional["Standardization"] = None,
        name: Optional[str] = None,
    ) -> None:
        self.features = np.asarray(features, dtype=np.float64)
        self.kind = kind
        if kind == CLASSIFICATION:
            self.targets = np.asarray(targets, dtype=np.int64)
        else:
            self.targets = np.asarray(targets, dtype=np.float64)
        self.num_classes = num_classes
        self.standardization = standardization
        self.name = name
        self._validate(np.asarray(targets))

    def _validate(self, raw_targets: np.ndarray) -> None:
        if self.kind not in (REGRESSION, CLASSIFICATION):
            raise ContractError("unknown dataset kind: %s" % self.kind)
        if self.features.ndim != 2:
            raise DimensionError(
                "features must be (N, D), got %s" % (self.features.shape,)
            )
        if self.features.shape[0] < 1:
            raise DimensionError("a dataset needs at least one row")
        if self.targets.shape != (self.features.shape[0],):
            raise DimensionError(
                "targets %s do not match %d rows"
                % (self.targets.shape, self.features.shape[0])
            )
        if not np.all(np.isfinite(self.features)):
            row = int(np.argwhere(~np.isfinite(self.features))[0][0])
            raise DomainError("non-finite feature in row %d" % row)
        if self.kind == REGRESSION:
            if not np.all(np.isfinite(self.targets)):
                row = int(np.argmin(np.isfinite(self.targets)))
                raise DomainError("non-finite target in row %d" % row)
            return
        if self.num_classes is None or self.num_classes < 2:
            raise ContractError("classification needs num_classes >= 2")
        fractional = np.any(raw_targets != np.round(raw_targets))
        if raw_targets.dtype.kind == "f" and fractional:
            raise DomainError("class labels must be integers")
        if self.targets.min() < 0 or self.targets.max() >= self.num_classes:
            raise DomainError("class labels must lie in [0, %d)" % self.num_classes)

    @property
    def size(self) -> int:
        return self.features.shape[0]

    @property
    def input_dim(self) -> int:
        return self.features.shape[1]

    @property
    def output_dim(self) -> int:
        return 1 if self.kind == REGRESSION else self.num_classes  # type: ignore

    def __len__(self) -> int:
        return self.size

    def subset(self, index: Sequence[int]) -> "Dataset":
        index = np.asarray(index, dtype=np.int64)
        return Dataset(
            self.features[index],
            self.targets[index],
            self.kind,
            self.num_classes,
            self.standardization,
            self.name,
        )

    def replace(self, **fields: Any) -> "Dataset":
        values = {
            "features": self.features,
            "targets": self.targets,
            "kind": self.kind,
            "num_classes": self.num_classes,
            "standardization": self.standardization,
            "name": self.name,
        }
        values.update(fields)
        return Dataset(**values)


class Standardization:
    def __init__(
        self,
        feature_mean: Any,
        feature_std: Any,
        target_mean: float,
        target_std: float,
    ) -> None:
        self.feature_mean = np.asarray(feature_mean, dtype=np.float64)
        self.feature_std = np.asarray(feature_std, dtype=np.float64)
        self.target_mean = float(target_mean)
        self.target_std = float(target_std)
        if np.any(self.feature_std <= 0) or self.target_std <= 0:
            raise DomainError("standardization scales must be positive")

    @classmethod
    def fit(cls, dataset: Dataset) -> "Standardization":
        if dataset.kind != REGRESSION:
            raise ContractError("standardization applies to regression data only")
        feature_std = dataset.features.std(axis=0)
        # zero-variance columns are only centered
        feature_std = np.where(feature_std > 0, feature_std, 1.0)
        target_std = float(dataset.targets.std())
        return cls(
            dataset.features.mean(axis=0),
            feature_std,
            float(dataset.targets.mean()),
            target_std if target_std > 0 else 1.0,
        )

    def apply(self, dataset: Dataset) -> Dataset:
        if dataset.input_dim != self.feature_mean.shape[0]:
            raise DimensionError(
                "dataset has %d features, standardization covers %d"
                % (dataset.input_dim, self.feature_mean.shape[0])
            )
        return dataset.replace(
            features=(dataset.features - self.feature_mean) / self.feature_std,
            targets=self.standardize_targets(dataset.targets),
            standardization=self,
        )

    def standardize_targets(self, y: Any) -> np.ndarray:
        return (np.asarray(y, dtype=np.float64) - self.target_mean) / self.target_std

    def restore_targets(self, y: Any) -> np.ndarray:
        return np.asarray(y, dtype=np.float64) * self.target_std + self.target_mean

    def restore_variance(self, variance: Any) -> np.ndarray:
        return np.asarray(variance, dtype=np.float64) * self.target_std ** 2

    def restore_log_density(self, log_density: Any) -> np.ndarray:
        return np.asarray(log_density, dtype=np.float64) - math.log(self.target_std)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "feature_mean": self.feature_mean.tolist(),
            "feature_std": self.feature_std.tolist(),
            "target_mean": self.target_mean,
            "target_std": self.target_std,
        }

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "Standardization":
        return cls(
            fields["feature_mean"],
            fields["feature_std"],
            fields["target_mean"],
            fields["target_std"],
        )


def standardize(
    train: Dataset, *others: Dataset
) -> Tuple[List[Dataset], Standardization]:
    record = Standardization.fit(train)
    return [record.apply(dataset) for dataset in (train, *others)], record
