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

from typing import Any, Dict, Optional

import numpy as np

from hsbnn.exceptions import ContractError, DimensionError

from .likelihood import AbstractLikelihood, CategoricalLikelihood


class PredictiveSummary:
    def __init__(
        self,
        likelihood: AbstractLikelihood,
        f_samples: np.ndarray,
        gamma_samples: Optional[np.ndarray] = None,
    ) -> None:
        if f_samples.ndim != 3:
            raise DimensionError(
                "expected (samples, batch, outputs), got %s" % (f_samples.shape,)
            )
        self.likelihood = likelihood
        self.f_samples = f_samples
        self.gamma_samples = gamma_samples

    @property
    def samples(self) -> int:
        return self.f_samples.shape[0]

    @property
    def is_classification(self) -> bool:
        return isinstance(self.likelihood, CategoricalLikelihood)

    def _regression_only(self) -> None:
        if self.is_classification:
            raise ContractError("not defined for classification")

    def _classification_only(self) -> None:
        if not self.is_classification:
            raise ContractError("only defined for classification")

    @property
    def mean(self) -> np.ndarray:
        self._regression_only()
        return self.f_samples[:, :, 0].mean(axis=0)

    @property
    def variance(self) -> np.ndarray:
        self._regression_only()
        noise = float(np.mean(1.0 / self.gamma_samples))  # type: ignore
        return self.f_samples[:, :, 0].var(axis=0) + noise

    @property
    def probabilities(self) -> np.ndarray:
        self._classification_only()
        return CategoricalLikelihood.probabilities(self.f_samples)

    @property
    def labels(self) -> np.ndarray:
        return np.argmax(self.probabilities, axis=1)

    def log_predictive_density(self, y: np.ndarray) -> np.ndarray:
        y = np.asarray(y)
        if y.shape[0] != self.f_samples.shape[1]:
            raise DimensionError(
                "%d targets for a batch of %d" % (y.shape[0], self.f_samples.shape[1])
            )
        return self.likelihood.log_predictive_density(
            self.f_samples, y, self.gamma_samples
        )

    def metrics(self, y: np.ndarray) -> Dict[str, Any]:
        lpd = self.log_predictive_density(y)
        metrics = {
            "samples": self.samples,
            "count": int(lpd.shape[0]),
        }  # type: Dict[str, Any]
        metrics["test_log_likelihood"] = float(np.mean(lpd))
        if self.is_classification:
            metrics["error_rate"] = float(np.mean(self.labels != np.asarray(y)))
        else:
            metrics["rmse"] = float(np.sqrt(np.mean((self.mean - np.asarray(y)) ** 2)))
        return metrics
