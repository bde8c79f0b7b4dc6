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

from abc import ABCMeta, abstractmethod
from typing import Any, Dict, Optional, Type

import numpy as np
from scipy.special import logsumexp, softmax

from hsbnn.autograd import ops
from hsbnn.distributions import GammaQ, gamma_expectations, normal_logpdf
from hsbnn.distributions.densities import LOG_2PI
from hsbnn.exceptions import ContractError, DimensionError, DomainError
from hsbnn.model.config import CATEGORICAL, GAUSSIAN_REGRESSION


class AbstractLikelihood(metaclass=ABCMeta):
    uses_noise = False

    @staticmethod
    @abstractmethod
    def get_type() -> str:
        pass

    @abstractmethod
    def expected_log_likelihood(
        self, f: Any, y: np.ndarray, noise: Optional[GammaQ]
    ) -> Any:
        """Sum over the batch of E_q(gamma)[ln p(y_n | f_n)] for one draw of f."""

    @abstractmethod
    def log_predictive_density(
        self, f_samples: np.ndarray, y: np.ndarray, gamma_samples: Optional[np.ndarray]
    ) -> np.ndarray:
        """Per-point ln (1/M) sum_m p(y_n | f_mn, gamma_m)."""


class GaussianRegressionLikelihood(AbstractLikelihood):
    uses_noise = True

    @staticmethod
    def get_type() -> str:
        return GAUSSIAN_REGRESSION

    def expected_log_likelihood(
        self, f: Any, y: np.ndarray, noise: Optional[GammaQ]
    ) -> Any:
        if noise is None:
            raise ContractError("gaussian regression needs a noise posterior")
        y = np.asarray(y, dtype=np.float64).reshape(-1, 1)
        if ops.value(f).shape != y.shape:
            raise DimensionError(
                "outputs %s do not match targets %s" % (ops.value(f).shape, y.shape)
            )
        mean_gamma, mean_log_gamma = gamma_expectations(noise)
        count = y.shape[0]
        squared = ops.sum(ops.square(ops.sub(y, f)))
        return (
            count * (0.5 * mean_log_gamma - 0.5 * LOG_2PI) - 0.5 * mean_gamma * squared
        )

    def log_predictive_density(
        self, f_samples: np.ndarray, y: np.ndarray, gamma_samples: Optional[np.ndarray]
    ) -> np.ndarray:
        if gamma_samples is None:
            raise ContractError("gaussian regression needs precision samples")
        means = f_samples.reshape(f_samples.shape[0], -1)
        variances = (1.0 / gamma_samples)[:, None]
        y = np.asarray(y, dtype=np.float64).reshape(1, -1)
        logpdf = normal_logpdf(np.broadcast_to(y, means.shape), means, variances)
        return logsumexp(logpdf, axis=0) - np.log(means.shape[0])


class CategoricalLikelihood(AbstractLikelihood):
    @staticmethod
    def get_type() -> str:
        return CATEGORICAL

    @staticmethod
    def labels(y: Any, classes: int) -> np.ndarray:
        values = np.asarray(y)
        labels = values.astype(np.int64)
        if values.ndim != 1 or np.any(labels != values):
            raise DomainError("class labels must be a vector of integers")
        if labels.size and (labels.min() < 0 or labels.max() >= classes):
            raise DomainError("class labels must lie in [0, %d)" % classes)
        return labels

    def expected_log_likelihood(
        self, f: Any, y: np.ndarray, noise: Optional[GammaQ]
    ) -> Any:
        shape = ops.value(f).shape
        labels = self.labels(y, shape[1])
        if labels.shape[0] != shape[0]:
            raise DimensionError(
                "outputs %s do not match %d labels" % (shape, labels.shape[0])
            )
        onehot = np.eye(shape[1])[labels]
        return ops.sum(ops.mul(f, onehot)) - ops.sum(ops.logsumexp(f, axis=1))

    def log_predictive_density(
        self, f_samples: np.ndarray, y: np.ndarray, gamma_samples: Optional[np.ndarray]
    ) -> np.ndarray:
        labels = self.labels(y, f_samples.shape[2])
        log_probs = f_samples - logsumexp(f_samples, axis=2, keepdims=True)
        picked = log_probs[:, np.arange(labels.shape[0]), labels]
        return logsumexp(picked, axis=0) - np.log(f_samples.shape[0])

    @staticmethod
    def probabilities(f_samples: np.ndarray) -> np.ndarray:
        return softmax(f_samples, axis=2).mean(axis=0)


class LikelihoodFactory:
    class InvalidLikelihoodTypeError(Exception):
        pass

    LIKELIHOOD_MAP = {
        GaussianRegressionLikelihood.get_type(): GaussianRegressionLikelihood,
        CategoricalLikelihood.get_type(): CategoricalLikelihood,
    }  # type: Dict[str, Type[AbstractLikelihood]]

    @classmethod
    def create(cls, likelihood_type: str) -> AbstractLikelihood:
        likelihood_cls = cls.LIKELIHOOD_MAP.get(likelihood_type)
        if likelihood_cls is None:
            raise cls.InvalidLikelihoodTypeError(likelihood_type)
        return likelihood_cls()


def expected_log_likelihood(
    f: Any, y: np.ndarray, kind: str, noise: Optional[GammaQ] = None
) -> Any:
    return LikelihoodFactory.create(kind).expected_log_likelihood(f, y, noise)
