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

from typing import Any, Dict, Tuple

import numpy as np

from hsbnn.autograd import ops

from .base import AbstractVariationalFactor


class GammaQ(AbstractVariationalFactor):
    def __init__(self, alpha: Any, beta: Any) -> None:
        self._require_positive("alpha", alpha)
        self._require_positive("beta", beta)
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def get_type(cls) -> str:
        return "gamma"

    def parameters(self) -> Dict[str, Any]:
        return {"alpha": self.alpha, "beta": self.beta}

    def mean(self) -> Any:
        return self.alpha / self.beta

    def mean_log(self) -> Any:
        return ops.digamma(self.alpha) - ops.log(self.beta)

    def expectations(self) -> Tuple[Any, Any]:
        return self.mean(), self.mean_log()

    def entropy(self) -> Any:
        return (
            self.alpha
            - ops.log(self.beta)
            + ops.gammaln(self.alpha)
            + (1.0 - self.alpha) * ops.digamma(self.alpha)
        )

    def sample(self, rng: np.random.Generator, size: Any = None) -> np.ndarray:
        alpha, beta = ops.value(self.alpha), ops.value(self.beta)
        return rng.gamma(alpha, 1.0 / beta, size=size)
