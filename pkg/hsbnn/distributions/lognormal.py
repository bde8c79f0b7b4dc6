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

from hsbnn.autograd import ops

from .base import AbstractVariationalFactor
from .gaussian import LOG_2PI_E


class LogNormalQ(AbstractVariationalFactor):
    def __init__(self, mu: Any, sigma2: Any) -> None:
        self._require_positive("sigma2", sigma2)
        self.mu = mu
        self.sigma2 = sigma2

    @classmethod
    def get_type(cls) -> str:
        return "lognormal"

    def parameters(self) -> Dict[str, Any]:
        return {"mu": self.mu, "sigma2": self.sigma2}

    def mean(self) -> Any:
        return ops.exp(self.mu + 0.5 * self.sigma2)

    def mean_inverse(self) -> Any:
        return ops.exp(0.5 * self.sigma2 - self.mu)

    def mean_inverse_square(self) -> Any:
        return ops.exp(2.0 * self.sigma2 - 2.0 * self.mu)

    def mean_log(self) -> Any:
        return self.mu

    def std(self) -> Any:
        return ops.sqrt(self.sigma2)

    def moments(self) -> Tuple[Any, Any, Any]:
        return self.mean(), self.mean_inverse(), self.mean_log()

    def entropy(self) -> Any:
        return self.mu + 0.5 * (ops.log(self.sigma2) + LOG_2PI_E)
