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

from typing import Any, Dict

import numpy as np

from hsbnn.autograd import ops
from hsbnn.exceptions import DomainError

from .base import AbstractVariationalFactor


class InvGammaQ(AbstractVariationalFactor):
    def __init__(self, c: Any, d: Any) -> None:
        self._require_positive("c", c)
        self._require_positive("d", d)
        self.c = c
        self.d = d

    @classmethod
    def get_type(cls) -> str:
        return "invgamma"

    def parameters(self) -> Dict[str, Any]:
        return {"c": self.c, "d": self.d}

    def mean_inverse(self) -> Any:
        return self.c / self.d

    def mean_log(self) -> Any:
        return ops.log(self.d) - ops.digamma(self.c)

    def mean_log_inverse(self) -> Any:
        return ops.digamma(self.c) - ops.log(self.d)

    def entropy(self) -> Any:
        return (
            self.c
            + ops.log(self.d)
            + ops.gammaln(self.c)
            - (1.0 + self.c) * ops.digamma(self.c)
        )

    def sample(self, rng: np.random.Generator, size: Any = None) -> np.ndarray:
        c, d = ops.value(self.c), ops.value(self.d)
        return 1.0 / rng.gamma(c, 1.0 / d, size=size)

    @classmethod
    def at_fixed_point(cls, mean_inverse_scale: Any, b: float) -> "InvGammaQ":
        if b <= 0:
            raise DomainError("hyper-scale must be positive, got %r" % b)
        d = np.asarray(ops.value(mean_inverse_scale), dtype=np.float64) + 1.0 / (b * b)
        return cls(np.ones_like(d), d)
