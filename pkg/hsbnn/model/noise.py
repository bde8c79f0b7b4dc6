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

import copy
from typing import Any, Dict, Mapping, Optional

import numpy as np

from hsbnn.autograd import ops
from hsbnn.distributions import GammaQ, expected_log_gamma_prior
from hsbnn.exceptions import DomainError

PRIOR_SHAPE = 6.0
PRIOR_RATE = 6.0


class NoiseModel:
    def __init__(
        self,
        params: Dict[str, np.ndarray],
        prior_shape: float = PRIOR_SHAPE,
        prior_rate: float = PRIOR_RATE,
    ) -> None:
        if set(params) != {"alpha_raw", "beta_raw"}:
            raise DomainError("noise model expects alpha_raw and beta_raw")
        self.params = params
        self.prior_shape = prior_shape
        self.prior_rate = prior_rate

    @classmethod
    def initialize(
        cls, prior_shape: float = PRIOR_SHAPE, prior_rate: float = PRIOR_RATE
    ) -> "NoiseModel":
        return cls(
            {
                "alpha_raw": np.asarray(ops.softplus_inverse(prior_shape)),
                "beta_raw": np.asarray(ops.softplus_inverse(prior_rate)),
            },
            prior_shape,
            prior_rate,
        )

    def q(self, p: Optional[Mapping[str, Any]] = None) -> GammaQ:
        p = self.params if p is None else p
        return GammaQ(ops.softplus(p["alpha_raw"]), ops.softplus(p["beta_raw"]))

    def expected_log_prior(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        return expected_log_gamma_prior(self.q(p), self.prior_shape, self.prior_rate)

    def entropy(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        return self.q(p).entropy()

    def copy(self) -> "NoiseModel":
        return copy.deepcopy(self)
