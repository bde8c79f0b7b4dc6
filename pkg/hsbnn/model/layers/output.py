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

from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np

from hsbnn.autograd import ops
from hsbnn.distributions import (
    GaussianQ,
    LogNormalQ,
    expected_log_hs_scale_terms,
    expected_log_std_normal,
)
from hsbnn.model.config import PriorConfig

from .base import (
    INIT_LOG_OUTPUT_SCALE,
    NonCenteredLayer,
    ScalePair,
    init_scale,
    init_weight_block,
    kappa_factor,
    lognormal_from,
    sigma2_from_raw,
)


class OutputLayer(NonCenteredLayer):
    @staticmethod
    def get_type() -> str:
        return "output"

    @classmethod
    def param_shapes(cls, fan_in: int, width: int) -> Dict[str, Tuple[int, ...]]:
        return {
            "beta_mu": (fan_in, width),
            "beta_raw": (fan_in, width),
            "kappa_mu": (),
            "kappa_raw": (),
        }

    @classmethod
    def initialize(
        cls, fan_in: int, width: int, prior: PriorConfig, rng: np.random.Generator
    ) -> "OutputLayer":
        params = {
            **init_weight_block(rng, "beta", fan_in, width),
            **init_scale("kappa", (), INIT_LOG_OUTPUT_SCALE),
        }
        layer = cls(fan_in, width, prior, params, {})
        layer.refresh_aux()
        return layer

    def multiplier_factors(
        self, p: Optional[Mapping[str, Any]] = None
    ) -> List[LogNormalQ]:
        q_kappa = lognormal_from(self._values(p), "kappa")
        return [kappa_factor(q_kappa, self.prior.output_scale)]

    def scale_pairs(self, p: Optional[Mapping[str, Any]] = None) -> List[ScalePair]:
        q_kappa = lognormal_from(self._values(p), "kappa")
        return [("rho_kappa", q_kappa, self.prior.bkappa)]

    def expected_log_prior(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_kappa = lognormal_from(p, "kappa")
        beta = ops.sum(
            expected_log_std_normal(p["beta_mu"], sigma2_from_raw(p["beta_raw"]))
        )
        return beta + expected_log_hs_scale_terms(
            q_kappa, self.aux["rho_kappa"], self.prior.bkappa
        )

    def entropy(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_beta = GaussianQ(p["beta_mu"], sigma2_from_raw(p["beta_raw"]))
        q_kappa = lognormal_from(p, "kappa")
        return ops.sum(q_beta.entropy()) + q_kappa.entropy() + self.aux_entropy()
