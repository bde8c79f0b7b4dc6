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
from hsbnn.model.config import HS_NONCENTERED, PriorConfig

from .base import (
    INIT_LOG_NODE_SCALE,
    NonCenteredLayer,
    ScalePair,
    init_scale,
    init_weight_block,
    lognormal_from,
    sigma2_from_raw,
)


class HsLayer(NonCenteredLayer):
    """
    Hidden layer under the horseshoe prior, non-centered:
    w_kl = tau_k * upsilon * beta_kl with a half-Cauchy(b0) node scale
    tau_k per unit and a half-Cauchy(bg) layer scale upsilon.
    """

    @staticmethod
    def get_type() -> str:
        return HS_NONCENTERED

    @classmethod
    def param_shapes(cls, fan_in: int, width: int) -> Dict[str, Tuple[int, ...]]:
        return {
            "beta_mu": (fan_in, width),
            "beta_raw": (fan_in, width),
            "tau_mu": (width,),
            "tau_raw": (width,),
            "upsilon_mu": (),
            "upsilon_raw": (),
        }

    @classmethod
    def initialize(
        cls, fan_in: int, width: int, prior: PriorConfig, rng: np.random.Generator
    ) -> "HsLayer":
        params = {
            **init_weight_block(rng, "beta", fan_in, width),
            **init_scale("tau", (width,), INIT_LOG_NODE_SCALE),
            **init_scale("upsilon", (), INIT_LOG_NODE_SCALE),
        }
        layer = cls(fan_in, width, prior, params, {})
        layer.refresh_aux()
        return layer

    def multiplier_factors(
        self, p: Optional[Mapping[str, Any]] = None
    ) -> List[LogNormalQ]:
        p = self._values(p)
        return [lognormal_from(p, "tau"), lognormal_from(p, "upsilon")]

    def scale_pairs(self, p: Optional[Mapping[str, Any]] = None) -> List[ScalePair]:
        q_tau, q_upsilon = self.multiplier_factors(p)
        return [
            ("lambda", q_tau, self.prior.b0),
            ("vartheta", q_upsilon, self.prior.bg),
        ]

    def expected_log_prior(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_tau, q_upsilon = self.multiplier_factors(p)
        beta = ops.sum(
            expected_log_std_normal(p["beta_mu"], sigma2_from_raw(p["beta_raw"]))
        )
        tau = ops.sum(
            expected_log_hs_scale_terms(q_tau, self.aux["lambda"], self.prior.b0)
        )
        upsilon = expected_log_hs_scale_terms(
            q_upsilon, self.aux["vartheta"], self.prior.bg
        )
        return beta + tau + upsilon

    def entropy(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_tau, q_upsilon = self.multiplier_factors(p)
        q_beta = GaussianQ(p["beta_mu"], sigma2_from_raw(p["beta_raw"]))
        return (
            ops.sum(q_beta.entropy())
            + ops.sum(q_tau.entropy())
            + q_upsilon.entropy()
            + self.aux_entropy()
        )
