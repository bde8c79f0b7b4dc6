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
    expected_log_hs_scale_terms,
    expected_log_scaled_normal,
)
from hsbnn.model.config import HS_CENTERED, PriorConfig

from .base import (
    INIT_LOG_NODE_SCALE,
    AbstractLayer,
    ScalePair,
    init_scale,
    init_weight_block,
    lognormal_from,
    sample_pre_activations,
    sigma2_from_raw,
)


class CenteredHsLayer(AbstractLayer):
    """
    Horseshoe hidden layer parameterized directly in w:
    w_kl ~ N(0, tau_k^2 upsilon^2). Kept as the ablation partner of
    `HsLayer`; the scales only reach the data through the prior term.
    """

    @staticmethod
    def get_type() -> str:
        return HS_CENTERED

    @classmethod
    def param_shapes(cls, fan_in: int, width: int) -> Dict[str, Tuple[int, ...]]:
        return {
            "w_mu": (fan_in, width),
            "w_raw": (fan_in, width),
            "tau_mu": (width,),
            "tau_raw": (width,),
            "upsilon_mu": (),
            "upsilon_raw": (),
        }

    @classmethod
    def initialize(
        cls, fan_in: int, width: int, prior: PriorConfig, rng: np.random.Generator
    ) -> "CenteredHsLayer":
        params = {
            **init_weight_block(rng, "w", fan_in, width),
            **init_scale("tau", (width,), INIT_LOG_NODE_SCALE),
            **init_scale("upsilon", (), INIT_LOG_NODE_SCALE),
        }
        layer = cls(fan_in, width, prior, params, {})
        layer.refresh_aux()
        return layer

    def forward(
        self,
        a: Any,
        rng: np.random.Generator,
        p: Optional[Mapping[str, Any]] = None,
        variant: Optional[str] = None,
    ) -> Any:
        self._check_inputs(a)
        p = self._values(p)
        mean = ops.matmul(a, p["w_mu"])
        variance = ops.matmul(ops.square(a), sigma2_from_raw(p["w_raw"]))
        return sample_pre_activations(mean, variance, rng)

    def scale_pairs(self, p: Optional[Mapping[str, Any]] = None) -> List[ScalePair]:
        p = self._values(p)
        return [
            ("lambda", lognormal_from(p, "tau"), self.prior.b0),
            ("vartheta", lognormal_from(p, "upsilon"), self.prior.bg),
        ]

    def expected_log_prior(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_tau = lognormal_from(p, "tau")
        q_upsilon = lognormal_from(p, "upsilon")
        # per unit: sum over incoming edges of E[w^2]
        second_moment = ops.sum(
            ops.square(p["w_mu"]) + sigma2_from_raw(p["w_raw"]), axis=0
        )
        weights = ops.sum(
            expected_log_scaled_normal(second_moment, self.fan_in, (q_tau, q_upsilon))
        )
        tau = ops.sum(
            expected_log_hs_scale_terms(q_tau, self.aux["lambda"], self.prior.b0)
        )
        upsilon = expected_log_hs_scale_terms(
            q_upsilon, self.aux["vartheta"], self.prior.bg
        )
        return weights + tau + upsilon

    def entropy(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_w = GaussianQ(p["w_mu"], sigma2_from_raw(p["w_raw"]))
        return (
            ops.sum(q_w.entropy())
            + ops.sum(lognormal_from(p, "tau").entropy())
            + lognormal_from(p, "upsilon").entropy()
            + self.aux_entropy()
        )

    def expected_node_weights(self) -> np.ndarray:
        return np.array(self.params["w_mu"])
