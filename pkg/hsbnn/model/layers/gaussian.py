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
from hsbnn.model.config import GAUSSIAN_BASELINE, PriorConfig

from .base import (
    INIT_LOG_OUTPUT_SCALE,
    AbstractLayer,
    ScalePair,
    init_scale,
    init_weight_block,
    kappa_factor,
    lognormal_from,
    sample_pre_activations,
    sigma2_from_raw,
)


class GaussianLayer(AbstractLayer):
    @staticmethod
    def get_type() -> str:
        return GAUSSIAN_BASELINE

    @classmethod
    def param_shapes(cls, fan_in: int, width: int) -> Dict[str, Tuple[int, ...]]:
        return {
            "w_mu": (fan_in, width),
            "w_raw": (fan_in, width),
            "kappa_mu": (),
            "kappa_raw": (),
        }

    @classmethod
    def initialize(
        cls, fan_in: int, width: int, prior: PriorConfig, rng: np.random.Generator
    ) -> "GaussianLayer":
        params = {
            **init_weight_block(rng, "w", fan_in, width),
            **init_scale("kappa", (), INIT_LOG_OUTPUT_SCALE),
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
        q_kappa = lognormal_from(self._values(p), "kappa")
        return [("rho_kappa", q_kappa, self.prior.bkappa)]

    def expected_log_prior(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_kappa = lognormal_from(p, "kappa")
        second_moment = ops.sum(ops.square(p["w_mu"]) + sigma2_from_raw(p["w_raw"]))
        weights = expected_log_scaled_normal(
            second_moment,
            self.fan_in * self.width,
            (kappa_factor(q_kappa, self.prior.output_scale),),
        )
        return weights + expected_log_hs_scale_terms(
            q_kappa, self.aux["rho_kappa"], self.prior.bkappa
        )

    def entropy(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        p = self._values(p)
        q_w = GaussianQ(p["w_mu"], sigma2_from_raw(p["w_raw"]))
        kappa = lognormal_from(p, "kappa").entropy()
        return ops.sum(q_w.entropy()) + kappa + self.aux_entropy()

    def expected_node_weights(self) -> np.ndarray:
        return np.array(self.params["w_mu"])
