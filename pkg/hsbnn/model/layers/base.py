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
from abc import ABCMeta, abstractmethod
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np

from hsbnn.autograd import ops
from hsbnn.distributions import InvGammaQ, LogNormalQ, sample_reparam_gaussian
from hsbnn.exceptions import DimensionError, DomainError
from hsbnn.model.config import EXPECTED_SCALES, SCALE_IS_VARIANCE, PriorConfig

INIT_WEIGHT_VARIANCE = 1e-4
INIT_SCALE_VARIANCE = 1e-2
INIT_LOG_NODE_SCALE = -3.0
INIT_LOG_OUTPUT_SCALE = 0.0

# (aux name, scale posterior, half-Cauchy hyper-scale)
ScalePair = Tuple[str, LogNormalQ, float]


def sigma2_from_raw(raw: Any) -> Any:
    return ops.square(ops.softplus(raw))


def raw_from_sigma2(sigma2: float) -> float:
    return float(ops.softplus_inverse(np.sqrt(sigma2)))


def lognormal_from(p: Mapping[str, Any], prefix: str) -> LogNormalQ:
    return LogNormalQ(p[prefix + "_mu"], sigma2_from_raw(p[prefix + "_raw"]))


def kappa_factor(q_kappa: LogNormalQ, output_scale: str) -> LogNormalQ:
    if output_scale == SCALE_IS_VARIANCE:
        return LogNormalQ(0.5 * q_kappa.mu, 0.25 * q_kappa.sigma2)
    return q_kappa


def init_weight_block(
    rng: np.random.Generator, prefix: str, fan_in: int, width: int
) -> Dict[str, np.ndarray]:
    raw = raw_from_sigma2(INIT_WEIGHT_VARIANCE)
    return {
        prefix + "_mu": rng.normal(0.0, 1.0 / np.sqrt(fan_in), size=(fan_in, width)),
        prefix + "_raw": np.full((fan_in, width), raw),
    }


def init_scale(
    prefix: str, shape: Tuple[int, ...], log_mean: float
) -> Dict[str, np.ndarray]:
    return {
        prefix + "_mu": np.full(shape, log_mean),
        prefix + "_raw": np.full(shape, raw_from_sigma2(INIT_SCALE_VARIANCE)),
    }


def sample_pre_activations(mean: Any, variance: Any, rng: np.random.Generator) -> Any:
    return sample_reparam_gaussian(mean, ops.sqrt(variance), rng).value


class AbstractLayer(metaclass=ABCMeta):
    """
    One weight layer of the network and its slice of the variational
    posterior.

    `params` holds the gradient-trained, unconstrained arrays; standard
    deviations are stored through softplus. `aux` holds the auxiliary
    Inverse-Gamma factors, which are only ever set by fixed-point updates.
    Methods taking `p` evaluate against those values instead of `params`,
    so the ELBO can be built from tape leaves.
    """

    def __init__(
        self,
        fan_in: int,
        width: int,
        prior: PriorConfig,
        params: Dict[str, np.ndarray],
        aux: Dict[str, InvGammaQ],
    ) -> None:
        self.fan_in = fan_in
        self.width = width
        self.prior = prior
        self.params = params
        self.aux = aux
        self.validate()

    @staticmethod
    @abstractmethod
    def get_type() -> str:
        pass

    @classmethod
    @abstractmethod
    def param_shapes(cls, fan_in: int, width: int) -> Dict[str, Tuple[int, ...]]:
        pass

    @classmethod
    @abstractmethod
    def initialize(
        cls, fan_in: int, width: int, prior: PriorConfig, rng: np.random.Generator
    ) -> "AbstractLayer":
        pass

    @abstractmethod
    def forward(
        self,
        a: Any,
        rng: np.random.Generator,
        p: Optional[Mapping[str, Any]] = None,
        variant: Optional[str] = None,
    ) -> Any:
        """Sample pre-activations for inputs `a` (bias column included)."""

    @abstractmethod
    def expected_log_prior(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        pass

    @abstractmethod
    def entropy(self, p: Optional[Mapping[str, Any]] = None) -> Any:
        pass

    @abstractmethod
    def scale_pairs(self, p: Optional[Mapping[str, Any]] = None) -> List[ScalePair]:
        pass

    @abstractmethod
    def expected_node_weights(self) -> np.ndarray:
        """E[w] per incoming edge, shape (fan_in, width)."""

    def _values(self, p: Optional[Mapping[str, Any]]) -> Mapping[str, Any]:
        return self.params if p is None else p

    def _variant(self, variant: Optional[str]) -> str:
        return self.prior.forward_variant if variant is None else variant

    def _check_inputs(self, a: Any) -> None:
        shape = ops.value(a).shape
        if len(shape) != 2 or shape[1] != self.fan_in:
            raise DimensionError(
                "%s layer expects inputs (batch, %d), got %s"
                % (self.get_type(), self.fan_in, shape)
            )

    def refresh_aux(self) -> None:
        for name, q_scale, b in self.scale_pairs():
            self.aux[name] = InvGammaQ.at_fixed_point(q_scale.mean_inverse(), b)

    def aux_entropy(self) -> float:
        return float(sum(np.sum(q.entropy()) for q in self.aux.values()))

    def validate(self) -> None:
        shapes = self.param_shapes(self.fan_in, self.width)
        if set(shapes) != set(self.params):
            raise DimensionError(
                "%s layer expects parameters %s, got %s"
                % (self.get_type(), sorted(shapes), sorted(self.params))
            )
        for name, shape in shapes.items():
            value = self.params[name]
            if value.shape != shape:
                raise DimensionError(
                    "%s has shape %s, expected %s" % (name, value.shape, shape)
                )
            if not np.all(np.isfinite(value)):
                raise DomainError("%s has non-finite entries" % name)
        if not self.aux:
            return
        for name, q_scale, _ in self.scale_pairs():
            shape = ops.value(q_scale.mu).shape
            if name not in self.aux or self.aux[name].d.shape != shape:
                raise DimensionError(
                    "auxiliary factor %s does not match %s" % (name, shape)
                )

    def copy(self) -> "AbstractLayer":
        return copy.deepcopy(self)

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.get_type(), "fan_in": self.fan_in, "width": self.width}


class NonCenteredLayer(AbstractLayer):
    @abstractmethod
    def multiplier_factors(
        self, p: Optional[Mapping[str, Any]] = None
    ) -> List[LogNormalQ]:
        pass

    def forward(
        self,
        a: Any,
        rng: np.random.Generator,
        p: Optional[Mapping[str, Any]] = None,
        variant: Optional[str] = None,
    ) -> Any:
        self._check_inputs(a)
        p = self._values(p)
        mean = ops.matmul(a, p["beta_mu"])
        variance = ops.matmul(ops.square(a), sigma2_from_raw(p["beta_raw"]))
        factors = self.multiplier_factors(p)
        if self._variant(variant) == EXPECTED_SCALES:
            scale = 1.0
            for q in factors:
                scale = ops.mul(scale, q.mean())
            return sample_pre_activations(mean, ops.mul(variance, scale), rng)
        log_scale = 0.0
        for q in factors:
            draw = sample_reparam_gaussian(q.mu, q.std(), rng)
            log_scale = ops.add(log_scale, draw.value)
        scale = ops.exp(log_scale)
        return sample_pre_activations(
            ops.mul(mean, scale), ops.mul(variance, ops.square(scale)), rng
        )

    def expected_node_weights(self) -> np.ndarray:
        scale = np.ones(())
        for q in self.multiplier_factors():
            scale = scale * np.asarray(q.mean())
        return self.params["beta_mu"] * scale
