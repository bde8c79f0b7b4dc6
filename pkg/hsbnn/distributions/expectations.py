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

"""Closed-form expectations under the factorized posterior."""

import math
from typing import Any, Tuple

from hsbnn.autograd import ops
from hsbnn.exceptions import DomainError

from .densities import LOG_2PI
from .gamma import GammaQ
from .inv_gamma import InvGammaQ
from .lognormal import LogNormalQ

LOG_GAMMA_HALF = 0.5 * math.log(math.pi)


def lognormal_moments(q: LogNormalQ) -> Tuple[Any, Any, Any]:
    return q.moments()


def gamma_expectations(q: GammaQ) -> Tuple[Any, Any]:
    return q.expectations()


def expected_log_scale_given_aux(q_scale: LogNormalQ, q_aux: InvGammaQ) -> Any:
    """E[ln Inv-Gamma(s | 1/2, 1/lambda)] for a log-Normal s and Inv-Gamma lambda."""
    return (
        0.5 * q_aux.mean_log_inverse()
        - LOG_GAMMA_HALF
        - 1.5 * q_scale.mean_log()
        - q_aux.mean_inverse() * q_scale.mean_inverse()
    )


def expected_log_aux(q_aux: InvGammaQ, b: float) -> Any:
    """E[ln Inv-Gamma(lambda | 1/2, 1/b^2)]."""
    if b <= 0:
        raise DomainError("hyper-scale must be positive, got %r" % b)
    return (
        -math.log(b)
        - LOG_GAMMA_HALF
        - 1.5 * q_aux.mean_log()
        - q_aux.mean_inverse() / (b * b)
    )


def expected_log_hs_scale_terms(q_scale: LogNormalQ, q_aux: InvGammaQ, b: float) -> Any:
    return expected_log_scale_given_aux(q_scale, q_aux) + expected_log_aux(q_aux, b)


def expected_log_std_normal(mu: Any, sigma2: Any) -> Any:
    return -0.5 * (ops.square(mu) + sigma2) - 0.5 * LOG_2PI


def expected_log_scaled_normal(
    second_moment: Any, count: int, q_scales: Tuple[LogNormalQ, ...]
) -> Any:
    """
    E[ln N(w | 0, s^2 I)] for a block of `count` weights with summed
    second moment `second_moment` and s the product of independent
    log-Normal scales.
    """
    inverse_square = 1.0
    mean_log = 0.0
    for q in q_scales:
        inverse_square = inverse_square * q.mean_inverse_square()
        mean_log = mean_log + q.mean_log()
    log_norm = 0.5 * count * (2.0 * mean_log + LOG_2PI)
    return -0.5 * inverse_square * second_moment - log_norm


def expected_log_gamma_prior(q: GammaQ, shape: float, rate: float) -> Any:
    mean, mean_log = q.expectations()
    return (
        shape * math.log(rate)
        - math.lgamma(shape)
        + (shape - 1.0) * mean_log
        - rate * mean
    )
