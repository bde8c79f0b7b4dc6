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

from typing import Any, NamedTuple, Optional

import numpy as np

from hsbnn.autograd import ops
from hsbnn.exceptions import DimensionError, DomainError


class GaussianDraw(NamedTuple):
    value: Any
    noise: np.ndarray


def sample_reparam_gaussian(
    mu: Any,
    sigma: Any,
    rng: Optional[np.random.Generator] = None,
    noise: Optional[np.ndarray] = None,
) -> GaussianDraw:
    """
    mu + sigma * eps with eps ~ N(0, I).

    Differentiable in mu and sigma when they are tape tensors. Passing
    `noise` reuses earlier draws (common random numbers).
    """
    mu_shape, sigma_shape = ops.value(mu).shape, ops.value(sigma).shape
    if mu_shape != sigma_shape:
        raise DimensionError(
            "mu %s and sigma %s differ in shape" % (mu_shape, sigma_shape)
        )
    if np.any(ops.value(sigma) < 0):
        raise DomainError("sigma must be non-negative")
    if noise is None:
        if rng is None:
            raise DomainError("either rng or noise is required")
        noise = np.asarray(rng.standard_normal(mu_shape), dtype=np.float64)
    else:
        noise = np.asarray(noise, dtype=np.float64)
    if noise.shape != mu_shape:
        raise DimensionError("noise %s does not match %s" % (noise.shape, mu_shape))
    return GaussianDraw(ops.add(mu, ops.mul(sigma, noise)), noise)
