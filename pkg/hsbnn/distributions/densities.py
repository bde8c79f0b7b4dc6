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

import math
from typing import Any

import numpy as np
from scipy import special

from hsbnn.exceptions import DomainError

LOG_2PI = math.log(2.0 * math.pi)


def _positive(name: str, x: Any) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if not np.all(x > 0):
        raise DomainError("%s must be positive" % name)
    return x


def half_cauchy_logpdf(a: Any, b: Any) -> Any:
    a, b = _positive("a", a), _positive("b", b)
    return np.log(2.0 / (math.pi * b)) - np.log1p((a / b) ** 2)


def inv_gamma_logpdf(v: Any, a: Any, b: Any) -> Any:
    v, a, b = _positive("v", v), _positive("a", a), _positive("b", b)
    return a * np.log(b) - special.gammaln(a) - (a + 1.0) * np.log(v) - b / v


def gamma_logpdf(x: Any, alpha: Any, beta: Any) -> Any:
    x = _positive("x", x)
    alpha, beta = _positive("alpha", alpha), _positive("beta", beta)
    log_norm = alpha * np.log(beta) - special.gammaln(alpha)
    return log_norm + (alpha - 1.0) * np.log(x) - beta * x


def normal_logpdf(x: Any, mu: Any, variance: Any) -> Any:
    variance = _positive("variance", variance)
    x, mu = np.asarray(x, dtype=np.float64), np.asarray(mu, dtype=np.float64)
    return -0.5 * (LOG_2PI + np.log(variance) + (x - mu) ** 2 / variance)
