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

import logging

import numpy as np

from hsbnn.exceptions import ContractError, DomainError

from .dataset import CLASSIFICATION, REGRESSION, Dataset

logger = logging.getLogger(__name__)

CUBIC_RANGE = 4.0
CUBIC_NOISE_STD = 3.0

# The planted 2-2-1 relu network: rows of PLANTED_W1 index the inputs.
PLANTED_W1 = np.array([[2.0, -1.0], [1.0, 2.0]])
PLANTED_B1 = np.array([0.0, 0.5])
PLANTED_W2 = np.array([1.5, -1.0])
PLANTED_B2 = 0.1

MIN_ROWS_FOR_BOTH_CLASSES = 100


def _check_count(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ContractError("need a positive number of points, got %r" % (n,))


def gen_cubic(n: int = 20, seed: int = 0) -> Dataset:
    _check_count(n)
    rng = np.random.default_rng(seed)
    x = rng.uniform(-CUBIC_RANGE, CUBIC_RANGE, size=n)
    y = x ** 3 + rng.normal(0.0, CUBIC_NOISE_STD, size=n)
    return Dataset(x.reshape(-1, 1), y, REGRESSION, name="cubic")


def gen_cubic_grid(n: int = 100, seed: int = 0) -> Dataset:
    _check_count(n)
    rng = np.random.default_rng(seed)
    x = np.linspace(-CUBIC_RANGE, CUBIC_RANGE, n)
    y = x ** 3 + rng.normal(0.0, CUBIC_NOISE_STD, size=n)
    return Dataset(x.reshape(-1, 1), y, REGRESSION, name="cubic-grid")


def planted_network_output(x: np.ndarray) -> np.ndarray:
    hidden = np.maximum(x @ PLANTED_W1 + PLANTED_B1, 0.0)
    return hidden @ PLANTED_W2 + PLANTED_B2


def gen_planted_network(n: int = 500, seed: int = 0) -> Dataset:
    _check_count(n)
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1.0, 1.0, size=(n, 2))
    labels = (planted_network_output(x) > 0.0).astype(np.int64)
    if n >= MIN_ROWS_FOR_BOTH_CLASSES and labels.min() == labels.max():
        raise DomainError("planted network produced a single class for %d points" % n)
    logger.debug("planted data: %d points, %d positive", n, int(labels.sum()))
    return Dataset(x, labels, CLASSIFICATION, num_classes=2, name="planted")
