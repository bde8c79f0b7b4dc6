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

from typing import List, Tuple

import numpy as np

from hsbnn.exceptions import ConfigError, ContractError

from .dataset import Dataset

UCI_SMALL = "uci-small"
PROTEIN = "protein"
SINGLE = "single"

PROTOCOLS = {UCI_SMALL: 20, PROTEIN: 5, SINGLE: 1}
TEST_FRACTION = 0.1


def replicate_rng(seed: int, replicate: int) -> np.random.Generator:
    sequence = np.random.SeedSequence([seed, replicate])
    return np.random.Generator(np.random.PCG64(sequence))


def protocol_splits(
    dataset: Dataset, protocol: str, seed: int = 0
) -> List[Tuple[Dataset, Dataset]]:
    """Seeded 90/10 train/test splits; replicate r uses its own (seed, r) stream."""
    if protocol not in PROTOCOLS:
        raise ConfigError(
            "invalid value for protocol: %r (expected one of %s)"
            % (protocol, ", ".join(sorted(PROTOCOLS)))
        )
    n_test = int(round(TEST_FRACTION * dataset.size))
    if n_test < 1 or n_test >= dataset.size:
        raise ContractError("%d rows are too few for a 90/10 split" % dataset.size)
    splits = []
    for replicate in range(PROTOCOLS[protocol]):
        order = replicate_rng(seed, replicate).permutation(dataset.size)
        train, test = np.sort(order[n_test:]), np.sort(order[:n_test])
        splits.append((dataset.subset(train), dataset.subset(test)))
    return splits
