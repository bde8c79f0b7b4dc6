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

from .dataset import CLASSIFICATION, REGRESSION, Dataset, Standardization, standardize
from .readers import (
    read_csv_classification,
    read_csv_regression,
    read_mnist_dir,
    read_mnist_idx,
    write_csv,
)
from .splits import PROTEIN, SINGLE, UCI_SMALL, protocol_splits, replicate_rng
from .synthetic import gen_cubic, gen_cubic_grid, gen_planted_network

__all__ = [
    "CLASSIFICATION",
    "PROTEIN",
    "REGRESSION",
    "SINGLE",
    "UCI_SMALL",
    "Dataset",
    "Standardization",
    "gen_cubic",
    "gen_cubic_grid",
    "gen_planted_network",
    "protocol_splits",
    "read_csv_classification",
    "read_csv_regression",
    "read_mnist_dir",
    "read_mnist_idx",
    "replicate_rng",
    "standardize",
    "write_csv",
]
