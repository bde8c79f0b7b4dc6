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

from .config import NetworkConfig, PriorConfig
from .layers import CenteredHsLayer, GaussianLayer, HsLayer, LayerFactory, OutputLayer
from .likelihood import LikelihoodFactory, expected_log_likelihood
from .network import (
    HorseshoeBNN,
    elbo,
    expected_node_weights,
    forward_centered,
    forward_local_reparam,
    init_params,
    network_forward,
    predict,
    sum_terms,
)
from .noise import NoiseModel
from .predictive import PredictiveSummary

__all__ = [
    "CenteredHsLayer",
    "GaussianLayer",
    "HorseshoeBNN",
    "HsLayer",
    "LayerFactory",
    "LikelihoodFactory",
    "NetworkConfig",
    "NoiseModel",
    "OutputLayer",
    "PredictiveSummary",
    "PriorConfig",
    "elbo",
    "expected_log_likelihood",
    "expected_node_weights",
    "forward_centered",
    "forward_local_reparam",
    "init_params",
    "network_forward",
    "predict",
    "sum_terms",
]
