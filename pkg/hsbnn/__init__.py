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

from .client import HsbnnClient, RunConfig, load_config
from .contrib import (
    Checkpoint,
    FileCheckpointStore,
    MemoryCheckpointStore,
    S3CheckpointStore,
)
from .diagnostics import SparsityReport
from .exceptions import (
    CheckpointDoesNotExistError,
    ConfigError,
    ContractError,
    DimensionError,
    DomainError,
    FormatError,
    HsbnnError,
    NumericalError,
)
from .experiments import ExperimentFactory, ExperimentOptions
from .inference import TrainConfig, Trainer, fit
from .model import HorseshoeBNN, NetworkConfig, PriorConfig

__version__ = "1.0.0"

__all__ = [
    "Checkpoint",
    "CheckpointDoesNotExistError",
    "ConfigError",
    "ContractError",
    "DimensionError",
    "DomainError",
    "ExperimentFactory",
    "ExperimentOptions",
    "FileCheckpointStore",
    "FormatError",
    "HorseshoeBNN",
    "HsbnnClient",
    "HsbnnError",
    "MemoryCheckpointStore",
    "NetworkConfig",
    "NumericalError",
    "PriorConfig",
    "RunConfig",
    "S3CheckpointStore",
    "SparsityReport",
    "TrainConfig",
    "Trainer",
    "fit",
    "load_config",
]
