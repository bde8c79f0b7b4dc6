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

from .adam import AdamState, adam_step, clip_gradients, global_norm
from .config import TrainConfig
from .fixed_point import fixed_point_sweep, fixed_point_update
from .history import History, HistoryRecord
from .trainer import Trainer, fit, make_init_rng, make_streams, update_noise_model

__all__ = [
    "AdamState",
    "History",
    "HistoryRecord",
    "TrainConfig",
    "Trainer",
    "adam_step",
    "clip_gradients",
    "fit",
    "fixed_point_sweep",
    "fixed_point_update",
    "global_norm",
    "make_init_rng",
    "make_streams",
    "update_noise_model",
]
