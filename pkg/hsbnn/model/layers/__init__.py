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

from .base import AbstractLayer, NonCenteredLayer, raw_from_sigma2, sigma2_from_raw
from .centered import CenteredHsLayer
from .factory import LayerFactory
from .gaussian import GaussianLayer
from .noncentered import HsLayer
from .output import OutputLayer

__all__ = [
    "AbstractLayer",
    "CenteredHsLayer",
    "GaussianLayer",
    "HsLayer",
    "LayerFactory",
    "NonCenteredLayer",
    "OutputLayer",
    "raw_from_sigma2",
    "sigma2_from_raw",
]
