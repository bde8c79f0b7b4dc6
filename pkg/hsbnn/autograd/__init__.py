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

from . import ops
from .backward import Gradients, backward
from .functions import Function
from .tensor import Tensor, as_tensor, parameter

__all__ = [
    "Function",
    "Gradients",
    "Tensor",
    "as_tensor",
    "backward",
    "ops",
    "parameter",
]
