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

from typing import Dict, Type

import numpy as np

from hsbnn.distributions import InvGammaQ
from hsbnn.model.config import PriorConfig

from .base import AbstractLayer
from .centered import CenteredHsLayer
from .gaussian import GaussianLayer
from .noncentered import HsLayer
from .output import OutputLayer


class LayerFactory:
    class InvalidLayerTypeError(Exception):
        pass

    LAYER_MAP = {
        HsLayer.get_type(): HsLayer,
        CenteredHsLayer.get_type(): CenteredHsLayer,
        GaussianLayer.get_type(): GaussianLayer,
        OutputLayer.get_type(): OutputLayer,
    }  # type: Dict[str, Type[AbstractLayer]]

    @classmethod
    def layer_class(cls, layer_type: str) -> Type[AbstractLayer]:
        layer_cls = cls.LAYER_MAP.get(layer_type)
        if layer_cls is None:
            raise cls.InvalidLayerTypeError(layer_type)
        return layer_cls

    @classmethod
    def initialize(
        cls,
        layer_type: str,
        fan_in: int,
        width: int,
        prior: PriorConfig,
        rng: np.random.Generator,
    ) -> AbstractLayer:
        return cls.layer_class(layer_type).initialize(fan_in, width, prior, rng)

    @classmethod
    def create(
        cls,
        layer_type: str,
        fan_in: int,
        width: int,
        prior: PriorConfig,
        params: Dict[str, np.ndarray],
        aux: Dict[str, InvGammaQ],
    ) -> AbstractLayer:
        return cls.layer_class(layer_type)(fan_in, width, prior, params, aux)
