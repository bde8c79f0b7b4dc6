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

from hsbnn.distributions import InvGammaQ, LogNormalQ
from hsbnn.model import HorseshoeBNN

logger = logging.getLogger(__name__)


def fixed_point_update(q_scale: LogNormalQ, b: float) -> InvGammaQ:
    return InvGammaQ.at_fixed_point(q_scale.mean_inverse(), b)


def fixed_point_sweep(model: HorseshoeBNN) -> None:
    for index, layer in enumerate(model.layers):
        for name, q_scale, b in layer.scale_pairs():
            layer.aux[name] = fixed_point_update(q_scale, b)
        logger.debug("refreshed auxiliary factors of layer %d", index)
