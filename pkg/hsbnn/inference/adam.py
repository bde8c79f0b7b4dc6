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
from typing import Dict, Mapping, Tuple

import numpy as np

from hsbnn.exceptions import ContractError, NumericalError

from .config import TrainConfig

logger = logging.getLogger(__name__)


class AdamState:
    def __init__(
        self,
        m: Dict[str, np.ndarray],
        v: Dict[str, np.ndarray],
        t: int = 0,
    ) -> None:
        if set(m) != set(v):
            raise ContractError("moment estimates cover different parameters")
        self.m = m
        self.v = v
        self.t = t

    @classmethod
    def zeros_like(cls, params: Mapping[str, np.ndarray]) -> "AdamState":
        return cls(
            {name: np.zeros_like(value) for name, value in params.items()},
            {name: np.zeros_like(value) for name, value in params.items()},
        )

    def copy(self) -> "AdamState":
        return AdamState(
            {name: value.copy() for name, value in self.m.items()},
            {name: value.copy() for name, value in self.v.items()},
            self.t,
        )


def global_norm(grads: Mapping[str, np.ndarray]) -> float:
    return float(np.sqrt(sum(float(np.sum(np.square(g))) for g in grads.values())))


def clip_gradients(
    grads: Mapping[str, np.ndarray], clip_norm: float
) -> Dict[str, np.ndarray]:
    norm = global_norm(grads)
    if norm <= clip_norm:
        return dict(grads)
    logger.warning("clipping gradient norm %.4g to %.4g", norm, clip_norm)
    factor = clip_norm / norm
    return {name: g * factor for name, g in grads.items()}


def adam_step(
    params: Mapping[str, np.ndarray],
    grads: Mapping[str, np.ndarray],
    state: AdamState,
    cfg: TrainConfig,
) -> Tuple[Dict[str, np.ndarray], AdamState]:
    """
    One Adam step in the ascent direction. Returns fresh parameter and
    state objects; the inputs are left untouched.
    """
    if set(grads) != set(params) or set(state.m) != set(params):
        raise ContractError(
            "parameters, gradients and optimizer state must share names"
        )
    if cfg.clip_norm is not None:
        grads = clip_gradients(grads, cfg.clip_norm)
    t = state.t + 1
    correction1 = 1.0 - cfg.beta1 ** t
    correction2 = 1.0 - cfg.beta2 ** t
    updated, m, v = {}, {}, {}
    for name, value in params.items():
        g = grads[name]
        if not np.all(np.isfinite(g)):
            raise NumericalError("non-finite gradient for %s" % name, term=name)
        m[name] = cfg.beta1 * state.m[name] + (1.0 - cfg.beta1) * g
        v[name] = cfg.beta2 * state.v[name] + (1.0 - cfg.beta2) * np.square(g)
        m_hat = m[name] / correction1
        v_hat = v[name] / correction2
        updated[name] = value + cfg.learning_rate * m_hat / (np.sqrt(v_hat) + cfg.eps)
    return updated, AdamState(m, v, t)
