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

from typing import Any, Dict, Optional

from hsbnn.exceptions import ConfigError

DEFAULTS = {
    "learning_rate": 0.005,
    "beta1": 0.9,
    "beta2": 0.999,
    "eps": 1e-8,
    "batch_size": 512,
    "epochs": 100,
    "steps": None,
    "samples": 1,
    "seed": 0,
    "fixed_point_every": 1,
    "clip_norm": None,
    "log_every": 1,
    "record_wall_time": False,
    "workers": 1,
}  # type: Dict[str, Any]

_POSITIVE_INTS = ("batch_size", "samples", "fixed_point_every", "log_every", "workers")


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


class TrainConfig:
    def __init__(self, **fields: Any) -> None:
        unknown = set(fields) - set(DEFAULTS)
        if unknown:
            raise ConfigError("unknown config field: %s" % sorted(unknown)[0])
        values = {**DEFAULTS, **fields}
        self.learning_rate = values["learning_rate"]  # type: float
        self.beta1 = values["beta1"]  # type: float
        self.beta2 = values["beta2"]  # type: float
        self.eps = values["eps"]  # type: float
        self.batch_size = values["batch_size"]  # type: int
        self.epochs = values["epochs"]  # type: int
        self.steps = values["steps"]  # type: Optional[int]
        self.samples = values["samples"]  # type: int
        self.seed = values["seed"]  # type: int
        self.fixed_point_every = values["fixed_point_every"]  # type: int
        self.clip_norm = values["clip_norm"]  # type: Optional[float]
        self.log_every = values["log_every"]  # type: int
        self.record_wall_time = values["record_wall_time"]  # type: bool
        self.workers = values["workers"]  # type: int
        self.validate()

    def validate(self) -> None:
        for name in ("learning_rate", "eps"):
            value = getattr(self, name)
            if not _is_number(value) or value <= 0:
                raise ConfigError("invalid value for %s: %r" % (name, value))
        for name in ("beta1", "beta2"):
            value = getattr(self, name)
            if not _is_number(value) or not 0 < value < 1:
                raise ConfigError("invalid value for %s: %r" % (name, value))
        for name in _POSITIVE_INTS:
            value = getattr(self, name)
            if not _is_int(value) or value < 1:
                raise ConfigError("invalid value for %s: %r" % (name, value))
        if not _is_int(self.epochs) or self.epochs < 0:
            raise ConfigError("invalid value for epochs: %r" % (self.epochs,))
        if self.steps is not None and (not _is_int(self.steps) or self.steps < 0):
            raise ConfigError("invalid value for steps: %r" % (self.steps,))
        if not _is_int(self.seed) or self.seed < 0:
            raise ConfigError("invalid value for seed: %r" % (self.seed,))
        clip_norm = self.clip_norm
        if clip_norm is not None and (not _is_number(clip_norm) or clip_norm <= 0):
            raise ConfigError("invalid value for clip_norm: %r" % (self.clip_norm,))
        if not isinstance(self.record_wall_time, bool):
            raise ConfigError(
                "invalid value for record_wall_time: %r" % (self.record_wall_time,)
            )

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in DEFAULTS}

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "TrainConfig":
        return cls(**fields)

    def update(self, **fields: Any) -> "TrainConfig":
        return TrainConfig(**{**self.to_dict(), **fields})
