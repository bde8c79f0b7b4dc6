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

from typing import Any, Dict, List, Sequence

from hsbnn.exceptions import ConfigError

RELU = "relu"
GAUSSIAN_REGRESSION = "gaussian-regression"
CATEGORICAL = "categorical"

HS_NONCENTERED = "hs-noncentered"
HS_CENTERED = "hs-centered"
GAUSSIAN_BASELINE = "gaussian-baseline"

EXPECTED_SCALES = "expected-scales"
SAMPLED_SCALES = "sampled-scales"

SCALE_IS_STD = "std"
SCALE_IS_VARIANCE = "variance"


def _choice(field: str, value: Any, allowed: Sequence[str]) -> None:
    if value not in allowed:
        raise ConfigError(
            "invalid value for %s: %r (expected one of %s)"
            % (field, value, ", ".join(allowed))
        )


def _positive(field: str, value: Any) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
        raise ConfigError(
            "invalid value for %s: %r (must be positive)" % (field, value)
        )


class NetworkConfig:
    def __init__(
        self,
        widths: Sequence[int],
        nonlinearity: str = RELU,
        likelihood: str = GAUSSIAN_REGRESSION,
    ) -> None:
        self.widths = [w for w in widths]  # type: List[int]
        self.nonlinearity = nonlinearity
        self.likelihood = likelihood
        self.validate()

    @classmethod
    def from_dims(
        cls,
        input_dim: int,
        hidden_widths: Sequence[int],
        output_dim: int,
        **kwargs: Any
    ) -> "NetworkConfig":
        return cls([input_dim, *hidden_widths, output_dim], **kwargs)

    @property
    def depth(self) -> int:
        return len(self.widths) - 1

    @property
    def hidden_widths(self) -> List[int]:
        return self.widths[1:-1]

    def validate(self) -> None:
        if len(self.widths) < 2:
            raise ConfigError("invalid value for widths: need input and output widths")
        for width in self.widths:
            if isinstance(width, bool) or not isinstance(width, int) or width < 1:
                raise ConfigError("invalid value for widths: %r" % (self.widths,))
        _choice("nonlinearity", self.nonlinearity, [RELU])
        _choice("likelihood", self.likelihood, [GAUSSIAN_REGRESSION, CATEGORICAL])
        if self.likelihood == GAUSSIAN_REGRESSION and self.widths[-1] != 1:
            raise ConfigError("invalid value for widths: regression needs one output")
        if self.likelihood == CATEGORICAL and self.widths[-1] < 2:
            raise ConfigError("invalid value for widths: need at least two classes")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "widths": list(self.widths),
            "nonlinearity": self.nonlinearity,
            "likelihood": self.likelihood,
        }

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "NetworkConfig":
        if "widths" not in fields:
            raise ConfigError("missing config field: widths")
        return cls(
            fields["widths"],
            nonlinearity=fields.get("nonlinearity", RELU),
            likelihood=fields.get("likelihood", GAUSSIAN_REGRESSION),
        )


class PriorConfig:
    def __init__(
        self,
        mode: str = HS_NONCENTERED,
        b0: float = 1.0,
        bg: float = 1.0,
        bkappa: float = 5.0,
        forward_variant: str = EXPECTED_SCALES,
        output_scale: str = SCALE_IS_STD,
    ) -> None:
        self.mode = mode
        self.b0 = b0
        self.bg = bg
        self.bkappa = bkappa
        self.forward_variant = forward_variant
        self.output_scale = output_scale
        self.validate()

    def validate(self) -> None:
        _choice("mode", self.mode, [HS_NONCENTERED, HS_CENTERED, GAUSSIAN_BASELINE])
        _positive("b0", self.b0)
        _positive("bg", self.bg)
        _positive("bkappa", self.bkappa)
        _choice(
            "forward_variant", self.forward_variant, [EXPECTED_SCALES, SAMPLED_SCALES]
        )
        _choice("output_scale", self.output_scale, [SCALE_IS_STD, SCALE_IS_VARIANCE])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "b0": self.b0,
            "bg": self.bg,
            "bkappa": self.bkappa,
            "forward_variant": self.forward_variant,
            "output_scale": self.output_scale,
        }

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "PriorConfig":
        return cls(
            mode=fields.get("mode", HS_NONCENTERED),
            b0=fields.get("b0", 1.0),
            bg=fields.get("bg", 1.0),
            bkappa=fields.get("bkappa", 5.0),
            forward_variant=fields.get("forward_variant", EXPECTED_SCALES),
            output_scale=fields.get("output_scale", SCALE_IS_STD),
        )

    def update(self, **fields: Any) -> "PriorConfig":
        return PriorConfig.from_dict({**self.to_dict(), **fields})
