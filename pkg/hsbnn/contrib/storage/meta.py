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

from typing import Any, Dict, List, Optional

from hsbnn.data import Standardization
from hsbnn.inference import History, TrainConfig
from hsbnn.model import NetworkConfig, PriorConfig


class CheckpointMeta:
    def __init__(
        self,
        network: NetworkConfig,
        prior: PriorConfig,
        train: TrainConfig,
        layer_types: List[str],
        adam_t: int = 0,
        noise_adam_t: Optional[int] = None,
        epoch: int = 0,
        rng_states: Optional[Dict[str, Any]] = None,
        history: Optional[History] = None,
        standardization: Optional[Standardization] = None,
    ) -> None:
        self.network = network
        self.prior = prior
        self.train = train
        self.layer_types = layer_types
        self.adam_t = adam_t
        self.noise_adam_t = noise_adam_t
        self.epoch = epoch
        self.rng_states = rng_states or {}
        self.history = history or History()
        self.standardization = standardization

    def to_dict(self) -> Dict[str, Any]:
        return {
            "network": self.network.to_dict(),
            "prior": self.prior.to_dict(),
            "train": self.train.to_dict(),
            "layer_types": list(self.layer_types),
            "adam_t": self.adam_t,
            "noise_adam_t": self.noise_adam_t,
            "epoch": self.epoch,
            "rng_states": self.rng_states,
            "history": self.history.to_dicts(self.train.record_wall_time),
            "standardization": (
                self.standardization.to_dict() if self.standardization else None
            ),
        }

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "CheckpointMeta":
        standardization = fields.get("standardization")
        return cls(
            NetworkConfig.from_dict(fields["network"]),
            PriorConfig.from_dict(fields["prior"]),
            TrainConfig.from_dict(fields["train"]),
            fields["layer_types"],
            adam_t=fields.get("adam_t", 0),
            noise_adam_t=fields.get("noise_adam_t"),
            epoch=fields.get("epoch", 0),
            rng_states=fields.get("rng_states"),
            history=History.from_dicts(fields.get("history", [])),
            standardization=(
                Standardization.from_dict(standardization) if standardization else None
            ),
        )
