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

import json
from collections import OrderedDict
from typing import Dict, List, Mapping, Optional

import numpy as np

from hsbnn.data import Standardization
from hsbnn.distributions import InvGammaQ
from hsbnn.exceptions import FormatError
from hsbnn.inference import AdamState, TrainConfig, Trainer, make_streams
from hsbnn.model import HorseshoeBNN, LayerFactory, NoiseModel

from .meta import CheckpointMeta

FORMAT_VERSION = 1
HEADER_LENGTH_BYTES = 8
PAYLOAD_DTYPE = np.dtype("<f8")


def _with_prefix(
    tensors: Mapping[str, np.ndarray], prefix: str
) -> Dict[str, np.ndarray]:
    return {
        name[len(prefix):]: value
        for name, value in tensors.items()
        if name.startswith(prefix)
    }


class Checkpoint:
    """
    A training session frozen to bytes.

    Layout: an 8-byte little-endian header length, a JSON header (format
    version, configs, training state and one entry per tensor giving its
    name, shape, offset and element count), then the tensors as one
    little-endian float64 payload.
    """

    def __init__(
        self, meta: CheckpointMeta, tensors: "OrderedDict[str, np.ndarray]"
    ) -> None:
        self.meta = meta
        self.tensors = tensors

    @classmethod
    def from_trainer(
        cls, trainer: Trainer, standardization: Optional[Standardization] = None
    ) -> "Checkpoint":
        model = trainer.model
        tensors = OrderedDict(model.parameters())
        for index, layer in enumerate(model.layers):
            for name in sorted(layer.aux):
                tensors["aux.%d.%s.c" % (index, name)] = np.asarray(layer.aux[name].c)
                tensors["aux.%d.%s.d" % (index, name)] = np.asarray(layer.aux[name].d)
        for name in sorted(trainer.adam.m):
            tensors["adam.m." + name] = trainer.adam.m[name]
            tensors["adam.v." + name] = trainer.adam.v[name]
        noise_adam_t = None
        if trainer.noise_adam is not None:
            noise_adam_t = trainer.noise_adam.t
            for name in sorted(trainer.noise_adam.m):
                tensors["noise_adam.m." + name] = trainer.noise_adam.m[name]
                tensors["noise_adam.v." + name] = trainer.noise_adam.v[name]
        meta = CheckpointMeta(
            model.network,
            model.prior,
            trainer.cfg,
            model.layer_types(),
            adam_t=trainer.adam.t,
            noise_adam_t=noise_adam_t,
            epoch=trainer.epoch,
            rng_states=trainer.rng_states(),
            history=trainer.history,
            standardization=standardization,
        )
        return cls(meta, tensors)

    @classmethod
    def from_model(
        cls,
        model: HorseshoeBNN,
        cfg: Optional[TrainConfig] = None,
        standardization: Optional[Standardization] = None,
    ) -> "Checkpoint":
        return cls.from_trainer(Trainer(model, cfg or TrainConfig()), standardization)

    def to_model(self) -> HorseshoeBNN:
        meta = self.meta
        widths = meta.network.widths
        layers = []
        for index, layer_type in enumerate(meta.layer_types):
            params = _with_prefix(self.tensors, "layers.%d." % index)
            aux_arrays = _with_prefix(self.tensors, "aux.%d." % index)
            aux = {
                name[:-2]: InvGammaQ(value, aux_arrays[name[:-2] + ".d"])
                for name, value in aux_arrays.items()
                if name.endswith(".c")
            }
            try:
                layer = LayerFactory.create(
                    layer_type,
                    widths[index] + 1,
                    widths[index + 1],
                    meta.prior,
                    params,
                    aux,
                )
            except (IndexError, KeyError, LayerFactory.InvalidLayerTypeError) as e:
                raise FormatError("checkpoint layer %d is malformed: %r" % (index, e))
            layers.append(layer)
        noise_params = _with_prefix(self.tensors, "noise.")
        noise = NoiseModel(noise_params) if noise_params else None
        return HorseshoeBNN(meta.network, meta.prior, layers, noise)

    def to_trainer(self) -> Trainer:
        meta = self.meta
        model = self.to_model()
        adam = AdamState(
            _with_prefix(self.tensors, "adam.m."),
            _with_prefix(self.tensors, "adam.v."),
            meta.adam_t,
        )
        noise_adam = None
        if meta.noise_adam_t is not None:
            noise_adam = AdamState(
                _with_prefix(self.tensors, "noise_adam.m."),
                _with_prefix(self.tensors, "noise_adam.v."),
                meta.noise_adam_t,
            )
        streams = make_streams(meta.train.seed)
        trainer = Trainer(
            model, meta.train, adam, noise_adam, streams, meta.history, meta.epoch
        )
        trainer.restore_rng_states(meta.rng_states)
        return trainer

    def serialize(self) -> bytes:
        entries = []  # type: List[Dict[str, object]]
        chunks = []  # type: List[bytes]
        offset = 0
        for name, value in self.tensors.items():
            data = np.asarray(value, dtype=PAYLOAD_DTYPE)
            entries.append(
                {
                    "name": name,
                    "shape": list(data.shape),
                    "offset": offset,
                    "count": data.size,
                }
            )
            chunks.append(data.tobytes())
            offset += data.nbytes
        header = {
            "format_version": FORMAT_VERSION,
            "meta": self.meta.to_dict(),
            "tensors": entries,
            "payload_bytes": offset,
        }
        text = json.dumps(header, sort_keys=True, separators=(",", ":"))
        encoded = text.encode("utf-8")
        length = len(encoded).to_bytes(HEADER_LENGTH_BYTES, "little")
        return length + encoded + b"".join(chunks)

    @classmethod
    def deserialize(cls, serialized: bytes) -> "Checkpoint":
        if len(serialized) < HEADER_LENGTH_BYTES:
            raise FormatError(
                "checkpoint is %d bytes, too short for a header" % len(serialized)
            )
        header_length = int.from_bytes(serialized[:HEADER_LENGTH_BYTES], "little")
        header_end = HEADER_LENGTH_BYTES + header_length
        if len(serialized) < header_end:
            raise FormatError(
                "checkpoint header needs %d bytes, found %d"
                % (header_length, len(serialized) - HEADER_LENGTH_BYTES)
            )
        try:
            text = serialized[HEADER_LENGTH_BYTES:header_end].decode("utf-8")
            header = json.loads(text)
        except (UnicodeDecodeError, ValueError) as e:
            raise FormatError("checkpoint header is not valid JSON: %s" % e)
        version = header.get("format_version")
        if version != FORMAT_VERSION:
            raise FormatError(
                "unsupported checkpoint format version %r (this build reads %d)"
                % (version, FORMAT_VERSION)
            )
        payload = serialized[header_end:]
        if len(payload) != header["payload_bytes"]:
            raise FormatError(
                "checkpoint payload: expected %d bytes, found %d"
                % (header["payload_bytes"], len(payload))
            )
        tensors = OrderedDict()  # type: OrderedDict[str, np.ndarray]
        for entry in header["tensors"]:
            end = entry["offset"] + entry["count"] * PAYLOAD_DTYPE.itemsize
            if end > len(payload) or int(np.prod(entry["shape"])) != entry["count"]:
                raise FormatError(
                    "checkpoint tensor %s is out of bounds" % entry["name"]
                )
            values = np.frombuffer(
                payload,
                dtype=PAYLOAD_DTYPE,
                count=entry["count"],
                offset=entry["offset"],
            )
            tensors[entry["name"]] = values.reshape(entry["shape"]).astype(np.float64)
        try:
            meta = CheckpointMeta.from_dict(header["meta"])
        except KeyError as e:
            raise FormatError("checkpoint header misses %s" % e)
        return cls(meta, tensors)
