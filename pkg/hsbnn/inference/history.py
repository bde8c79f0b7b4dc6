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
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional

import numpy as np

from hsbnn.exceptions import FormatError


class HistoryRecord(NamedTuple):
    step: int
    epoch: int
    elbo: float
    wall_ms: Optional[float] = None

    def to_dict(self, include_wall_time: bool = False) -> Dict[str, Any]:
        fields = {
            "step": self.step,
            "epoch": self.epoch,
            "elbo": self.elbo,
        }  # type: Dict[str, Any]
        if include_wall_time and self.wall_ms is not None:
            fields["wall_ms"] = self.wall_ms
        return fields

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "HistoryRecord":
        try:
            return cls(
                int(fields["step"]),
                int(fields["epoch"]),
                float(fields["elbo"]),
                fields.get("wall_ms"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError("invalid history record %r: %s" % (fields, e))


class History:
    def __init__(self, records: Optional[Iterable[HistoryRecord]] = None) -> None:
        self.records = list(records or [])  # type: List[HistoryRecord]

    def __iter__(self) -> Iterator[HistoryRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, History):
            return NotImplemented
        return [r.to_dict() for r in self] == [r.to_dict() for r in other]

    def append(self, record: HistoryRecord) -> None:
        self.records.append(record)

    def elbo_values(self) -> np.ndarray:
        return np.array([r.elbo for r in self.records], dtype=np.float64)

    def smoothed(self, window: int) -> np.ndarray:
        values = self.elbo_values()
        if window < 1 or values.size < window:
            return np.zeros(0)
        return np.convolve(values, np.ones(window) / window, mode="valid")

    def to_dicts(self, include_wall_time: bool = False) -> List[Dict[str, Any]]:
        return [r.to_dict(include_wall_time) for r in self.records]

    @classmethod
    def from_dicts(cls, items: Iterable[Dict[str, Any]]) -> "History":
        return cls(HistoryRecord.from_dict(item) for item in items)

    def to_jsonl(self, include_wall_time: bool = False) -> str:
        items = self.to_dicts(include_wall_time)
        return "".join(json.dumps(item, sort_keys=True) + "\n" for item in items)

    @classmethod
    def from_jsonl(cls, text: str) -> "History":
        items = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                items.append(json.loads(line))
            except ValueError as e:
                raise FormatError("history line %d: %s" % (number, e))
        return cls.from_dicts(items)
