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

from abc import ABCMeta, abstractmethod
from typing import Any, Dict

import numpy as np

from hsbnn.autograd import ops
from hsbnn.exceptions import DomainError


def _plain(x: Any) -> Any:
    data = ops.value(x)
    return data.item() if data.ndim == 0 else data.tolist()


class AbstractVariationalFactor(metaclass=ABCMeta):
    @staticmethod
    @abstractmethod
    def get_type() -> str:
        pass

    @abstractmethod
    def entropy(self) -> Any:
        pass

    @abstractmethod
    def parameters(self) -> Dict[str, Any]:
        pass

    def to_dict(self) -> Dict[str, Any]:
        fields = {name: _plain(p) for name, p in self.parameters().items()}
        return {"type": self.get_type(), **fields}

    @classmethod
    def from_dict(cls, fields: Dict[str, Any]) -> "AbstractVariationalFactor":
        kwargs = {
            k: np.asarray(v, dtype=np.float64) for k, v in fields.items() if k != "type"
        }
        return cls(**kwargs)  # type: ignore

    @staticmethod
    def _require_positive(name: str, x: Any) -> None:
        data = ops.value(x)
        if not np.all(data > 0):
            raise DomainError("%s must be positive" % name)
