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
from typing import Iterator, Optional

from hsbnn.exceptions import CheckpointDoesNotExistError

from .storage import Checkpoint


class AbstractCheckpointStore(metaclass=ABCMeta):
    @abstractmethod
    def put(self, name: str, data: bytes) -> None:
        pass

    @abstractmethod
    def get(self, name: str) -> Optional[bytes]:
        pass

    @abstractmethod
    def delete(self, name: str) -> None:
        pass

    @abstractmethod
    def list(self, limit: Optional[int] = None, offset: int = 0) -> Iterator[str]:
        pass

    def exists(self, name: str) -> bool:
        return self.get(name) is not None

    def save(self, name: str, checkpoint: Checkpoint) -> Checkpoint:
        self.put(name, checkpoint.serialize())
        return checkpoint

    def load(self, name: str) -> Checkpoint:
        serialized = self.get(name)
        if serialized is None:
            raise CheckpointDoesNotExistError("Checkpoint %s does not exist" % name)
        return Checkpoint.deserialize(serialized)

    def put_text(self, name: str, text: str) -> None:
        self.put(name, text.encode("utf-8"))

    def get_text(self, name: str) -> Optional[str]:
        data = self.get(name)
        return None if data is None else data.decode("utf-8")
