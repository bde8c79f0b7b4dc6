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

from typing import Dict, Iterator, Optional

from .interface import AbstractCheckpointStore


class MemoryCheckpointStore(AbstractCheckpointStore):
    def __init__(self) -> None:
        self._memory = {}  # type: Dict[str, bytes]

    def put(self, name: str, data: bytes) -> None:
        self._memory[name] = bytes(data)

    def get(self, name: str) -> Optional[bytes]:
        return self._memory.get(name)

    def delete(self, name: str) -> None:
        if name in self._memory:
            del self._memory[name]

    def list(self, limit: Optional[int] = None, offset: int = 0) -> Iterator[str]:
        names = sorted(self._memory.keys())[offset:]

        if limit is not None:
            names = names[:limit]

        for name in names:
            yield name
