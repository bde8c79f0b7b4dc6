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

import os
import tempfile
from typing import Iterator, Optional

from .interface import AbstractCheckpointStore


class FileCheckpointStore(AbstractCheckpointStore):
    def __init__(self, directory: str) -> None:
        self._directory = directory
        os.makedirs(directory, exist_ok=True)

    @property
    def directory(self) -> str:
        return self._directory

    def path(self, name: str) -> str:
        return os.path.join(self._directory, name)

    def put(self, name: str, data: bytes) -> None:
        handle, temporary = tempfile.mkstemp(dir=self._directory, prefix=".tmp-")
        try:
            with os.fdopen(handle, "wb") as f:
                f.write(data)
            os.replace(temporary, self.path(name))
        except BaseException:
            if os.path.exists(temporary):
                os.remove(temporary)
            raise

    def get(self, name: str) -> Optional[bytes]:
        try:
            with open(self.path(name), "rb") as f:
                return f.read()
        except FileNotFoundError:
            return None

    def delete(self, name: str) -> None:
        if os.path.exists(self.path(name)):
            os.remove(self.path(name))

    def list(self, limit: Optional[int] = None, offset: int = 0) -> Iterator[str]:
        names = sorted(
            entry
            for entry in os.listdir(self._directory)
            if not entry.startswith(".tmp-")
            and os.path.isfile(os.path.join(self._directory, entry))
        )[offset:]

        if limit is not None:
            names = names[:limit]

        for name in names:
            yield name
