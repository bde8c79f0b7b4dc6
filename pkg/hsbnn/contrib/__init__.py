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

from .file import FileCheckpointStore
from .interface import AbstractCheckpointStore
from .memory import MemoryCheckpointStore
from .s3 import S3CheckpointStore, parse_s3_url
from .storage import Checkpoint, CheckpointMeta

__all__ = [
    "AbstractCheckpointStore",
    "Checkpoint",
    "CheckpointMeta",
    "FileCheckpointStore",
    "MemoryCheckpointStore",
    "S3CheckpointStore",
    "parse_s3_url",
]
