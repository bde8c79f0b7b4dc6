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

from typing import Optional


class HsbnnError(Exception):
    pass


class DimensionError(HsbnnError, ValueError):
    pass


class DomainError(HsbnnError, ValueError):
    pass


class ContractError(HsbnnError):
    pass


class ConfigError(HsbnnError):
    pass


class FormatError(HsbnnError):
    pass


class CheckpointDoesNotExistError(HsbnnError):
    pass


class NumericalError(HsbnnError, ArithmeticError):
    def __init__(self, message: str, term: Optional[str] = None) -> None:
        super().__init__(message)
        self.term = term
