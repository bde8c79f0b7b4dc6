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

import math
from typing import Any, Dict

from hsbnn.autograd import ops

from .base import AbstractVariationalFactor

LOG_2PI_E = math.log(2.0 * math.pi * math.e)


class GaussianQ(AbstractVariationalFactor):
    def __init__(self, mu: Any, sigma2: Any) -> None:
        self._require_positive("sigma2", sigma2)
        self.mu = mu
        self.sigma2 = sigma2

    @classmethod
    def get_type(cls) -> str:
        return "gaussian"

    def parameters(self) -> Dict[str, Any]:
        return {"mu": self.mu, "sigma2": self.sigma2}

    def entropy(self) -> Any:
        return 0.5 * (ops.log(self.sigma2) + LOG_2PI_E)
