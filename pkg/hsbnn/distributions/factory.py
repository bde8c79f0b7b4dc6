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

from typing import Any, Dict

from .base import AbstractVariationalFactor
from .gamma import GammaQ
from .gaussian import GaussianQ
from .inv_gamma import InvGammaQ
from .lognormal import LogNormalQ


class DistributionFactory:
    DISTRIBUTION_MAP = {
        GammaQ.get_type(): GammaQ,
        GaussianQ.get_type(): GaussianQ,
        InvGammaQ.get_type(): InvGammaQ,
        LogNormalQ.get_type(): LogNormalQ,
    }

    class InvalidDistributionTypeError(Exception):
        pass

    @classmethod
    def create(cls, fields: Dict[str, Any]) -> AbstractVariationalFactor:
        try:
            distribution_cls = cls.DISTRIBUTION_MAP[fields["type"]]
        except KeyError:
            raise cls.InvalidDistributionTypeError(
                "Distribution type not supported: %s" % fields.get("type")
            )
        return distribution_cls.from_dict(fields)  # type: ignore


def entropy(kind: str, **params: Any) -> Any:
    factor_cls = DistributionFactory.DISTRIBUTION_MAP.get(kind)
    if factor_cls is None:
        raise DistributionFactory.InvalidDistributionTypeError(
            "Distribution type not supported: %s" % kind
        )
    return factor_cls(**params).entropy()
