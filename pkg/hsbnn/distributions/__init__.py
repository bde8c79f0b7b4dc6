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

from .base import AbstractVariationalFactor
from .densities import gamma_logpdf, half_cauchy_logpdf, inv_gamma_logpdf, normal_logpdf
from .expectations import (
    expected_log_aux,
    expected_log_gamma_prior,
    expected_log_hs_scale_terms,
    expected_log_scale_given_aux,
    expected_log_scaled_normal,
    expected_log_std_normal,
    gamma_expectations,
    lognormal_moments,
)
from .factory import DistributionFactory, entropy
from .gamma import GammaQ
from .gaussian import GaussianQ
from .inv_gamma import InvGammaQ
from .lognormal import LogNormalQ
from .sampling import GaussianDraw, sample_reparam_gaussian

__all__ = [
    "AbstractVariationalFactor",
    "DistributionFactory",
    "GammaQ",
    "GaussianDraw",
    "GaussianQ",
    "InvGammaQ",
    "LogNormalQ",
    "entropy",
    "expected_log_aux",
    "expected_log_gamma_prior",
    "expected_log_hs_scale_terms",
    "expected_log_scale_given_aux",
    "expected_log_scaled_normal",
    "expected_log_std_normal",
    "gamma_expectations",
    "gamma_logpdf",
    "half_cauchy_logpdf",
    "inv_gamma_logpdf",
    "lognormal_moments",
    "normal_logpdf",
    "sample_reparam_gaussian",
]
