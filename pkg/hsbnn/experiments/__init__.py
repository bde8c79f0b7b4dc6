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

from .base import (
    AbstractExperiment,
    ExperimentOptions,
    ResultsBundle,
    group_summary,
    replicate_seeds,
    run_replicates,
    summarize,
)
from .cubic import CubicRobustnessExperiment
from .factory import ExperimentFactory
from .mnist import MnistSubsetExperiment
from .planted import PlantedPruningExperiment
from .uci import UciRegressionExperiment

__all__ = [
    "AbstractExperiment",
    "CubicRobustnessExperiment",
    "ExperimentFactory",
    "ExperimentOptions",
    "MnistSubsetExperiment",
    "PlantedPruningExperiment",
    "ResultsBundle",
    "UciRegressionExperiment",
    "group_summary",
    "replicate_seeds",
    "run_replicates",
    "summarize",
]
