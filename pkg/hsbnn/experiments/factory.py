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

from typing import Dict, Type

from hsbnn.exceptions import ConfigError

from .base import AbstractExperiment, ExperimentOptions, ResultsBundle
from .cubic import CubicRobustnessExperiment
from .mnist import MnistSubsetExperiment
from .planted import PlantedPruningExperiment
from .uci import UciRegressionExperiment


class ExperimentFactory:
    EXPERIMENT_MAP = {
        CubicRobustnessExperiment.get_type(): CubicRobustnessExperiment,
        PlantedPruningExperiment.get_type(): PlantedPruningExperiment,
        UciRegressionExperiment.get_type(): UciRegressionExperiment,
        MnistSubsetExperiment.get_type(): MnistSubsetExperiment,
    }  # type: Dict[str, Type[AbstractExperiment]]

    class InvalidExperimentTypeError(ConfigError):
        pass

    @classmethod
    def create(cls, name: str) -> AbstractExperiment:
        experiment_class = cls.EXPERIMENT_MAP.get(name)
        if experiment_class is None:
            raise cls.InvalidExperimentTypeError(
                "unknown experiment %r (expected one of %s)"
                % (name, ", ".join(sorted(cls.EXPERIMENT_MAP)))
            )
        return experiment_class()

    @classmethod
    def run(cls, name: str, options: ExperimentOptions) -> ResultsBundle:
        return cls.create(name).run(options)
