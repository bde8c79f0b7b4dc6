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

import logging
from collections import OrderedDict
from typing import Any, Collection, List, Mapping, Optional, Tuple

import numpy as np

from hsbnn.autograd import Tensor, ops, parameter
from hsbnn.exceptions import ContractError, DimensionError, DomainError

from .config import NetworkConfig, PriorConfig
from .layers import AbstractLayer, LayerFactory, OutputLayer
from .likelihood import AbstractLikelihood, LikelihoodFactory
from .noise import NoiseModel
from .predictive import PredictiveSummary

logger = logging.getLogger(__name__)

TERM_KINDS = ("likelihood", "prior", "entropy")


def term_kind(name: str) -> str:
    return name.rsplit(".", 1)[-1]


class HorseshoeBNN:
    """
    A feed-forward network together with its factorized posterior.

    Parameters are addressed by dotted names ("layers.0.beta_mu",
    "noise.alpha_raw"). Anything that evaluates the ELBO or samples the
    network can be handed a mapping of those names to tape tensors in
    place of the stored arrays.
    """

    def __init__(
        self,
        network: NetworkConfig,
        prior: PriorConfig,
        layers: List[AbstractLayer],
        noise: Optional[NoiseModel] = None,
    ) -> None:
        self.network = network
        self.prior = prior
        self.layers = layers
        self.noise = noise
        self.likelihood = LikelihoodFactory.create(
            network.likelihood
        )  # type: AbstractLikelihood
        self._validate()

    @classmethod
    def initialize(
        cls, network: NetworkConfig, prior: PriorConfig, rng: np.random.Generator
    ) -> "HorseshoeBNN":
        layers = []  # type: List[AbstractLayer]
        widths = network.widths
        for index in range(network.depth):
            is_output = index == network.depth - 1
            layer_type = OutputLayer.get_type() if is_output else prior.mode
            layers.append(
                LayerFactory.initialize(
                    layer_type, widths[index] + 1, widths[index + 1], prior, rng
                )
            )
        likelihood = LikelihoodFactory.create(network.likelihood)
        noise = NoiseModel.initialize() if likelihood.uses_noise else None
        logger.debug("initialized %s network with widths %s", prior.mode, widths)
        return cls(network, prior, layers, noise)

    def _validate(self) -> None:
        if len(self.layers) != self.network.depth:
            raise DimensionError(
                "expected %d layers, got %d" % (self.network.depth, len(self.layers))
            )
        for index, layer in enumerate(self.layers):
            expected = (self.network.widths[index] + 1, self.network.widths[index + 1])
            if (layer.fan_in, layer.width) != expected:
                raise DimensionError(
                    "layer %d is %s, expected %s"
                    % (index, (layer.fan_in, layer.width), expected)
                )
        if self.likelihood.uses_noise and self.noise is None:
            raise ContractError("%s needs a noise model" % self.network.likelihood)
        if not self.likelihood.uses_noise and self.noise is not None:
            raise ContractError("%s takes no noise model" % self.network.likelihood)

    @property
    def input_dim(self) -> int:
        return self.network.widths[0]

    def parameters(self) -> "OrderedDict[str, np.ndarray]":
        values = OrderedDict()  # type: OrderedDict[str, np.ndarray]
        for index, layer in enumerate(self.layers):
            for name in sorted(layer.params):
                values["layers.%d.%s" % (index, name)] = layer.params[name]
        if self.noise is not None:
            for name in sorted(self.noise.params):
                values["noise.%s" % name] = self.noise.params[name]
        return values

    def set_parameters(self, values: Mapping[str, np.ndarray]) -> None:
        current = self.parameters()
        for name, value in values.items():
            if name not in current:
                raise ContractError("unknown parameter: %s" % name)
            value = np.asarray(value, dtype=np.float64)
            if value.shape != current[name].shape:
                raise DimensionError(
                    "%s has shape %s, expected %s"
                    % (name, value.shape, current[name].shape)
                )
            if not np.all(np.isfinite(value)):
                raise DomainError("%s has non-finite entries" % name)
            scope, rest = name.split(".", 1)
            if scope == "noise":
                self.noise.params[rest] = value  # type: ignore
            else:
                index, field = rest.split(".", 1)
                self.layers[int(index)].params[field] = value

    def leaves(
        self, names: Optional[Collection[str]] = None
    ) -> "OrderedDict[str, Tensor]":
        return OrderedDict(
            (name, parameter(value, name=name))
            for name, value in self.parameters().items()
            if names is None or name in names
        )

    def _scoped(self, values: Optional[Mapping[str, Any]]) -> Tuple[List[Any], Any]:
        if values is None:
            return [None] * len(self.layers), None
        layer_values = []
        for index, layer in enumerate(self.layers):
            prefix = "layers.%d." % index
            scoped = dict(layer.params)
            scoped.update(
                (name[len(prefix):], value)
                for name, value in values.items()
                if name.startswith(prefix)
            )
            layer_values.append(scoped)
        noise_values = None
        if self.noise is not None:
            noise_values = dict(self.noise.params)
            noise_values.update(
                (name[len("noise."):], value)
                for name, value in values.items()
                if name.startswith("noise.")
            )
        return layer_values, noise_values

    def forward(
        self,
        x: Any,
        rng: np.random.Generator,
        values: Optional[Mapping[str, Any]] = None,
        variant: Optional[str] = None,
    ) -> Any:
        shape = ops.value(x).shape
        if len(shape) != 2 or shape[1] != self.input_dim:
            raise DimensionError(
                "inputs %s do not match input width %d" % (shape, self.input_dim)
            )
        layer_values, _ = self._scoped(values)
        h = x
        last = len(self.layers) - 1
        for index, layer in enumerate(self.layers):
            u = layer.forward(ops.append_ones(h), rng, layer_values[index], variant)
            h = u if index == last else ops.relu(u)
        return h

    def elbo_terms(
        self,
        x: np.ndarray,
        y: np.ndarray,
        n_total: int,
        samples: int,
        rng: np.random.Generator,
        values: Optional[Mapping[str, Any]] = None,
    ) -> "OrderedDict[str, Any]":
        """
        The ELBO split into named terms: the minibatch-rescaled Monte Carlo
        likelihood, then the expected log prior and entropy of each layer
        and of the noise posterior.
        """
        batch = ops.value(x).shape[0]
        if batch == 0 or batch > n_total:
            raise ContractError("minibatch of %d from %d points" % (batch, n_total))
        if samples < 1:
            raise ContractError("need at least one Monte Carlo sample")
        layer_values, noise_values = self._scoped(values)
        noise_q = self.noise.q(noise_values) if self.noise is not None else None
        total = 0.0
        for _ in range(samples):
            f = self.forward(x, rng, values)
            total = total + self.likelihood.expected_log_likelihood(f, y, noise_q)
        terms = OrderedDict()  # type: OrderedDict[str, Any]
        terms["likelihood"] = total * (float(n_total) / (batch * samples))
        for index, layer in enumerate(self.layers):
            log_prior = layer.expected_log_prior(layer_values[index])
            terms["layers.%d.prior" % index] = log_prior
            terms["layers.%d.entropy" % index] = layer.entropy(layer_values[index])
        if self.noise is not None:
            terms["noise.prior"] = self.noise.expected_log_prior(noise_values)
            terms["noise.entropy"] = self.noise.entropy(noise_values)
        return terms

    def elbo(
        self,
        x: np.ndarray,
        y: np.ndarray,
        n_total: int,
        samples: int,
        rng: np.random.Generator,
        values: Optional[Mapping[str, Any]] = None,
        ablate: Collection[str] = (),
    ) -> Any:
        return sum_terms(self.elbo_terms(x, y, n_total, samples, rng, values), ablate)

    def expected_node_weights(self, layer_index: int) -> np.ndarray:
        if not 0 <= layer_index < len(self.layers):
            raise ContractError(
                "layer index %d out of range [0, %d)" % (layer_index, len(self.layers))
            )
        return self.layers[layer_index].expected_node_weights()

    def predict(
        self, x: np.ndarray, samples: int, rng: np.random.Generator
    ) -> PredictiveSummary:
        if samples < 1:
            raise ContractError("need at least one predictive sample")
        f_samples = np.stack([ops.value(self.forward(x, rng)) for _ in range(samples)])
        gamma_samples = None
        if self.noise is not None:
            gamma_samples = np.asarray(self.noise.q().sample(rng, size=samples))
        return PredictiveSummary(self.likelihood, f_samples, gamma_samples)

    def layer_types(self) -> List[str]:
        return [layer.get_type() for layer in self.layers]

    def copy(self) -> "HorseshoeBNN":
        return HorseshoeBNN(
            self.network,
            self.prior,
            [layer.copy() for layer in self.layers],
            self.noise.copy() if self.noise is not None else None,
        )


def sum_terms(terms: Mapping[str, Any], ablate: Collection[str] = ()) -> Any:
    unknown = set(ablate) - set(TERM_KINDS)
    if unknown:
        raise ContractError("unknown ELBO term kinds: %s" % ", ".join(sorted(unknown)))
    total = 0.0  # type: Any
    for name, term in terms.items():
        if term_kind(name) not in ablate:
            total = total + term
    return total


def init_params(
    network: NetworkConfig, prior: PriorConfig, rng: np.random.Generator
) -> HorseshoeBNN:
    return HorseshoeBNN.initialize(network, prior, rng)


def forward_local_reparam(
    layer: AbstractLayer,
    a: Any,
    variant: str,
    rng: np.random.Generator,
    values: Optional[Mapping[str, Any]] = None,
) -> Any:
    return layer.forward(a, rng, values, variant)


def forward_centered(
    layer: AbstractLayer,
    a: Any,
    rng: np.random.Generator,
    values: Optional[Mapping[str, Any]] = None,
) -> Any:
    return layer.forward(a, rng, values)


def network_forward(
    model: HorseshoeBNN,
    x: Any,
    rng: np.random.Generator,
    values: Optional[Mapping[str, Any]] = None,
) -> Any:
    return model.forward(x, rng, values)


def elbo(
    model: HorseshoeBNN,
    x: np.ndarray,
    y: np.ndarray,
    n_total: int,
    samples: int,
    rng: np.random.Generator,
    values: Optional[Mapping[str, Any]] = None,
    ablate: Collection[str] = (),
) -> Any:
    return model.elbo(x, y, n_total, samples, rng, values, ablate)


def expected_node_weights(model: HorseshoeBNN, layer_index: int) -> np.ndarray:
    return model.expected_node_weights(layer_index)


def predict(
    model: HorseshoeBNN, x: np.ndarray, samples: int, rng: np.random.Generator
) -> PredictiveSummary:
    return model.predict(x, samples, rng)
