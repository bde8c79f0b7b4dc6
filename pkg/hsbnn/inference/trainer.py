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
import time
from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from hsbnn.autograd import backward, ops
from hsbnn.data import Dataset
from hsbnn.exceptions import ContractError, DimensionError, NumericalError
from hsbnn.model import HorseshoeBNN, NoiseModel, sum_terms

from .adam import AdamState, adam_step, clip_gradients
from .config import TrainConfig
from .fixed_point import fixed_point_sweep
from .history import History, HistoryRecord

logger = logging.getLogger(__name__)

Callback = Callable[[HistoryRecord, HorseshoeBNN], None]

REPARAM_STREAM = "reparam"
SHUFFLE_STREAM = "shuffle"


def make_streams(seed: int) -> Dict[str, np.random.Generator]:
    """Independent generators for reparameterization noise and data order."""
    reparam, shuffle = np.random.SeedSequence(seed).spawn(2)
    return {
        REPARAM_STREAM: np.random.Generator(np.random.PCG64(reparam)),
        SHUFFLE_STREAM: np.random.Generator(np.random.PCG64(shuffle)),
    }


def make_init_rng(seed: int) -> np.random.Generator:
    child = np.random.SeedSequence(seed).spawn(3)[2]
    return np.random.Generator(np.random.PCG64(child))


def update_noise_model(
    noise: Optional[NoiseModel],
    grads: Mapping[str, np.ndarray],
    state: AdamState,
    cfg: TrainConfig,
) -> Tuple[NoiseModel, AdamState]:
    if noise is None:
        raise ContractError("the categorical likelihood has no noise model")
    params, state = adam_step(noise.params, grads, state, cfg)
    updated = noise.copy()
    updated.params = params
    return updated, state


class Trainer:
    def __init__(
        self,
        model: HorseshoeBNN,
        cfg: TrainConfig,
        adam: Optional[AdamState] = None,
        noise_adam: Optional[AdamState] = None,
        streams: Optional[Dict[str, np.random.Generator]] = None,
        history: Optional[History] = None,
        epoch: int = 0,
    ) -> None:
        self.model = model
        self.cfg = cfg
        self.adam = adam or AdamState.zeros_like(self._layer_params())
        self.noise_adam = noise_adam
        if self.noise_adam is None and model.noise is not None:
            self.noise_adam = AdamState.zeros_like(model.noise.params)
        self.streams = streams or make_streams(cfg.seed)
        self.history = history or History()
        self.epoch = epoch

    @property
    def step_count(self) -> int:
        return self.adam.t

    def _layer_params(self) -> Dict[str, np.ndarray]:
        return {
            name: value
            for name, value in self.model.parameters().items()
            if name.startswith("layers.")
        }

    def rng_states(self) -> Dict[str, Any]:
        return {name: rng.bit_generator.state for name, rng in self.streams.items()}

    def restore_rng_states(self, states: Mapping[str, Any]) -> None:
        for name, state in states.items():
            self.streams[name].bit_generator.state = state

    def evaluate_terms(
        self, x: np.ndarray, y: np.ndarray, n_total: int
    ) -> Tuple[Dict[str, Any], Dict[str, Any]]:
        leaves = self.model.leaves()
        terms = self.model.elbo_terms(
            x, y, n_total, self.cfg.samples, self.streams[REPARAM_STREAM], leaves
        )
        for name, term in terms.items():
            if not np.all(np.isfinite(ops.value(term))):
                raise NumericalError("non-finite ELBO term: %s" % name, term=name)
        return leaves, terms

    def step(self, x: np.ndarray, y: np.ndarray, n_total: int) -> float:
        leaves, terms = self.evaluate_terms(x, y, n_total)
        root = sum_terms(terms)
        grads = backward(root, leaves.values()).named(leaves)  # type: Mapping[str, Any]
        cfg = self.cfg
        if cfg.clip_norm is not None:
            # one norm over layer and noise gradients together
            grads = clip_gradients(grads, cfg.clip_norm)
            cfg = cfg.update(clip_norm=None)

        params, self.adam = adam_step(
            self._layer_params(),
            {name: g for name, g in grads.items() if name.startswith("layers.")},
            self.adam,
            cfg,
        )
        self.model.set_parameters(params)
        if self.model.noise is not None:
            noise_grads = {
                name[len("noise.") :]: g
                for name, g in grads.items()
                if name.startswith("noise.")
            }
            self.model.noise, self.noise_adam = update_noise_model(
                self.model.noise, noise_grads, self.noise_adam, cfg  # type: ignore
            )

        if self.step_count % self.cfg.fixed_point_every == 0:
            fixed_point_sweep(self.model)
        return float(ops.value(root))

    def _keep_going(self, epochs_done: int, target_steps: Optional[int]) -> bool:
        if target_steps is None:
            return epochs_done < self.cfg.epochs
        return self.step_count < target_steps

    def fit(self, dataset: Dataset, callbacks: Iterable[Callback] = ()) -> History:
        if dataset.size == 0:
            raise ContractError("cannot train on an empty dataset")
        if dataset.input_dim != self.model.input_dim:
            raise DimensionError(
                "dataset has %d features, network expects %d"
                % (dataset.input_dim, self.model.input_dim)
            )
        callbacks = list(callbacks)
        n_total = dataset.size
        target_steps = None
        if self.cfg.steps is not None:
            target_steps = self.step_count + self.cfg.steps
        shuffle = self.streams[SHUFFLE_STREAM]
        started = time.perf_counter()
        epochs_done = 0
        logger.info(
            "training %s network %s on %d points",
            self.model.prior.mode,
            self.model.network.widths,
            n_total,
        )
        while self._keep_going(epochs_done, target_steps):
            order = shuffle.permutation(n_total)
            for begin in range(0, n_total, self.cfg.batch_size):
                if target_steps is not None and self.step_count >= target_steps:
                    break
                index = order[begin : begin + self.cfg.batch_size]
                x, y = dataset.features[index], dataset.targets[index]
                value = self.step(x, y, n_total)
                if self.step_count % self.cfg.log_every:
                    continue
                record = HistoryRecord(
                    self.step_count,
                    self.epoch,
                    value,
                    round((time.perf_counter() - started) * 1000.0, 3),
                )
                self.history.append(record)
                logger.info(
                    "step %d epoch %d elbo %.6g", record.step, record.epoch, value
                )
                for callback in callbacks:
                    callback(record, self.model)
            self.epoch += 1
            epochs_done += 1
        logger.info("finished after %d steps", self.step_count)
        return self.history


def fit(
    model: HorseshoeBNN,
    dataset: Dataset,
    cfg: TrainConfig,
    callbacks: Iterable[Callback] = (),
) -> Tuple[HorseshoeBNN, History]:
    trainer = Trainer(model, cfg)
    history = trainer.fit(dataset, callbacks)
    return trainer.model, history
