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

from typing import Dict, Iterable, Iterator, List, Mapping, Optional

import numpy as np

from hsbnn.exceptions import ContractError

from .tensor import Tensor


class Gradients(Mapping):
    def __init__(
        self, adjoints: Dict[int, np.ndarray], leaves: Dict[int, Tensor]
    ) -> None:
        self._adjoints = adjoints
        self._leaves = leaves

    def __getitem__(self, leaf: Tensor) -> np.ndarray:
        adjoint = self._adjoints.get(id(leaf))
        if adjoint is None:
            return np.zeros_like(leaf.data)
        return adjoint

    def __iter__(self) -> Iterator[Tensor]:
        return iter(self._leaves.values())

    def __len__(self) -> int:
        return len(self._leaves)

    def named(self, leaves: Mapping[str, Tensor]) -> Dict[str, np.ndarray]:
        return {name: self[leaf] for name, leaf in leaves.items()}


def topological_order(root: Tensor) -> List[Tensor]:
    order = []  # type: List[Tensor]
    visited = set()
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        if node.creator is not None:
            for parent in node.creator.inputs:
                if parent.requires_grad and id(parent) not in visited:
                    stack.append((parent, False))
    return order


def backward(root: Tensor, leaves: Optional[Iterable[Tensor]] = None) -> Gradients:
    """
    Reverse-mode sweep from a scalar root.

    Adjoints of shared subexpressions are summed. Leaves passed in
    `leaves` that are not reachable from the root read back as zeros.
    """
    if root.size != 1:
        raise ContractError(
            "backward needs a scalar root, got shape %s" % (root.shape,)
        )

    adjoints = {}  # type: Dict[int, np.ndarray]
    reached = {}  # type: Dict[int, Tensor]
    if root.requires_grad:
        adjoints[id(root)] = np.ones_like(root.data)

    for node in reversed(topological_order(root)):
        adjoint = adjoints.get(id(node))
        if adjoint is None:
            continue
        if node.creator is None:
            reached[id(node)] = node
            continue
        del adjoints[id(node)]
        for parent, grad in zip(node.creator.inputs, node.creator.backward(adjoint)):
            if grad is None or not parent.requires_grad:
                continue
            existing = adjoints.get(id(parent))
            adjoints[id(parent)] = grad if existing is None else existing + grad

    for leaf in leaves or ():
        reached.setdefault(id(leaf), leaf)

    return Gradients(adjoints, reached)
