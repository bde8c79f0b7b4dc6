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

import csv
import io
import json
from typing import Any, Dict, List, Optional

import numpy as np

from hsbnn.exceptions import ContractError
from hsbnn.model import HorseshoeBNN

DEFAULT_THRESHOLD = 0.1
DEFAULT_SMALLEST = 5
DEFAULT_BINS = 20


def node_norms(node_weights: np.ndarray) -> np.ndarray:
    return np.linalg.norm(node_weights, axis=0)


def active_units(norms: np.ndarray, threshold: float = DEFAULT_THRESHOLD) -> int:
    if norms.size == 0:
        return 0
    return int(np.sum(norms > threshold * norms.max()))


class SparsityReport:
    def __init__(
        self,
        layer: int,
        node_weights: np.ndarray,
        threshold: float = DEFAULT_THRESHOLD,
        smallest: int = DEFAULT_SMALLEST,
        bins: int = DEFAULT_BINS,
    ) -> None:
        if not 0 <= threshold <= 1:
            raise ContractError("threshold must be a fraction of the max norm")
        self.layer = layer
        self.threshold = threshold
        norms = node_norms(node_weights)
        self.order = np.argsort(-norms, kind="stable")
        self.sorted_norms = norms[self.order]
        self.active = active_units(norms, threshold)
        self.width = norms.shape[0]
        self.histograms = self._histograms(
            node_weights, min(smallest, self.width), bins
        )

    @classmethod
    def from_model(
        cls,
        model: HorseshoeBNN,
        layer: int = 0,
        threshold: float = DEFAULT_THRESHOLD,
        smallest: int = DEFAULT_SMALLEST,
        bins: int = DEFAULT_BINS,
    ) -> "SparsityReport":
        return cls(layer, model.expected_node_weights(layer), threshold, smallest, bins)

    def _histograms(
        self, node_weights: np.ndarray, count: int, bins: int
    ) -> List[Dict[str, Any]]:
        histograms = []
        for rank, unit in enumerate(self.order[::-1][:count]):
            counts, edges = np.histogram(node_weights[:, unit], bins=bins)
            histograms.append(
                {
                    "rank": rank,
                    "unit": int(unit),
                    "counts": counts.tolist(),
                    "edges": edges.tolist(),
                }
            )
        return histograms

    def log_norm_curve(self) -> np.ndarray:
        position = np.arange(1, self.width + 1) / float(self.width)
        with np.errstate(divide="ignore"):
            log_norms = np.log(self.sorted_norms)
        return np.stack([position, log_norms], axis=1)

    def units_below(self, fraction: float) -> int:
        if self.width == 0:
            return 0
        return int(np.sum(self.sorted_norms < fraction * self.sorted_norms[0]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "layer": self.layer,
            "width": self.width,
            "threshold": self.threshold,
            "active_units": self.active,
            "sorted_norms": self.sorted_norms.tolist(),
            "unit_order": self.order.tolist(),
            "smallest_unit_histograms": self.histograms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def curve_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank", "unit", "position", "norm", "log_norm"])
        for rank, (unit, norm, point) in enumerate(
            zip(self.order, self.sorted_norms, self.log_norm_curve())
        ):
            position, log_norm = (float(v) for v in point)
            writer.writerow(
                [rank, int(unit), repr(position), repr(float(norm)), repr(log_norm)]
            )
        return out.getvalue()

    def histogram_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank", "unit", "bin_left", "bin_right", "count"])
        for histogram in self.histograms:
            edges = histogram["edges"]
            for index, count in enumerate(histogram["counts"]):
                writer.writerow(
                    [
                        histogram["rank"],
                        histogram["unit"],
                        repr(edges[index]),
                        repr(edges[index + 1]),
                        count,
                    ]
                )
        return out.getvalue()


def sparsity_reports(
    model: HorseshoeBNN,
    threshold: float = DEFAULT_THRESHOLD,
    layer: Optional[int] = None,
) -> List[SparsityReport]:
    layers = range(len(model.layers) - 1) if layer is None else [layer]
    return [SparsityReport.from_model(model, index, threshold) for index in layers]
