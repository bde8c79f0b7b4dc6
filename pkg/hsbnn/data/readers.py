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
import gzip
import logging
import os
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from hsbnn.exceptions import ConfigError, DomainError, FormatError

from .dataset import CLASSIFICATION, REGRESSION, Dataset

logger = logging.getLogger(__name__)

MISSING_TOKENS = frozenset(["", "nan", "na", "n/a", "null", "?"])

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801
PIXEL_SCALE = 126.0
MNIST_CLASSES = 10

MNIST_FILES = {
    "train": ("train-images-idx3-ubyte", "train-labels-idx1-ubyte"),
    "test": ("t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"),
}

Column = Union[int, str]


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _parse_cell(cell: str, line: int, column: int) -> float:
    token = cell.strip()
    if token.lower() in MISSING_TOKENS:
        raise FormatError("line %d, column %d: missing value %r" % (line, column, cell))
    try:
        value = float(token)
    except ValueError:
        raise FormatError("line %d, column %d: cannot parse %r" % (line, column, cell))
    if not np.isfinite(value):
        raise FormatError(
            "line %d, column %d: non-finite value %r" % (line, column, cell)
        )
    return value


def _resolve_column(column: Column, header: Optional[List[str]], width: int) -> int:
    if isinstance(column, str):
        if header is None:
            raise ConfigError("target column %r needs a header row" % column)
        names = [name.strip() for name in header]
        if column not in names:
            raise ConfigError("target column %r not in header %s" % (column, names))
        return names.index(column)
    if not -width <= column < width:
        raise ConfigError(
            "target column %d out of range for %d columns" % (column, width)
        )
    return column % width


def read_csv_table(path: str) -> Tuple[Optional[List[str]], np.ndarray]:
    """
    A numeric CSV table. The first row is a header when any of its cells
    is not a number. Every malformed cell is reported with its 1-based
    line and column.
    """
    with open(path, newline="") as f:
        rows = [row for row in csv.reader(f)]
    numbered = [
        (line, row)
        for line, row in enumerate(rows, start=1)
        if any(cell.strip() for cell in row)
    ]
    if not numbered:
        raise FormatError("%s: no rows" % path)
    header = None  # type: Optional[List[str]]
    first = numbered[0][1]
    present = [
        cell.strip() for cell in first if cell.strip().lower() not in MISSING_TOKENS
    ]
    if not all(_is_number(cell) for cell in present):
        header = first
        numbered = numbered[1:]
    if not numbered:
        raise FormatError("%s: header without data rows" % path)
    width = len(header) if header is not None else len(numbered[0][1])
    table = np.empty((len(numbered), width), dtype=np.float64)
    for index, (line, row) in enumerate(numbered):
        if len(row) != width:
            raise FormatError(
                "line %d: expected %d columns, found %d" % (line, width, len(row))
            )
        table[index] = [
            _parse_cell(cell, line, column) for column, cell in enumerate(row, start=1)
        ]
    logger.info("read %s: %d rows, %d columns", path, table.shape[0], width)
    return header, table


def _split_target(path: str, column: Column) -> Tuple[np.ndarray, np.ndarray]:
    header, table = read_csv_table(path)
    if table.shape[1] < 2:
        raise FormatError("%s: need at least one feature and one target column" % path)
    target = _resolve_column(column, header, table.shape[1])
    features = np.delete(table, target, axis=1)
    return features, table[:, target]


def read_csv_regression(path: str, target_column: Column = -1) -> Dataset:
    features, targets = _split_target(path, target_column)
    return Dataset(features, targets, REGRESSION, name=os.path.basename(path))


def read_csv_classification(
    path: str, target_column: Column = -1, num_classes: Optional[int] = None
) -> Dataset:
    features, targets = _split_target(path, target_column)
    if np.any(targets != np.round(targets)) or np.any(targets < 0):
        raise DomainError("%s: class labels must be non-negative integers" % path)
    labels = targets.astype(np.int64)
    classes = num_classes
    if classes is None:
        classes = max(int(labels.max()) + 1, 2)
    name = os.path.basename(path)
    return Dataset(features, labels, CLASSIFICATION, classes, name=name)


def _format_cell(value: object) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))  # type: ignore


def write_csv(path: str, header: Sequence[str], columns: Sequence[np.ndarray]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([_format_cell(value) for value in row])


def _read_bytes(path: str) -> bytes:
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rb") as f:
        return f.read()


def _idx_header(data: bytes, path: str, magic: int, dims: int) -> Tuple[int, ...]:
    size = 4 * (dims + 1)
    if len(data) < size:
        raise FormatError("%s: truncated header" % path)
    fields = np.frombuffer(data, dtype=">u4", count=dims + 1)
    if int(fields[0]) != magic:
        raise FormatError(
            "%s: bad magic 0x%08x, expected 0x%08x" % (path, int(fields[0]), magic)
        )
    return tuple(int(v) for v in fields[1:])


def read_idx_images(path: str) -> np.ndarray:
    data = _read_bytes(path)
    count, rows, cols = _idx_header(data, path, IMAGES_MAGIC, 3)
    expected = count * rows * cols
    if len(data) - 16 != expected:
        raise FormatError(
            "%s: expected %d pixel bytes, found %d" % (path, expected, len(data) - 16)
        )
    pixels = np.frombuffer(data, dtype=np.uint8, offset=16)
    return pixels.reshape(count, rows * cols)


def read_idx_labels(path: str) -> np.ndarray:
    data = _read_bytes(path)
    (count,) = _idx_header(data, path, LABELS_MAGIC, 1)
    if len(data) - 8 != count:
        raise FormatError(
            "%s: expected %d labels, found %d" % (path, count, len(data) - 8)
        )
    labels = np.frombuffer(data, dtype=np.uint8, offset=8).astype(np.int64)
    if labels.size and labels.max() >= MNIST_CLASSES:
        raise DomainError("%s: label %d outside 0-9" % (path, int(labels.max())))
    return labels


def read_mnist_idx(images_path: str, labels_path: str) -> Dataset:
    images = read_idx_images(images_path)
    labels = read_idx_labels(labels_path)
    if images.shape[0] != labels.shape[0]:
        raise FormatError(
            "%d images but %d labels in %s"
            % (images.shape[0], labels.shape[0], labels_path)
        )
    logger.info("read %d images of %d pixels", images.shape[0], images.shape[1])
    return Dataset(
        images / PIXEL_SCALE,
        labels,
        CLASSIFICATION,
        MNIST_CLASSES,
        name=os.path.basename(images_path),
    )


def find_mnist_files(directory: str, split: str) -> Tuple[str, str]:
    if split not in MNIST_FILES:
        raise ConfigError("invalid value for split: %r" % split)
    found = []
    for stem in MNIST_FILES[split]:
        for candidate in (stem, stem + ".gz"):
            path = os.path.join(directory, candidate)
            if os.path.exists(path):
                found.append(path)
                break
        else:
            raise FileNotFoundError("missing MNIST file %s in %s" % (stem, directory))
    return found[0], found[1]


def read_mnist_dir(directory: str, split: str = "train") -> Dataset:
    return read_mnist_idx(*find_mnist_files(directory, split))
