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

"""
Operations usable on both tape tensors and plain arrays.

When any operand is a `Tensor` the call is recorded on the tape and a
`Tensor` comes back; otherwise the same forward rule runs eagerly on
numpy arrays. Model formulas are written once against this module.
"""

from typing import Any, Optional, Union

import numpy as np

from hsbnn.exceptions import DomainError

from . import functions as F
from .tensor import Tensor

Value = Union[Tensor, np.ndarray, float]

ELEMENTWISE = {
    "add": F.Add,
    "sub": F.Sub,
    "mul": F.Mul,
    "div": F.Div,
    "neg": F.Neg,
    "exp": F.Exp,
    "log": F.Log,
    "square": F.Square,
    "sqrt": F.Sqrt,
    "relu": F.Relu,
    "softplus": F.Softplus,
    "sigmoid": F.Sigmoid,
    "gammaln": F.Gammaln,
    "digamma": F.Digamma,
}

REDUCTIONS = {"sum": F.Sum, "mean": F.Mean, "logsumexp": F.LogSumExp}


def _dispatch(fn_cls, *operands: Any, **options: Any) -> Value:
    if any(isinstance(operand, Tensor) for operand in operands):
        return fn_cls.apply(*operands, **options)
    arrays = [np.asarray(operand, dtype=np.float64) for operand in operands]
    return fn_cls.evaluate(*arrays, **options)


def elementwise(kind: str, *operands: Any) -> Value:
    try:
        fn_cls = ELEMENTWISE[kind]
    except KeyError:
        raise DomainError("unknown elementwise kind: %s" % kind)
    return _dispatch(fn_cls, *operands)


def reduce(kind: str, value: Any, axis: Optional[int] = None) -> Value:
    try:
        fn_cls = REDUCTIONS[kind]
    except KeyError:
        raise DomainError("unknown reduction kind: %s" % kind)
    return _dispatch(fn_cls, value, axis=axis)


def matmul(a: Any, b: Any) -> Value:
    return _dispatch(F.MatMul, a, b)


def add(a: Any, b: Any) -> Value:
    return _dispatch(F.Add, a, b)


def sub(a: Any, b: Any) -> Value:
    return _dispatch(F.Sub, a, b)


def mul(a: Any, b: Any) -> Value:
    return _dispatch(F.Mul, a, b)


def div(a: Any, b: Any) -> Value:
    return _dispatch(F.Div, a, b)


def neg(x: Any) -> Value:
    return _dispatch(F.Neg, x)


def exp(x: Any) -> Value:
    return _dispatch(F.Exp, x)


def log(x: Any) -> Value:
    return _dispatch(F.Log, x)


def square(x: Any) -> Value:
    return _dispatch(F.Square, x)


def sqrt(x: Any) -> Value:
    return _dispatch(F.Sqrt, x)


def relu(x: Any) -> Value:
    return _dispatch(F.Relu, x)


def softplus(x: Any) -> Value:
    return _dispatch(F.Softplus, x)


def sigmoid(x: Any) -> Value:
    return _dispatch(F.Sigmoid, x)


def gammaln(x: Any) -> Value:
    return _dispatch(F.Gammaln, x)


def digamma(x: Any) -> Value:
    return _dispatch(F.Digamma, x)


def transpose(x: Any) -> Value:
    return _dispatch(F.Transpose, x)


def append_ones(x: Any) -> Value:
    return _dispatch(F.AppendOnes, x)


def sum(x: Any, axis: Optional[int] = None) -> Value:  # noqa: A001
    return _dispatch(F.Sum, x, axis=axis)


def mean(x: Any, axis: Optional[int] = None) -> Value:
    return _dispatch(F.Mean, x, axis=axis)


def logsumexp(x: Any, axis: Optional[int] = None) -> Value:
    return _dispatch(F.LogSumExp, x, axis=axis)


def value(x: Any) -> np.ndarray:
    if isinstance(x, Tensor):
        return x.data
    return np.asarray(x, dtype=np.float64)


def softplus_inverse(y: Any) -> np.ndarray:
    y = np.asarray(y, dtype=np.float64)
    if np.any(y <= 0):
        raise DomainError("softplus inverse needs positive values")
    return y + np.log(-np.expm1(-y))
