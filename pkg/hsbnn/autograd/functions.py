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

from abc import ABCMeta, abstractmethod
from typing import Any, Optional, Tuple

import numpy as np
from scipy import special

from hsbnn.exceptions import DimensionError, DomainError

from .tensor import Tensor, as_tensor

Gradient = Optional[np.ndarray]


def _check_broadcast(left: Tuple[int, ...], right: Tuple[int, ...]) -> None:
    if left == right or left == () or right == ():
        return
    if len(left) == 2 and len(right) == 1 and left[1] == right[0]:
        return
    if len(right) == 2 and len(left) == 1 and right[1] == left[0]:
        return
    raise DimensionError("operand shapes %s and %s do not agree" % (left, right))


def _unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    if grad.shape == shape:
        return grad
    if shape == ():
        return np.asarray(grad.sum())
    return grad.sum(axis=0)


def _check_axis(x: np.ndarray, axis: Optional[int]) -> None:
    if axis is None:
        return
    if not isinstance(axis, (int, np.integer)) or not -x.ndim <= axis < x.ndim:
        raise DimensionError("invalid axis %r for shape %s" % (axis, x.shape))


def _expand(
    grad: np.ndarray, shape: Tuple[int, ...], axis: Optional[int]
) -> np.ndarray:
    if axis is not None:
        grad = np.expand_dims(grad, axis)
    return np.broadcast_to(grad, shape)


class Function(metaclass=ABCMeta):
    kind = "function"

    def __init__(self, **options: Any) -> None:
        self.options = options
        self.inputs = ()  # type: Tuple[Tensor, ...]

    @abstractmethod
    def forward(self, *arrays: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def backward(self, grad: np.ndarray) -> Tuple[Gradient, ...]:
        pass

    @classmethod
    def apply(cls, *operands: Any, **options: Any) -> Tensor:
        tensors = tuple(as_tensor(operand) for operand in operands)
        fn = cls(**options)
        out = fn.forward(*(t.data for t in tensors))
        if not any(t.requires_grad for t in tensors):
            return Tensor(out)
        fn.inputs = tensors
        return Tensor(out, requires_grad=True, creator=fn)

    @classmethod
    def evaluate(cls, *arrays: np.ndarray, **options: Any) -> np.ndarray:
        return cls(**options).forward(*arrays)


class Add(Function):
    kind = "add"

    def forward(self, a, b):
        _check_broadcast(a.shape, b.shape)
        self._shapes = (a.shape, b.shape)
        return a + b

    def backward(self, grad):
        return _unbroadcast(grad, self._shapes[0]), _unbroadcast(grad, self._shapes[1])


class Sub(Function):
    kind = "sub"

    def forward(self, a, b):
        _check_broadcast(a.shape, b.shape)
        self._shapes = (a.shape, b.shape)
        return a - b

    def backward(self, grad):
        return _unbroadcast(grad, self._shapes[0]), _unbroadcast(-grad, self._shapes[1])


class Mul(Function):
    kind = "mul"

    def forward(self, a, b):
        _check_broadcast(a.shape, b.shape)
        self._a, self._b = a, b
        return a * b

    def backward(self, grad):
        return (
            _unbroadcast(grad * self._b, self._a.shape),
            _unbroadcast(grad * self._a, self._b.shape),
        )


class Div(Function):
    kind = "div"

    def forward(self, a, b):
        _check_broadcast(a.shape, b.shape)
        if np.any(b == 0):
            raise DomainError("division by zero")
        self._a, self._b = a, b
        return a / b

    def backward(self, grad):
        return (
            _unbroadcast(grad / self._b, self._a.shape),
            _unbroadcast(-grad * self._a / (self._b * self._b), self._b.shape),
        )


class Neg(Function):
    kind = "neg"

    def forward(self, x):
        return -x

    def backward(self, grad):
        return (-grad,)


class Exp(Function):
    kind = "exp"

    def forward(self, x):
        self._out = np.exp(x)
        return self._out

    def backward(self, grad):
        return (grad * self._out,)


class Log(Function):
    kind = "log"

    def forward(self, x):
        if np.any(x <= 0):
            raise DomainError("log of a non-positive value")
        self._x = x
        return np.log(x)

    def backward(self, grad):
        return (grad / self._x,)


class Square(Function):
    kind = "square"

    def forward(self, x):
        self._x = x
        return x * x

    def backward(self, grad):
        return (2.0 * grad * self._x,)


class Sqrt(Function):
    kind = "sqrt"

    def forward(self, x):
        if np.any(x < 0):
            raise DomainError("sqrt of a negative value")
        self._out = np.sqrt(x)
        return self._out

    def backward(self, grad):
        return (0.5 * grad / self._out,)


class Relu(Function):
    kind = "relu"

    def forward(self, x):
        self._mask = x > 0
        return np.where(self._mask, x, 0.0)

    def backward(self, grad):
        # the sub-gradient at exactly 0 is 0
        return (grad * self._mask,)


class Softplus(Function):
    kind = "softplus"

    def forward(self, x):
        self._x = x
        return np.logaddexp(0.0, x)

    def backward(self, grad):
        return (grad * special.expit(self._x),)


class Sigmoid(Function):
    kind = "sigmoid"

    def forward(self, x):
        self._out = special.expit(x)
        return self._out

    def backward(self, grad):
        return (grad * self._out * (1.0 - self._out),)


class Gammaln(Function):
    kind = "gammaln"

    def forward(self, x):
        if np.any(x <= 0):
            raise DomainError("gammaln of a non-positive value")
        self._x = x
        return special.gammaln(x)

    def backward(self, grad):
        return (grad * special.digamma(self._x),)


class Digamma(Function):
    kind = "digamma"

    def forward(self, x):
        if np.any(x <= 0):
            raise DomainError("digamma of a non-positive value")
        self._x = x
        return special.digamma(x)

    def backward(self, grad):
        return (grad * special.polygamma(1, self._x),)


class MatMul(Function):
    kind = "matmul"

    def forward(self, a, b):
        if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
            raise DimensionError("cannot multiply %s by %s" % (a.shape, b.shape))
        self._a, self._b = a, b
        return a @ b

    def backward(self, grad):
        return grad @ self._b.T, self._a.T @ grad


class Transpose(Function):
    kind = "transpose"

    def forward(self, x):
        if x.ndim != 2:
            raise DimensionError("transpose expects a matrix, got %s" % (x.shape,))
        return x.T

    def backward(self, grad):
        return (grad.T,)


class AppendOnes(Function):
    kind = "append_ones"

    def forward(self, x):
        if x.ndim != 2:
            raise DimensionError("expected a matrix, got %s" % (x.shape,))
        return np.concatenate([x, np.ones((x.shape[0], 1))], axis=1)

    def backward(self, grad):
        return (grad[:, :-1],)


class Sum(Function):
    kind = "sum"

    def forward(self, x):
        self._axis = self.options.get("axis")
        _check_axis(x, self._axis)
        self._shape = x.shape
        return np.asarray(np.sum(x, axis=self._axis))

    def backward(self, grad):
        return (_expand(grad, self._shape, self._axis),)


class Mean(Function):
    kind = "mean"

    def forward(self, x):
        self._axis = self.options.get("axis")
        _check_axis(x, self._axis)
        self._shape = x.shape
        self._count = x.size if self._axis is None else x.shape[self._axis]
        return np.asarray(np.mean(x, axis=self._axis))

    def backward(self, grad):
        return (_expand(grad, self._shape, self._axis) / self._count,)


class LogSumExp(Function):
    kind = "logsumexp"

    def forward(self, x):
        self._axis = self.options.get("axis")
        _check_axis(x, self._axis)
        self._x = x
        self._out = np.asarray(special.logsumexp(x, axis=self._axis))
        return self._out

    def backward(self, grad):
        out = self._out if self._axis is None else np.expand_dims(self._out, self._axis)
        weights = np.exp(self._x - out)
        return (_expand(grad, self._x.shape, self._axis) * weights,)
