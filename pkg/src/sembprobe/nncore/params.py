"""Trainable float64 arrays with explicit gradients, plus the update rules."""

from __future__ import annotations

import math

import numpy as np

from ..errors import ConfigError

ADAGRAD_EPS = 1e-8


def as_tensor(data) -> np.ndarray:
    """Coerce to a C-contiguous float64 array."""
    return np.ascontiguousarray(data, dtype=np.float64)


def check_finite(arr: np.ndarray, what: str = "tensor") -> None:
    if not np.all(np.isfinite(arr)):
        raise FloatingPointError(f"non-finite values in {what}")


def uniform_init(shape, rng: np.random.Generator, scale: float = 0.1) -> np.ndarray:
    """Entries drawn uniformly from [-scale, scale]."""
    return rng.uniform(-scale, scale, size=shape)


class Parameter:
    """A value array paired with its gradient and AdaGrad accumulator."""

    __slots__ = ("name", "value", "grad", "adagrad_accum")

    def __init__(self, value, name: str = ""):
        self.name = name
        self.value = as_tensor(value)
        self.grad = np.zeros_like(self.value)
        self.adagrad_accum = np.zeros_like(self.value)

    @property
    def shape(self):
        return self.value.shape

    def zero_grad(self) -> None:
        self.grad.fill(0.0)

    def __repr__(self):
        return f"Parameter({self.name or 'unnamed'}, shape={self.value.shape})"


def adagrad_update(param: Parameter, lr: float) -> None:
    """accum += grad^2; value -= lr * grad / sqrt(accum + eps); grad is zeroed."""
    np.add(param.adagrad_accum, param.grad * param.grad, out=param.adagrad_accum)
    param.value -= lr * param.grad / np.sqrt(param.adagrad_accum + ADAGRAD_EPS)
    param.grad.fill(0.0)


def clip_gradients(params, threshold: float) -> float:
    """Rescale gradients so their global L2 norm is at most `threshold`.

    Returns the applied scale factor (1.0 when no clipping happened).
    """
    if threshold <= 0:
        raise ConfigError("clip threshold must be positive")
    total = 0.0
    for p in params:
        g = p.grad.ravel()
        total += float(np.dot(g, g))
    norm = math.sqrt(total)
    if norm <= threshold:
        return 1.0
    scale = threshold / norm
    for p in params:
        p.grad *= scale
    return scale
