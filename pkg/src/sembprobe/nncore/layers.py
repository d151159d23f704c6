"""Layers with hand-written forward/backward passes.

Inputs are float64 arrays, either a single vector (n,) or a batch (B, n).
`apply` returns (output, cache); `apply_grad` consumes the cache, accumulates
into parameter gradients, and returns the gradient w.r.t. the input. The
stateful forward/backward pair is a convenience for single-shot uses.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError, DimensionError
from .params import Parameter, as_tensor, uniform_init


def sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def relu(x: np.ndarray) -> np.ndarray:
    return np.maximum(x, 0.0)


def dropout_mask(shape, rate: float, rng: np.random.Generator) -> np.ndarray:
    """Inverted-dropout mask: 0 with probability rate, else 1/(1-rate)."""
    if not (0.0 <= rate < 1.0):
        raise ConfigError(f"dropout rate must be in [0, 1), got {rate}")
    keep = rng.random(shape) >= rate
    return keep.astype(np.float64) / (1.0 - rate)


def dropout(x, rate: float, rng: np.random.Generator | None = None, train_mode: bool = True):
    """Zero entries with probability `rate`, scaling survivors by 1/(1-rate).

    Identity in eval mode and at rate 0 (no generator draw in either case).
    """
    if not (0.0 <= rate < 1.0):
        raise ConfigError(f"dropout rate must be in [0, 1), got {rate}")
    x = as_tensor(x)
    if not train_mode or rate == 0.0:
        return x
    if rng is None:
        raise ValueError("dropout in train mode needs a random generator")
    return x * dropout_mask(x.shape, rate, rng)


class LinearLayer:
    """Affine map y = W x + b with W of shape (out, in)."""

    def __init__(self, in_dim: int, out_dim: int, rng: np.random.Generator | None = None,
                 init_scale: float = 0.1, name: str = "linear"):
        if rng is None:
            w = np.zeros((out_dim, in_dim))
        else:
            w = uniform_init((out_dim, in_dim), rng, init_scale)
        self.weight = Parameter(w, f"{name}.weight")
        self.bias = Parameter(np.zeros(out_dim), f"{name}.bias")
        self.in_dim = in_dim
        self.out_dim = out_dim
        self._cache = None

    def parameters(self) -> list[Parameter]:
        return [self.weight, self.bias]

    def apply(self, x):
        x = as_tensor(x)
        if x.shape[-1] != self.in_dim:
            raise DimensionError(
                f"linear input has size {x.shape[-1]}, expected {self.in_dim}")
        return x @ self.weight.value.T + self.bias.value, x

    def apply_grad(self, cache, grad_out):
        x = cache
        grad_out = np.asarray(grad_out, dtype=np.float64)
        if x.ndim == 1:
            self.weight.grad += np.outer(grad_out, x)
            self.bias.grad += grad_out
            return self.weight.value.T @ grad_out
        self.weight.grad += grad_out.T @ x
        self.bias.grad += grad_out.sum(axis=0)
        return grad_out @ self.weight.value

    def forward(self, x):
        y, self._cache = self.apply(x)
        return y

    def backward(self, grad_out):
        if self._cache is None:
            raise RuntimeError("backward called before forward")
        return self.apply_grad(self._cache, grad_out)


class LstmCell:
    """Single-layer LSTM cell with stacked gate weights.

    Gate blocks are stacked along the first axis in the order input, forget,
    candidate, output: w_x is (4h, x), w_h is (4h, h), bias is (4h,).
    The recurrence is i,f,o = sigmoid, g = tanh, c' = f*c + i*g, h = o*tanh(c').
    """

    def __init__(self, input_dim: int, hidden_dim: int,
                 rng: np.random.Generator | None = None, init_scale: float = 0.1,
                 name: str = "lstm"):
        h, x = hidden_dim, input_dim
        if rng is None:
            wx = np.zeros((4 * h, x))
            wh = np.zeros((4 * h, h))
        else:
            wx = uniform_init((4 * h, x), rng, init_scale)
            wh = uniform_init((4 * h, h), rng, init_scale)
        self.w_x = Parameter(wx, f"{name}.w_x")
        self.w_h = Parameter(wh, f"{name}.w_h")
        self.bias = Parameter(np.zeros(4 * h), f"{name}.bias")
        self.input_dim = x
        self.hidden_dim = h

    def parameters(self) -> list[Parameter]:
        return [self.w_x, self.w_h, self.bias]

    def gate_slice(self, gate: str) -> slice:
        """Row range of one gate block ('i', 'f', 'g' or 'o')."""
        idx = "ifgo".index(gate)
        h = self.hidden_dim
        return slice(idx * h, (idx + 1) * h)

    def step(self, x, h_prev, c_prev):
        """One recurrence step; returns (h, c, cache)."""
        x = as_tensor(x)
        h_prev = as_tensor(h_prev)
        c_prev = as_tensor(c_prev)
        if x.shape[-1] != self.input_dim:
            raise DimensionError(
                f"lstm input has size {x.shape[-1]}, expected {self.input_dim}")
        if h_prev.shape[-1] != self.hidden_dim or c_prev.shape[-1] != self.hidden_dim:
            raise DimensionError("lstm state size does not match hidden_dim")
        hd = self.hidden_dim
        z = x @ self.w_x.value.T + h_prev @ self.w_h.value.T + self.bias.value
        i = sigmoid(z[..., 0 * hd:1 * hd])
        f = sigmoid(z[..., 1 * hd:2 * hd])
        g = np.tanh(z[..., 2 * hd:3 * hd])
        o = sigmoid(z[..., 3 * hd:4 * hd])
        c = f * c_prev + i * g
        tc = np.tanh(c)
        h = o * tc
        cache = (x, h_prev, c_prev, i, f, g, o, tc)
        return h, c, cache

    def step_grad(self, cache, dh, dc):
        """Backward through one step; returns (dx, dh_prev, dc_prev).

        dh and dc are the loss gradients flowing into this step's h and c.
        """
        x, h_prev, c_prev, i, f, g, o, tc = cache
        dh = np.asarray(dh, dtype=np.float64)
        do = dh * tc
        dc_total = dc + dh * o * (1.0 - tc * tc)
        df = dc_total * c_prev
        di = dc_total * g
        dg = dc_total * i
        dz = np.concatenate(
            [di * i * (1.0 - i),
             df * f * (1.0 - f),
             dg * (1.0 - g * g),
             do * o * (1.0 - o)],
            axis=-1)
        if dz.ndim == 1:
            self.w_x.grad += np.outer(dz, x)
            self.w_h.grad += np.outer(dz, h_prev)
            self.bias.grad += dz
            dx = self.w_x.value.T @ dz
            dh_prev = self.w_h.value.T @ dz
        else:
            self.w_x.grad += dz.T @ x
            self.w_h.grad += dz.T @ h_prev
            self.bias.grad += dz.sum(axis=0)
            dx = dz @ self.w_x.value
            dh_prev = dz @ self.w_h.value
        dc_prev = dc_total * f
        return dx, dh_prev, dc_prev


class EmbeddingTable:
    """Vocabulary-indexed vectors (V, d) with scatter-add gradients."""

    def __init__(self, vocab_size: int, dim: int,
                 rng: np.random.Generator | None = None, init_scale: float = 0.1,
                 name: str = "embedding"):
        if rng is None:
            vecs = np.zeros((vocab_size, dim))
        else:
            vecs = uniform_init((vocab_size, dim), rng, init_scale)
        self.vectors = Parameter(vecs, f"{name}.vectors")
        self.vocab_size = vocab_size
        self.dim = dim

    def parameters(self) -> list[Parameter]:
        return [self.vectors]

    def lookup(self, ids) -> np.ndarray:
        ids = np.asarray(ids)
        if ids.size and (ids.min() < 0 or ids.max() >= self.vocab_size):
            raise DimensionError("embedding id out of range")
        return self.vectors.value[ids]

    def accumulate_grad(self, ids, grads) -> None:
        np.add.at(self.vectors.grad, np.asarray(ids), grads)
