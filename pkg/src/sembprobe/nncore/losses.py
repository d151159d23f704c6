"""Softmax cross-entropy, single-example and batched."""

from __future__ import annotations

import numpy as np

from .params import as_tensor


def softmax(logits: np.ndarray) -> np.ndarray:
    """Stable softmax along the last axis."""
    z = as_tensor(logits)
    z = z - z.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def softmax_cross_entropy(logits, target: int):
    """Loss -log softmax(logits)[target] and its gradient w.r.t. logits."""
    z = as_tensor(logits)
    if z.ndim != 1:
        raise ValueError("expected a 1-D logit vector; use the batch variant")
    if not 0 <= target < z.shape[0]:
        raise IndexError(f"target {target} out of range for {z.shape[0]} classes")
    shifted = z - z.max()
    lse = np.log(np.exp(shifted).sum())
    loss = float(lse - shifted[target])
    grad = np.exp(shifted - lse)
    grad[target] -= 1.0
    return loss, grad


def softmax_cross_entropy_batch(logits, targets):
    """Per-row losses (B,) and gradients (B, V) for integer targets (B,)."""
    z = as_tensor(logits)
    t = np.asarray(targets)
    if z.ndim != 2 or t.shape != (z.shape[0],):
        raise ValueError("expected logits (B, V) and targets (B,)")
    if t.size and (t.min() < 0 or t.max() >= z.shape[1]):
        raise IndexError("target out of range")
    shifted = z - z.max(axis=1, keepdims=True)
    lse = np.log(np.exp(shifted).sum(axis=1))
    rows = np.arange(z.shape[0])
    losses = lse - shifted[rows, t]
    grads = np.exp(shifted - lse[:, None])
    grads[rows, t] -= 1.0
    return losses, grads
