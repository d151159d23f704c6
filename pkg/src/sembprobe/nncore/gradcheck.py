"""Central-finite-difference check of hand-written gradients."""

from __future__ import annotations

import math

import numpy as np


def grad_check(loss_fn, params, eps: float = 1e-5) -> float:
    """Compare analytic gradients against central differences.

    `loss_fn()` must zero gradients, run forward and backward over the
    current parameter values, and return the scalar loss. Returns the
    maximum relative error max |a - n| / max(|a| + |n|, 1) over all
    parameter entries (the floor keeps near-zero gradients comparable).
    """
    loss = loss_fn()
    if not math.isfinite(loss):
        raise FloatingPointError(f"non-finite loss {loss} in gradient check")
    analytic = [p.grad.copy() for p in params]
    max_err = 0.0
    for p, saved in zip(params, analytic):
        flat_value = p.value.ravel()
        flat_grad = saved.ravel()
        for idx in range(flat_value.size):
            orig = flat_value[idx]
            flat_value[idx] = orig + eps
            loss_plus = loss_fn()
            flat_value[idx] = orig - eps
            loss_minus = loss_fn()
            flat_value[idx] = orig
            if not (math.isfinite(loss_plus) and math.isfinite(loss_minus)):
                raise FloatingPointError("non-finite loss under perturbation")
            numeric = (loss_plus - loss_minus) / (2.0 * eps)
            a = flat_grad[idx]
            err = abs(a - numeric) / max(abs(a) + abs(numeric), 1.0)
            if err > max_err:
                max_err = err
    # restore the analytic gradients so callers see a consistent state
    loss_fn()
    if not np.all([np.allclose(p.grad, g) for p, g in zip(params, analytic)]):
        raise AssertionError("loss_fn is not deterministic under repeated calls")
    return max_err
