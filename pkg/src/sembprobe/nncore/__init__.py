"""Minimal dense float64 numeric core with hand-written gradients."""

from .params import (
    ADAGRAD_EPS,
    Parameter,
    adagrad_update,
    as_tensor,
    check_finite,
    clip_gradients,
    uniform_init,
)
from .layers import (
    EmbeddingTable,
    LinearLayer,
    LstmCell,
    dropout,
    dropout_mask,
    relu,
    sigmoid,
)
from .losses import softmax, softmax_cross_entropy, softmax_cross_entropy_batch
from .gradcheck import grad_check
from .checkpoint import load_checkpoint, save_checkpoint

__all__ = [
    "ADAGRAD_EPS",
    "Parameter",
    "adagrad_update",
    "as_tensor",
    "check_finite",
    "clip_gradients",
    "uniform_init",
    "EmbeddingTable",
    "LinearLayer",
    "LstmCell",
    "dropout",
    "dropout_mask",
    "relu",
    "sigmoid",
    "softmax",
    "softmax_cross_entropy",
    "softmax_cross_entropy_batch",
    "grad_check",
    "load_checkpoint",
    "save_checkpoint",
]
