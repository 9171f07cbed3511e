"""Validated tensor operations over parameter records.

Thin contract layer above :mod:`fusionformer.kernels`: shape checks with
errors that name both shapes, then straight delegation. The model forward
pass bypasses this layer (stores are validated once at load time).
"""

import numpy as np

from . import kernels
from .errors import ShapeError
from .params import (
    BatchNormParams,
    DepthwiseConvParams,
    LayerNormParams,
    LinearParams,
)

ACTIVATIONS = ("relu", "swish", "glu")


def linear_forward(x: np.ndarray, p: LinearParams) -> np.ndarray:
    if x.ndim != 2 or x.shape[1] != p.in_dim:
        raise ShapeError(f"linear input {x.shape} incompatible with weight {p.weight.shape}")
    return kernels.linear(np.ascontiguousarray(x), p.wt, p.bias)


def depthwise_conv1d(
    x: np.ndarray,
    p: DepthwiseConvParams,
    causal: bool = False,
    left_bounds: np.ndarray = None,
) -> np.ndarray:
    if x.ndim != 2 or x.shape[1] != p.channels:
        raise ShapeError(f"conv input {x.shape} incompatible with weight {p.weight.shape}")
    return kernels.depthwise_conv1d(
        np.ascontiguousarray(x), p.weight, p.bias, causal=causal, lo=left_bounds
    )


def layer_norm(x: np.ndarray, p: LayerNormParams) -> np.ndarray:
    if x.ndim != 2 or x.shape[1] != p.gamma.shape[0]:
        raise ShapeError(f"layer norm input {x.shape} incompatible with gamma {p.gamma.shape}")
    return kernels.layer_norm(x, p.gamma, p.beta, p.eps)


def batch_norm_inference(x: np.ndarray, p: BatchNormParams) -> np.ndarray:
    if x.ndim != 2 or x.shape[1] != p.channels:
        raise ShapeError(f"batch norm input {x.shape} incompatible with gamma {p.gamma.shape}")
    return kernels.batch_norm(x, p.gamma, p.beta, p.running_mean, p.running_var, p.eps)


def activation(x: np.ndarray, kind: str) -> np.ndarray:
    if kind == "relu":
        return kernels.relu(x)
    if kind == "swish":
        return kernels.swish(x)
    if kind == "glu":
        if x.shape[-1] % 2 != 0:
            raise ShapeError(f"glu needs an even last dimension, got {x.shape}")
        return kernels.glu(x)
    raise ValueError(f"unknown activation {kind!r}, expected one of {ACTIVATIONS}")


def softmax_rows(x: np.ndarray, return_empty_mask: bool = False):
    """Row softmax; -inf inputs become exact zeros.

    Fully-masked rows come back as all zeros; set ``return_empty_mask`` to
    get the per-row flag vector and decide what that means downstream.
    """
    y, empty = kernels.softmax_rows(x)
    if return_empty_mask:
        return y, empty
    return y
