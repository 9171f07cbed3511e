"""Parameter records for the individual layer kinds.

All weights are plain numpy arrays in row-major layout; float32 is the
working precision, float64 the oracle twin. Validation happens at
construction so the kernels can stay check-free.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ShapeError


@dataclass
class LinearParams:
    """weight [out_dim, in_dim], bias [out_dim]."""

    weight: np.ndarray
    bias: np.ndarray
    _wt: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.weight.ndim != 2 or self.bias.ndim != 1:
            raise ShapeError(
                f"linear expects 2-D weight and 1-D bias, got {self.weight.shape} / {self.bias.shape}"
            )
        if self.weight.shape[0] != self.bias.shape[0]:
            raise ShapeError(
                f"linear weight {self.weight.shape} disagrees with bias {self.bias.shape}"
            )

    @property
    def out_dim(self):
        return self.weight.shape[0]

    @property
    def in_dim(self):
        return self.weight.shape[1]

    @property
    def wt(self):
        """Contiguous [in_dim, out_dim] transpose, cached for the matmul kernels."""
        if self._wt is None:
            self._wt = np.ascontiguousarray(self.weight.T)
        return self._wt


@dataclass
class DepthwiseConvParams:
    """weight [channels, kernel_size], bias [channels]; kernel_size must be odd."""

    weight: np.ndarray
    bias: np.ndarray

    def __post_init__(self):
        if self.weight.ndim != 2 or self.bias.ndim != 1:
            raise ShapeError(
                f"depthwise conv expects 2-D weight and 1-D bias, got {self.weight.shape} / {self.bias.shape}"
            )
        channels, k = self.weight.shape
        if channels < 1:
            raise ShapeError(f"depthwise conv needs channels > 0, got {channels}")
        if k % 2 == 0:
            raise ShapeError(f"depthwise conv kernel size must be odd, got {k}")
        if self.bias.shape[0] != channels:
            raise ShapeError(
                f"depthwise conv weight {self.weight.shape} disagrees with bias {self.bias.shape}"
            )

    @property
    def channels(self):
        return self.weight.shape[0]

    @property
    def kernel_size(self):
        return self.weight.shape[1]


@dataclass
class LayerNormParams:
    gamma: np.ndarray
    beta: np.ndarray
    eps: float = 1e-5

    def __post_init__(self):
        if self.gamma.shape != self.beta.shape or self.gamma.ndim != 1:
            raise ShapeError(
                f"layer norm gamma {self.gamma.shape} disagrees with beta {self.beta.shape}"
            )
        if not self.eps > 0:
            raise ShapeError(f"layer norm eps must be positive, got {self.eps}")


@dataclass
class BatchNormParams:
    gamma: np.ndarray
    beta: np.ndarray
    running_mean: np.ndarray
    running_var: np.ndarray
    eps: float = 1e-5

    def __post_init__(self):
        shapes = {
            self.gamma.shape,
            self.beta.shape,
            self.running_mean.shape,
            self.running_var.shape,
        }
        if len(shapes) != 1 or self.gamma.ndim != 1:
            raise ShapeError(f"batch norm parameter shapes disagree: {sorted(shapes)}")
        if np.any(self.running_var < 0):
            raise ShapeError("batch norm running_var must be elementwise >= 0")
        if not self.eps > 0:
            raise ShapeError(f"batch norm eps must be positive, got {self.eps}")

    @property
    def channels(self):
        return self.gamma.shape[0]


@dataclass
class QuantizedLinear:
    """Per-tensor symmetric int8 weights with a float bias."""

    q_weight: np.ndarray
    w_scale: float
    bias: np.ndarray

    def __post_init__(self):
        if self.q_weight.dtype != np.int8:
            raise ShapeError(f"q_weight must be int8, got {self.q_weight.dtype}")
        if not self.w_scale > 0:
            raise ShapeError(f"w_scale must be positive, got {self.w_scale}")
        if self.q_weight.shape[0] != self.bias.shape[0]:
            raise ShapeError(
                f"q_weight {self.q_weight.shape} disagrees with bias {self.bias.shape}"
            )


@dataclass
class QuantizedDepthwiseConv:
    q_weight: np.ndarray
    w_scale: float
    bias: np.ndarray

    def __post_init__(self):
        if self.q_weight.dtype != np.int8:
            raise ShapeError(f"q_weight must be int8, got {self.q_weight.dtype}")
        if not self.w_scale > 0:
            raise ShapeError(f"w_scale must be positive, got {self.w_scale}")
