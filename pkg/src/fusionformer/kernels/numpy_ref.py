"""Pure-numpy kernel implementations (fallback backend and readable reference).

Semantics contract shared with the numba twins in ``numba_jit.py``:

* layout is row-major ``[time, channels]`` everywhere;
* reductions (mean, variance, softmax sums) accumulate in float64, the
  elementwise result is cast back to the input dtype;
* ``relu=True`` runs the clamp as an epilogue of the producing kernel,
  numerically identical to a standalone ``relu`` call afterwards;
* ``lo`` is a per-output-frame lower bound on readable input frames for
  the depthwise convolution (zeros = no restriction); it is how chunked
  attention masks keep the conv receptive field inside the allowed span.

Backends agree within floating-point tolerance, not bitwise.
"""

import numpy as np


def linear(x, wt, b, relu):
    """x [T, in] @ wt [in, out] + b, optional fused ReLU clamp."""
    y = x @ wt
    y += b
    if relu:
        np.maximum(y, 0, out=y)
    return y


def depthwise_conv1d(x, w, b, causal, lo, relu):
    """Per-channel 1-D convolution. w is [C, k]; w[:, -1] taps the newest frame.

    Non-causal pads (k-1)/2 zeros each side; causal pads k-1 on the left.
    Frames below ``lo[t]`` read as zero.
    """
    T, _ = x.shape
    k = w.shape[1]
    shift = k - 1 if causal else (k - 1) // 2
    y = np.zeros_like(x)
    t = np.arange(T)
    for i in range(k):
        j = t + (i - shift)
        ok = (j >= 0) & (j < T) & (j >= lo)
        y[ok] += w[:, i] * x[j[ok]]
    y += b
    if relu:
        np.maximum(y, 0, out=y)
    return y


def layer_norm(x, gamma, beta, eps):
    """Per-row normalization with population (divisor-d) variance."""
    mu = x.mean(axis=1, keepdims=True, dtype=np.float64)
    xc = x - mu
    var = np.mean(xc * xc, axis=1, keepdims=True)
    y = gamma * (xc / np.sqrt(var + eps)) + beta
    return y.astype(x.dtype, copy=False)


def batch_norm(x, gamma, beta, mean, var, eps):
    """Inference-mode BN: a fixed per-channel affine map y = a*x + c."""
    a = gamma.astype(np.float64) / np.sqrt(var.astype(np.float64) + eps)
    c = beta.astype(np.float64) - mean.astype(np.float64) * a
    return x * a.astype(x.dtype) + c.astype(x.dtype)


def relu(x):
    return np.maximum(x, 0)


def _sigmoid(x):
    z = np.exp(-np.abs(x))
    return np.where(x >= 0, 1.0 / (1.0 + z), z / (1.0 + z))


def swish(x):
    return x * _sigmoid(x)


def glu(x):
    half = x.shape[-1] // 2
    return x[..., :half] * _sigmoid(x[..., half:])


def softmax_rows(x):
    """Max-subtracted row softmax.

    Rows whose max is not finite (fully masked or NaN-poisoned) come back
    as all zeros and are flagged in the returned boolean vector.
    """
    m = np.max(x, axis=1, keepdims=True)
    empty = ~np.isfinite(m[:, 0])
    e = np.exp(x - np.where(empty[:, None], 0.0, m))
    e[empty] = 0
    s = e.sum(axis=1, keepdims=True, dtype=np.float64)
    s[empty] = 1.0
    y = (e / s).astype(x.dtype, copy=False)
    return y, empty


def quantize_dynamic(x):
    """Per-tensor symmetric int8: scale = max|x| / 127, round-to-even."""
    amax = float(np.max(np.abs(x)))
    scale = amax / 127.0 if amax > 0 else 1.0
    q = np.clip(np.rint(x.astype(np.float64) / scale), -127, 127).astype(np.int8)
    return q, scale


def linear_i8(xq, x_scale, wq, w_scale, b, relu):
    """Integer matmul with int32 accumulation, rescale to float32."""
    acc = xq.astype(np.int32) @ wq.T.astype(np.int32)
    y = acc.astype(np.float32) * np.float32(w_scale * x_scale) + b
    if relu:
        np.maximum(y, 0, out=y)
    return y


def depthwise_conv1d_i8(xq, x_scale, wq, w_scale, b, causal, lo, relu):
    T, _ = xq.shape
    k = wq.shape[1]
    shift = k - 1 if causal else (k - 1) // 2
    acc = np.zeros(xq.shape, dtype=np.int32)
    t = np.arange(T)
    for i in range(k):
        j = t + (i - shift)
        ok = (j >= 0) & (j < T) & (j >= lo)
        acc[ok] += wq[:, i].astype(np.int32) * xq[j[ok]].astype(np.int32)
    y = acc.astype(np.float32) * np.float32(w_scale * x_scale) + b
    if relu:
        np.maximum(y, 0, out=y)
    return y
