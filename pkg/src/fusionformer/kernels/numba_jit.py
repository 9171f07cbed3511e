"""Numba-compiled kernel twins.

Same call signatures and semantics as ``numpy_ref``; see its module
docstring for the contract. Compilation is lazy per dtype (float32 models
and the float64 oracle twin each get their own specialization) and cached
on disk. No fastmath: results must be reproducible run to run.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def linear(x, wt, b, relu):
    y = np.dot(x, wt)
    rows, cols = y.shape
    for t in range(rows):
        for o in range(cols):
            v = y[t, o] + b[o]
            if relu and v < 0:
                v = 0.0
            y[t, o] = v
    return y


@njit(cache=True)
def depthwise_conv1d(x, w, b, causal, lo, relu):
    T, C = x.shape
    k = w.shape[1]
    shift = k - 1 if causal else (k - 1) // 2
    y = np.empty_like(x)
    for t in range(T):
        j0 = t - shift
        lo_t = lo[t]
        for c in range(C):
            acc = x[0, 0] * 0
            for i in range(k):
                j = j0 + i
                if j < lo_t or j < 0 or j >= T:
                    continue
                acc += w[c, i] * x[j, c]
            v = acc + b[c]
            if relu and v < 0:
                v = 0.0
            y[t, c] = v
    return y


@njit(cache=True)
def layer_norm(x, gamma, beta, eps):
    T, d = x.shape
    y = np.empty_like(x)
    for t in range(T):
        s = 0.0
        for i in range(d):
            s += x[t, i]
        mu = s / d
        sq = 0.0
        for i in range(d):
            dv = x[t, i] - mu
            sq += dv * dv
        inv = 1.0 / math.sqrt(sq / d + eps)
        for i in range(d):
            y[t, i] = gamma[i] * ((x[t, i] - mu) * inv) + beta[i]
    return y


@njit(cache=True)
def batch_norm(x, gamma, beta, mean, var, eps):
    T, C = x.shape
    a = np.empty(C, dtype=x.dtype)
    c = np.empty(C, dtype=x.dtype)
    for i in range(C):
        s = gamma[i] / math.sqrt(var[i] + eps)
        a[i] = s
        c[i] = beta[i] - mean[i] * s
    y = np.empty_like(x)
    for t in range(T):
        for i in range(C):
            y[t, i] = x[t, i] * a[i] + c[i]
    return y


@njit(cache=True)
def relu(x):
    y = np.empty_like(x)
    flat_x = x.ravel()
    flat_y = y.ravel()
    for i in range(flat_x.size):
        v = flat_x[i]
        flat_y[i] = v if v > 0 else 0.0
    return y


@njit(cache=True, inline="always")
def _sigmoid_scalar(v):
    z = math.exp(-abs(v))
    if v >= 0:
        return 1.0 / (1.0 + z)
    return z / (1.0 + z)


@njit(cache=True)
def swish(x):
    y = np.empty_like(x)
    flat_x = x.ravel()
    flat_y = y.ravel()
    for i in range(flat_x.size):
        v = flat_x[i]
        flat_y[i] = v * _sigmoid_scalar(v)
    return y


@njit(cache=True)
def glu(x):
    T = x.shape[0]
    half = x.shape[1] // 2
    y = np.empty((T, half), dtype=x.dtype)
    for t in range(T):
        for i in range(half):
            y[t, i] = x[t, i] * _sigmoid_scalar(x[t, half + i])
    return y


@njit(cache=True)
def softmax_rows(x):
    R, S = x.shape
    y = np.zeros_like(x)
    empty = np.zeros(R, dtype=np.bool_)
    for r in range(R):
        m = -np.inf
        for j in range(S):
            if x[r, j] > m:
                m = x[r, j]
        if not np.isfinite(m):
            empty[r] = True
            continue
        s = 0.0
        for j in range(S):
            e = math.exp(x[r, j] - m)
            y[r, j] = e
            s += e
        inv = 1.0 / s
        for j in range(S):
            y[r, j] = y[r, j] * inv
    return y, empty


@njit(cache=True)
def quantize_dynamic(x):
    flat = x.ravel()
    amax = 0.0
    for i in range(flat.size):
        v = abs(flat[i])
        if v > amax:
            amax = v
    scale = amax / 127.0 if amax > 0 else 1.0
    q = np.empty(x.shape, dtype=np.int8)
    qf = q.ravel()
    for i in range(flat.size):
        v = np.rint(flat[i] / scale)
        if v > 127.0:
            v = 127.0
        elif v < -127.0:
            v = -127.0
        qf[i] = np.int8(v)
    return q, scale


@njit(cache=True)
def linear_i8(xq, x_scale, wq, w_scale, b, relu):
    T, n_in = xq.shape
    n_out = wq.shape[0]
    y = np.empty((T, n_out), dtype=np.float32)
    sc = np.float32(w_scale * x_scale)
    for t in range(T):
        for o in range(n_out):
            acc = np.int32(0)
            for i in range(n_in):
                acc += np.int32(xq[t, i]) * np.int32(wq[o, i])
            v = np.float32(acc) * sc + b[o]
            if relu and v < 0:
                v = 0.0
            y[t, o] = v
    return y


@njit(cache=True)
def depthwise_conv1d_i8(xq, x_scale, wq, w_scale, b, causal, lo, relu):
    T, C = xq.shape
    k = wq.shape[1]
    shift = k - 1 if causal else (k - 1) // 2
    y = np.empty((T, C), dtype=np.float32)
    sc = np.float32(w_scale * x_scale)
    for t in range(T):
        j0 = t - shift
        lo_t = lo[t]
        for c in range(C):
            acc = np.int32(0)
            for i in range(k):
                j = j0 + i
                if j < lo_t or j < 0 or j >= T:
                    continue
                acc += np.int32(wq[c, i]) * np.int32(xq[j, c])
            v = np.float32(acc) * sc + b[c]
            if relu and v < 0:
                v = 0.0
            y[t, c] = v
    return y
