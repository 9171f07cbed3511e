"""Backend-dispatched kernels.

Every hot numeric loop in the engine goes through the functions below.
They delegate to either the numba-jitted twins or the pure-numpy fallback;
see :mod:`fusionformer.backend` for how the initial choice is made and
``use_backend`` for switching in-process (tests, backend benchmark).
"""

from .. import backend as _backend
from . import numpy_ref

_impl = None
_name = None


def use_backend(name: str) -> None:
    """Bind all kernel entry points to the named implementation."""
    global _impl, _name
    if name == "numpy":
        _impl = numpy_ref
    elif name == "numba":
        if not _backend.numba_available():
            raise ImportError("numba backend requested but numba is not importable")
        from . import numba_jit

        _impl = numba_jit
    else:
        raise ValueError(f"unknown backend {name!r}")
    _name = name


def active_backend() -> str:
    return _name


use_backend(_backend.default_backend())


def linear(x, wt, b, relu=False):
    return _impl.linear(x, wt, b, relu)


def depthwise_conv1d(x, w, b, causal=False, lo=None, relu=False):
    if lo is None:
        import numpy as np

        lo = np.zeros(x.shape[0], dtype=np.int64)
    return _impl.depthwise_conv1d(x, w, b, causal, lo, relu)


def layer_norm(x, gamma, beta, eps):
    return _impl.layer_norm(x, gamma, beta, eps)


def batch_norm(x, gamma, beta, mean, var, eps):
    return _impl.batch_norm(x, gamma, beta, mean, var, eps)


def relu(x):
    return _impl.relu(x)


def swish(x):
    return _impl.swish(x)


def glu(x):
    return _impl.glu(x)


def softmax_rows(x):
    return _impl.softmax_rows(x)


def quantize_dynamic(x):
    return _impl.quantize_dynamic(x)


def linear_i8(xq, x_scale, wq, w_scale, b, relu=False):
    return _impl.linear_i8(xq, x_scale, wq, w_scale, b, relu)


def depthwise_conv1d_i8(xq, x_scale, wq, w_scale, b, causal=False, lo=None, relu=False):
    if lo is None:
        import numpy as np

        lo = np.zeros(xq.shape[0], dtype=np.int64)
    return _impl.depthwise_conv1d_i8(xq, x_scale, wq, w_scale, b, causal, lo, relu)
