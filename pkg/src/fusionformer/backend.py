"""Kernel backend selection.

Two interchangeable kernel implementations exist:

* ``numba`` -- hot loops compiled with ``numba.njit(cache=True)``
* ``numpy`` -- pure vectorized numpy, used as fallback and reference

The active backend is chosen once at import time from the environment
variable ``FUSIONFORMER_BACKEND`` (``numba`` | ``numpy``). Unset means
"numba if importable, else numpy". ``kernels.use_backend`` can switch at
runtime (used by the cross-backend tests and the backend benchmark).
"""

import os

ENV_VAR = "FUSIONFORMER_BACKEND"
BACKENDS = ("numba", "numpy")


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def default_backend() -> str:
    """Backend name from the env flag, falling back to auto-detection."""
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice:
        if choice not in BACKENDS:
            raise ValueError(
                f"{ENV_VAR} must be one of {BACKENDS}, got {choice!r}"
            )
        if choice == "numba" and not numba_available():
            raise ImportError(
                f"{ENV_VAR}=numba requested but numba is not importable"
            )
        return choice
    return "numba" if numba_available() else "numpy"
