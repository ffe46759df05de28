"""Kernel backend selection.

The compiled extension is preferred when importable; ``OTISLAY_BACKEND``
forces a choice: ``compiled`` (error if unavailable), ``python``, or
``auto`` (the default).
"""

import os

_requested = os.environ.get("OTISLAY_BACKEND", "auto").strip().lower()

if _requested in ("", "auto", "compiled"):
    try:
        from . import _kernels as _impl
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "OTISLAY_BACKEND=compiled but the otislay._kernels extension "
                "is not built; reinstall with a C toolchain available"
            )
        from . import _kernels_py as _impl
elif _requested in ("python", "pure"):
    from . import _kernels_py as _impl
else:
    raise ValueError(
        f"unrecognized OTISLAY_BACKEND={_requested!r} "
        "(expected auto, compiled, or python)"
    )

BACKEND = _impl.BACKEND_NAME
sat_matmul = _impl.sat_matmul
heuchenne_violation = _impl.heuchenne_violation


def backend_name():
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return BACKEND
