"""Kernel backend selection.

The compiled extension is used when it imports cleanly; otherwise the
pure-Python kernels are used. Set ``HTDECOMP_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from htdecomp import _pykernels

try:
    if os.environ.get("HTDECOMP_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from htdecomp import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels.EdgeTable}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels.EdgeTable

DEFAULT_BACKEND = "cython" if _ckernels is not None else "python"


def available_backends():
    return sorted(BACKENDS)


def edge_table(edge_masks, vertex_count, backend=None):
    name = backend or DEFAULT_BACKEND
    try:
        cls = BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} not available "
                         f"(have: {', '.join(available_backends())})") from None
    return cls(edge_masks, vertex_count)
