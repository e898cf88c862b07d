"""Backend selection for the hot charpoly kernel.

The compiled extension is used when importable; otherwise (or when the
``QWSPECTRA_PURE_PYTHON`` environment variable is set to a non-empty value
other than ``0``) the NumPy implementation is used.  ``BACKEND`` names the
active choice.
"""

from __future__ import annotations

import os

from . import _kernels_py

_force_py = os.environ.get("QWSPECTRA_PURE_PYTHON", "") not in ("", "0")

try:
    if _force_py:
        raise ImportError("pure-Python backend requested")
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

if _compiled is not None:
    fl_charpoly_mod = _compiled.fl_charpoly_mod
    BACKEND = "cython"
else:
    fl_charpoly_mod = _kernels_py.fl_charpoly_mod
    BACKEND = "python"

BACKENDS = {"python": _kernels_py.fl_charpoly_mod}
if _compiled is not None:
    BACKENDS["cython"] = _compiled.fl_charpoly_mod


def threads() -> int:
    """Worker cap from QWSPECTRA_THREADS (default: CPU count)."""
    raw = os.environ.get("QWSPECTRA_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1
