"""Kernel backend selection.

The compiled Cython module is preferred; the pure-Python module is a
drop-in fallback.  Set TILESTAGE_PURE=1 to force the fallback (used by the
benchmark to compare the two).
"""

from __future__ import annotations

import os

if os.environ.get("TILESTAGE_PURE") == "1":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

build_table = _impl.build_table
eval_offsets = _impl.eval_offsets
slide_escape = _impl.slide_escape
