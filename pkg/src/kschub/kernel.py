"""Selects the tableau-counting kernel at import time.

The compiled extension `_svt_core` is preferred; the pure-Python twin
`_svt_py` is the fallback.  Set KSCHUB_PURE=1 to force the fallback (used by
the parity tests and the benchmark).
"""

import os

if os.environ.get("KSCHUB_PURE"):
    from . import _svt_py as _impl

    IMPLEMENTATION = "python"
else:
    try:
        from . import _svt_core as _impl  # type: ignore[attr-defined]

        IMPLEMENTATION = "cython"
    except ImportError:
        from . import _svt_py as _impl

        IMPLEMENTATION = "python"

count_with_content = _impl.count_with_content
content_counts = _impl.content_counts
signed_monomial_counts = _impl.signed_monomial_counts
