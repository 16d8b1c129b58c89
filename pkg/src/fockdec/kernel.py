"""Select the wedge normal-ordering kernel at import time.

The compiled Cython kernel is preferred when it built successfully; setting
FOCKDEC_PURE=1 in the environment forces the pure-Python kernel.  Both
expose the same interface and produce bit-identical results (enforced by
tests and the benchmark).
"""

from __future__ import annotations

import os

from fockdec import _straighten_py

if os.environ.get("FOCKDEC_PURE", "") not in ("", "0"):
    _impl = _straighten_py
else:
    try:
        from fockdec import _straighten_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _straighten_py

KERNEL_NAME: str = _impl.KERNEL_NAME
DEFAULT_STEP_BUDGET: int = _impl.DEFAULT_STEP_BUDGET

straighten_raw = _impl.straighten_raw
clear_cache = _impl.clear_cache
cache_size = _impl.cache_size
