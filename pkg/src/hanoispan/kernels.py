"""Select the compiled kernel backend, falling back to pure Python.

Set ``HANOISPAN_PURE_PYTHON=1`` to force the fallback.
"""

import os

from hanoispan import _fallback

FORCE_ENV = "HANOISPAN_PURE_PYTHON"

if os.environ.get(FORCE_ENV, "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from hanoispan import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

bareiss_det = _impl.bareiss_det
wilson_parents = _impl.wilson_parents
wilson_degree_counts = _impl.wilson_degree_counts
stream_state = _fallback.stream_state

RNG_NAME = "splitmix64 (per-sample stream = output j+1 of SplitMix64(seed))"
