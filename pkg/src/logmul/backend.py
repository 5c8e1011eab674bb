"""Kernel backend selection.

The hot loops (multiplier evaluation over operand arrays, PRNG streams)
have two interchangeable implementations: numba @njit loops and pure
numpy.  Selection order:

* ``LOGMUL_BACKEND=numba`` or ``LOGMUL_BACKEND=numpy`` forces a backend;
* unset (or ``auto``): numba when importable, else the numpy fallback.

Both backends are integer-exact and produce bit-identical results; see
``benchmarks/bench_backends.py`` for the speed comparison.
"""

from __future__ import annotations

import os

_requested = os.environ.get("LOGMUL_BACKEND", "auto").strip().lower() or "auto"

if _requested == "numpy":
    from . import _kernels_numpy as _impl
elif _requested == "numba":
    from . import _kernels_numba as _impl
elif _requested == "auto":
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        from . import _kernels_numpy as _impl
else:
    raise ValueError(
        f"LOGMUL_BACKEND={_requested!r} not recognized; use 'numba', 'numpy' or 'auto'"
    )

mitchell_product = _impl.mitchell_product
kom_product = _impl.kom_product
draw_words = _impl.draw_words
salt_pepper = _impl.salt_pepper


def active_backend() -> str:
    """Name of the kernel backend in use ('numba' or 'numpy')."""
    return _impl.NAME
