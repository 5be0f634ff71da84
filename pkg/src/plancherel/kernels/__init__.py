"""Kernel backend selection.

The hot inner loop of the brute-force oracle (partition enumeration, hook
products, Casimir deltas, multiprecision accumulation) exists twice: a
compiled Cython extension and a pure-Python reference with identical
semantics.  The extension is preferred when importable; set
``PLANCHEREL_KERNEL=python`` to force the fallback (used by the benchmark
and the cross-check tests).
"""

import os

from . import reference

_forced = os.environ.get("PLANCHEREL_KERNEL", "").strip().lower()

fast = None
if _forced != "python":
    try:
        from . import _fastsum as fast
    except ImportError:
        fast = None

active = fast if fast is not None else reference
BACKEND = active.BACKEND


def backends():
    """All importable kernel backends, compiled first."""
    out = []
    if fast is not None:
        out.append(fast)
    out.append(reference)
    return out


plancherel_sum = active.plancherel_sum
