"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``VEERLAB_PURE=1`` to force the pure-Python kernels (used by the
benchmark and by tests that compare the two backends).  The compiled
kernels work on machine integers and raise OverflowError on inputs beyond
int64 range or with oversized normal forms; the wrappers below fall back to
the pure versions per call, so results are always exact.
"""

from __future__ import annotations

import os

from veerlab import _pure

try:
    from veerlab import _speedups
except ImportError:  # pragma: no cover - depends on the build environment
    _speedups = None

if os.environ.get("VEERLAB_PURE"):
    _speedups = None

USING_SPEEDUPS = _speedups is not None


def _with_fallback(fast, slow):
    if fast is None:
        return slow

    def wrapper(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    wrapper.__name__ = slow.__name__
    wrapper.__doc__ = slow.__doc__
    return wrapper


word_matrix = _with_fallback(
    _speedups.word_matrix if _speedups else None, _pure.word_matrix
)
nf_exponents = _with_fallback(
    _speedups.nf_exponents if _speedups else None, _pure.nf_exponents
)
turn_letters = _with_fallback(
    _speedups.turn_letters if _speedups else None, _pure.turn_letters
)
