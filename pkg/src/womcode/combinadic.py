"""Exact binomial coefficients and the lexical rank/unrank bijection.

A length-n binary vector with k ones is identified with its index in the
lexically sorted list of all such vectors.  Vectors are plain sequences of
0/1 ints written leftmost-first, so the string "0101100" becomes
``[0, 1, 0, 1, 1, 0, 0]``; bit *positions* are labeled n-1 down to 0 from
left to right, which makes the index of a vector with ones at positions
i1 > i2 > ... > ik exactly C(i1, k) + C(i2, k-1) + ... + C(ik, 1).

All arithmetic is exact arbitrary-precision integer arithmetic; the counts
involved routinely exceed 64 bits.  The heavy loops live in a compiled
extension when it is available, with a pure-Python fallback chosen at
import time (set ``WOMCODE_PURE_PYTHON=1`` to force the fallback).
"""

from __future__ import annotations

import os
from typing import Sequence

from .errors import DomainError

if os.environ.get("WOMCODE_PURE_PYTHON"):
    from . import _kernels_py as _impl

    KERNEL_BACKEND = "pure-python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "pure-python"


def binomial(n: int, k: int) -> int:
    """Return n choose k exactly; 0 when k > n.

    Both arguments must be nonnegative integers.
    """
    if n < 0 or k < 0:
        raise DomainError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    return _impl.binomial(n, k)


def rank(bits: Sequence[int]) -> int:
    """Return the lexical index of `bits` among vectors of equal length and weight.

    The result lies in [0, C(n, k) - 1] for a length-n vector of weight k.
    """
    bits = list(bits)
    if any(b not in (0, 1) for b in bits):
        raise DomainError("bit vector elements must be 0 or 1")
    return _impl.rank(bits)


def unrank(index: int, n: int, k: int) -> list[int]:
    """Return the unique length-n weight-k vector whose :func:`rank` is `index`."""
    if n < 0 or k < 0:
        raise DomainError(f"unrank needs nonnegative n and k, got ({n}, {k})")
    if not 0 <= index < binomial(n, k):
        raise DomainError(
            f"index {index} out of range for {n} choose {k} = {binomial(n, k)}"
        )
    return _impl.unrank(index, n, k)
