"""Pure-Python combinadic kernels.

Fallback implementation used when the compiled extension is unavailable
(or when ``WOMCODE_PURE_PYTHON`` is set).  Same contract as ``_kernels``:
inputs are assumed validated by :mod:`womcode.combinadic`.

Bit vectors are sequences of 0/1 ints, leftmost element first; the
leftmost element sits at position n-1 (positions count down to 0 at the
right end).
"""

from math import comb


def binomial(n: int, k: int) -> int:
    """n choose k, exact; 0 when k > n."""
    if k > n:
        return 0
    return comb(n, k)


def rank(bits) -> int:
    """Lexical index of a weight-k bit vector among all of its weight class.

    For ones at positions i1 > i2 > ... > ik the index is
    C(i1, k) + C(i2, k-1) + ... + C(ik, 1).
    """
    n = len(bits)
    j = sum(bits)
    r = 0
    for idx, b in enumerate(bits):
        if b:
            r += comb(n - 1 - idx, j)
            j -= 1
    return r


def unrank(index: int, n: int, k: int) -> list:
    """Inverse of :func:`rank`: the weight-k vector of length n at `index`.

    Greedy left-to-right: each one goes to the largest position i with
    C(i, j) <= remaining index, found by a descending scan.
    """
    bits = [0] * n
    i = n - 1
    r = index
    for j in range(k, 0, -1):
        while comb(i, j) > r:
            i -= 1
        r -= comb(i, j)
        bits[n - 1 - i] = 1
        i -= 1
    return bits
