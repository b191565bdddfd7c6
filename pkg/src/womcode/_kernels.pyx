# cython: language_level=3
"""Compiled combinadic kernels.

Same contract as ``_kernels_py`` (inputs validated by the caller), but the
scans keep a running binomial coefficient that is updated multiplicatively
per position instead of being recomputed from scratch, and the loop
counters are C integers.  Counts stay exact: every update multiplies
before it divides, and each division is exact by the Pascal-style
identities C(i-1,j) = C(i,j)*(i-j)/i and C(i-1,j-1) = C(i,j)*j/i.
"""


def binomial(Py_ssize_t n, Py_ssize_t k):
    """n choose k, exact; 0 when k > n."""
    cdef Py_ssize_t i, kk
    if k > n:
        return 0
    kk = k if k <= n - k else n - k
    result = 1
    for i in range(1, kk + 1):
        result = result * (n - kk + i) // i
    return result


def rank(bits):
    """Lexical index of a weight-k bit vector (leftmost element first)."""
    cdef Py_ssize_t n = len(bits)
    cdef Py_ssize_t idx, i, j
    if n == 0:
        return 0
    j = 0
    for idx in range(n):
        if bits[idx]:
            j += 1
    b = binomial(n - 1, j)  # C(i, j) for the current position i
    r = 0
    i = n - 1
    for idx in range(n):
        if bits[idx]:
            r = r + b
            if i > 0:
                b = b * j // i
            j -= 1
        elif i > 0:
            b = b * (i - j) // i
        i -= 1
    return r


def unrank(index, Py_ssize_t n, Py_ssize_t k):
    """Weight-k vector of length n at lexical `index` (descending scan)."""
    cdef Py_ssize_t i, j
    bits = [0] * n
    if k == 0:
        return bits
    i = n - 1
    j = k
    b = binomial(n - 1, k)  # C(i, j)
    r = index
    while j > 0:
        while b > r:
            b = b * (i - j) // i
            i -= 1
        r = r - b
        bits[n - 1 - i] = 1
        if j > 1:
            b = b * j // i
        j -= 1
        i -= 1
    return bits
