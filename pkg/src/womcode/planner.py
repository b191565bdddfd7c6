"""Code parameter planning and validation.

A code instance is the tuple (m, v, h): symbols of m wits each, message
cardinalities v_1..v_t for the t successive writes, and window sizes
h_1 > h_2 > ... > h_t.  The code uses n = m * h_1 wits.  A parameter set
is feasible when each write's window can represent its cardinality:

  first write   sum_{k=0}^{h1-h2} C(h1, k) * (2^m - 1)^k  >=  v_1
  middle write  sum_{k=1}^{hi-h(i+1)} C(hi, k) * (2^m - 2)^k  >=  v_i
  last write    (2^m - 1)^{ht} - 1  >=  v_t

:func:`plan` chooses the h-sequence bottom-up: the smallest feasible h_t,
then each h_i as the smallest value above h_{i+1} whose window capacity
reaches v_i.  The capacities are strictly increasing in the window growth,
so scanning the growth upward finds the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinadic import binomial
from .errors import DomainError

# Window growth past this is assumed pathological input, not a real code.
_MAX_WINDOW_GROWTH = 10**6


@dataclass(frozen=True)
class CodeParams:
    """One position modulation code instance: (m, v_1..v_t, h_1..h_t)."""

    m: int
    v: tuple[int, ...]
    h: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise DomainError(f"m must be at least 2, got {self.m}")
        object.__setattr__(self, "v", tuple(self.v))
        object.__setattr__(self, "h", tuple(self.h))
        if len(self.v) < 1:
            raise DomainError("at least one write is required")
        if len(self.v) != len(self.h):
            raise DomainError(
                f"v and h must have equal length, got {len(self.v)} and {len(self.h)}"
            )
        if any(vi < 2 for vi in self.v):
            raise DomainError("every message cardinality must be at least 2")

    @property
    def t(self) -> int:
        """Number of writes."""
        return len(self.v)

    @property
    def n(self) -> int:
        """Total wit count, m * h_1."""
        return self.m * self.h[0]

    @property
    def erased(self) -> int:
        """Symbol value marking a soft-erased group (all wits programmed)."""
        return 2**self.m - 1


@dataclass(frozen=True)
class ConditionViolation:
    """One failed feasibility condition, as data rather than an exception."""

    condition: str  # window-order | first-write-capacity | middle-write-capacity | last-write-capacity
    detail: str


def capacity_first(h1: int, h2: int, m: int) -> int:
    """Message count of a first write: window h1, next window h2, 0..h1-h2 symbols
    written with values from {1, ..., 2^m - 1}."""
    if h1 <= h2:
        raise DomainError(f"first write needs h1 > h2, got {h1} <= {h2}")
    if h2 < 0 or m < 2:
        raise DomainError(f"invalid window ({h1}, {h2}) or m={m}")
    q = 2**m - 1
    return sum(binomial(h1, k) * q**k for k in range(0, h1 - h2 + 1))


def capacity_middle(hi: int, hnext: int, m: int) -> int:
    """Message count of a middle write: window hi, next window hnext, 1..hi-hnext
    symbols written with values from {1, ..., 2^m - 2}; the empty write is not
    available because the zero count must drop below hi."""
    if hi <= hnext:
        raise DomainError(f"middle write needs hi > hnext, got {hi} <= {hnext}")
    if hnext < 0 or m < 2:
        raise DomainError(f"invalid window ({hi}, {hnext}) or m={m}")
    q = 2**m - 2
    return sum(binomial(hi, k) * q**k for k in range(1, hi - hnext + 1))


def capacity_last(ht: int, m: int) -> int:
    """Message count of the last write: every value over ht symbols from
    {0, ..., 2^m - 2} except all-zero."""
    if ht < 1:
        raise DomainError(f"last window must be positive, got {ht}")
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    return (2**m - 1) ** ht - 1


def plan(m: int, v: Sequence[int]) -> CodeParams:
    """Choose the minimal window sizes h_1 > ... > h_t for cardinalities v.

    Works in reverse write order: h_t is the smallest window whose last-write
    capacity covers v_t (found by exact integer search, not floating-point
    logarithms), then each earlier window is the previous one plus the
    smallest growth whose capacity covers that write's cardinality.
    """
    v = tuple(v)
    if len(v) < 1:
        raise DomainError("at least one write is required")
    if any(vi < 2 for vi in v):
        raise DomainError("every message cardinality must be at least 2")
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    t = len(v)

    ht = 1
    while capacity_last(ht, m) < v[-1]:
        ht += 1
        if ht > _MAX_WINDOW_GROWTH:
            raise DomainError(f"no last window below {_MAX_WINDOW_GROWTH} covers v_t={v[-1]}")
    hs = [ht]

    for i in range(t - 1, 1, -1):  # middle writes, bottom-up
        hnext = hs[0]
        d = 1
        while capacity_middle(hnext + d, hnext, m) < v[i - 1]:
            d += 1
            if d > _MAX_WINDOW_GROWTH:
                raise DomainError(
                    f"window growth for write {i} exceeded {_MAX_WINDOW_GROWTH}"
                )
        hs.insert(0, hnext + d)

    if t >= 2:
        # Growth 0 can never cover v_1 >= 2 (its capacity sum is the single
        # empty-mask term, 1), so the search starts at 1 and the ordering
        # h_1 > h_2 holds by construction.
        hnext = hs[0]
        d = 1
        while capacity_first(hnext + d, hnext, m) < v[0]:
            d += 1
            if d > _MAX_WINDOW_GROWTH:
                raise DomainError(
                    f"window growth for the first write exceeded {_MAX_WINDOW_GROWTH}"
                )
        hs.insert(0, hnext + d)

    return CodeParams(m=m, v=v, h=tuple(hs))


def validate(params: CodeParams) -> list[ConditionViolation]:
    """Check all feasibility conditions; return violations (empty when valid).

    Capacity conditions are only evaluated for window pairs that are
    well-ordered; a pair that breaks the strict ordering is reported as a
    window-order violation instead.
    """
    m, v, h, t = params.m, params.v, params.h, params.t
    out: list[ConditionViolation] = []

    for i in range(t - 1):
        if h[i] <= h[i + 1]:
            out.append(
                ConditionViolation(
                    "window-order", f"h_{i + 1}={h[i]} not greater than h_{i + 2}={h[i + 1]}"
                )
            )
    if h[-1] < 1:
        out.append(ConditionViolation("window-order", f"h_{t}={h[-1]} not positive"))

    if t >= 2 and h[0] > h[1]:
        cap = capacity_first(h[0], h[1], m)
        if cap < v[0]:
            out.append(
                ConditionViolation(
                    "first-write-capacity", f"capacity {cap} below v_1={v[0]}"
                )
            )
    for i in range(2, t):
        if h[i - 1] > h[i]:
            cap = capacity_middle(h[i - 1], h[i], m)
            if cap < v[i - 1]:
                out.append(
                    ConditionViolation(
                        "middle-write-capacity",
                        f"capacity {cap} below v_{i}={v[i - 1]}",
                    )
                )
    if h[-1] >= 1:
        cap = capacity_last(h[-1], m)
        if cap < v[-1]:
            out.append(
                ConditionViolation(
                    "last-write-capacity", f"capacity {cap} below v_{t}={v[-1]}"
                )
            )
    return out
