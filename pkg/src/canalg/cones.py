"""Membership and enumeration for the dimension-vector cones P and Q.

P collects the vectors of preprojective-like modules: zero, or d0 > dinf >= 0
with every arm chain nonincreasing from d0 down to dinf.  Q is the dual cone
(nondecreasing chains, d0 < dinf).  Nonzero vectors never lie in both.
"""

from __future__ import annotations

from typing import Iterator

from .forms import CanonicalType, DimVector, _check_shape, zero_vector

DEFAULT_CAP = 10**8


class EnumerationCapExceeded(RuntimeError):
    """Raised when an enumeration would emit more elements than the caller's cap."""


def in_P(t: CanonicalType, d: DimVector) -> bool:
    _check_shape(t, d)
    if d.is_zero():
        return True
    if not d.d0 > d.dinf >= 0:
        return False
    return all(d.entry(i, j) >= d.entry(i, j + 1)
               for i, mi in enumerate(t.m, start=1) for j in range(mi))


def in_Q(t: CanonicalType, d: DimVector) -> bool:
    _check_shape(t, d)
    if d.is_zero():
        return True
    if not 0 <= d.d0 < d.dinf:
        return False
    return all(d.entry(i, j) <= d.entry(i, j + 1)
               for i, mi in enumerate(t.m, start=1) for j in range(mi))


def _chains(length: int, high: int, low: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing integer chains of the given length with values in [low, high],
    in lexicographically ascending order."""
    if length == 0:
        yield ()
        return
    for first in range(low, high + 1):
        for rest in _chains(length - 1, first, low):
            yield (first,) + rest


def enumerate_P(t: CanonicalType, p: int, cap: int = DEFAULT_CAP) -> Iterator[DimVector]:
    """All d in P with d0 <= p, each exactly once.

    Every coordinate of such a vector lies in [0, p], so the stream is finite.
    Order is lexicographic in (d0, dinf, arm entries), which keeps golden tests
    stable.  Raises EnumerationCapExceeded beyond ``cap`` elements.
    """
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    emitted = 1
    if emitted > cap:
        raise EnumerationCapExceeded(f"cap {cap} exceeded while enumerating P")
    yield zero_vector(t)
    for d0 in range(1, p + 1):
        for dinf in range(d0):
            per_arm = [list(_chains(mi - 1, d0, dinf)) for mi in t.m]
            for combo in _product_lex(per_arm):
                emitted += 1
                if emitted > cap:
                    raise EnumerationCapExceeded(
                        f"cap {cap} exceeded while enumerating P for {t}, p={p}")
                yield DimVector(d0, dinf, combo)


def _product_lex(pools: list[list[tuple[int, ...]]]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _product_lex(pools[1:]):
            yield (head,) + tail


def count_P(t: CanonicalType, p: int) -> int:
    """Cardinality of the enumerate_P stream, without materializing it."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    total = 1
    for d0 in range(1, p + 1):
        for dinf in range(d0):
            block = 1
            for mi in t.m:
                block *= _count_chains(mi - 1, d0 - dinf + 1)
            total += block
    return total


def _count_chains(length: int, values: int) -> int:
    # multiset coefficient C(length + values - 1, length)
    num, den = 1, 1
    for k in range(1, length + 1):
        num *= values + k - 1
        den *= k
    return num // den


def decompose_slope_one(t: CanonicalType, d: DimVector) -> tuple[int, tuple[int, ...]]:
    """Write d in P with d0 - dinf = 1 as r*h + e(l_1, ..., l_n).

    Such a vector takes only the values r and r+1, each arm starting at r+1
    and dropping once, so r = dinf and l_i counts the leading r+1 entries.
    The result round-trips exactly and always satisfies <d, d> = 1.
    """
    _check_shape(t, d)
    if not in_P(t, d):
        raise ValueError(f"{d} is not in the cone P")
    if d.d0 - d.dinf != 1:
        raise ValueError(f"{d} does not pair to 1 against h (d0-dinf={d.d0 - d.dinf})")
    r = d.dinf
    ls = tuple(sum(1 for x in arm if x == r + 1) for arm in d.arms)
    return r, ls
