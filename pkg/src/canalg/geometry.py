"""Geometry of the module varieties attached to multiples of the all-ones vector.

The complete-intersection criterion asks whether <d, d> + p*(d0 - dinf) >= 0
for every d in P with d0 <= p; normality asks for strictness away from zero.
Because the quadratic value is invariant under shifts by h, the search space
collapses to slices d with dinf = 0 and d0 = s in [1, p], and within a slice
the form splits into independent per-arm sums, each minimized by dynamic
programming over nonincreasing integer chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .cones import DEFAULT_CAP, EnumerationCapExceeded, enumerate_P
from .forms import (CanonicalType, DimVector, basis_h, euler_quadratic,
                    format_dim_vector, zero_vector)

Boundary = Literal["above_boundary", "on_boundary", "below_boundary"]
ReprType = Literal["domestic", "tubular", "wild"]


def classify_type(t: CanonicalType) -> tuple[Boundary, ReprType]:
    """Position of sum(1/m_i) relative to n - 4, and the representation type."""
    s = t.sum_reciprocals
    b = t.n - 4
    if s > b:
        boundary: Boundary = "above_boundary"
    elif s == b:
        boundary = "on_boundary"
    else:
        boundary = "below_boundary"
    d = t.delta
    repr_type: ReprType = "domestic" if d < 0 else ("tubular" if d == 0 else "wild")
    return boundary, repr_type


def _arm_costs(mi: int, s: int) -> list[dict[int, int]]:
    """DP tables for one arm: table[j][v] = min cost of x_1..x_j with x_j = v.

    Cost of a chain is sum of x_j^2 - x_j*x_{j-1} with x_0 = s; chains are
    nonincreasing with values in [0, s].
    """
    tables: list[dict[int, int]] = []
    prev = {v: v * v - v * s for v in range(s + 1)}
    tables.append(prev)
    for _ in range(2, mi):
        cur: dict[int, int] = {}
        for v in range(s + 1):
            cur[v] = v * v + min(prev[w] - v * w for w in range(v, s + 1))
        tables.append(cur)
        prev = cur
    return tables


def _arm_min(mi: int, s: int) -> int:
    if s == 0:
        return 0
    return min(_arm_costs(mi, s)[-1].values())


def _arm_min_chains(mi: int, s: int) -> list[tuple[int, ...]]:
    """All nonincreasing chains attaining the per-arm minimum."""
    if s == 0:
        return [tuple(0 for _ in range(mi - 1))]
    tables = _arm_costs(mi, s)
    target = min(tables[-1].values())
    chains: list[tuple[int, ...]] = []

    def backtrack(j: int, v: int, need: int, suffix: tuple[int, ...]) -> None:
        if j == 0:
            if need == v * v - v * s:
                chains.append((v,) + suffix)
            return
        for w in range(v, s + 1):
            rest = need - (v * v - v * w)
            if tables[j - 1].get(w) == rest:
                backtrack(j - 1, w, rest, (v,) + suffix)

    for v, cost in tables[-1].items():
        if cost == target:
            backtrack(len(tables) - 1, v, cost, ())
    chains.sort()
    return chains


def _slice_costs(t: CanonicalType, p: int) -> dict[int, int]:
    """slice_costs[s] = min of <d, d> + p*s over d in P with d0 - dinf = s, dinf = 0."""
    costs: dict[int, int] = {}
    cache: dict[tuple[int, int], int] = {}
    for s in range(1, p + 1):
        total = p * s + s * s
        for mi in t.m:
            key = (mi, s)
            if key not in cache:
                cache[key] = _arm_min(mi, s)
            total += cache[key]
        costs[s] = total
    return costs


def ci_defect(t: CanonicalType, p: int) -> int:
    """Minimum of <d, d> + p*(d0 - dinf) over d in P with d0 <= p.

    The zero vector contributes 0, so the defect is never positive; it is 0
    exactly when the variety at p*h is a complete intersection.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    costs = _slice_costs(t, p)
    return min(0, min(costs.values()))


def is_complete_intersection(t: CanonicalType, p: int) -> bool:
    return ci_defect(t, p) >= 0


def is_normal(t: CanonicalType, p: int) -> bool:
    """Strict criterion: <d, d> > -p*(d0 - dinf) for every nonzero d in P, d0 <= p."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    costs = _slice_costs(t, p)
    return min(costs.values()) > 0


def component_count(t: CanonicalType, p: int) -> int:
    """Number of irreducible components, counted from the DP without materializing."""
    costs = _slice_costs(t, p)
    if min(costs.values()) < 0:
        raise ValueError(f"variety for {t} at p={p} is not a complete intersection")
    total = 1  # the zero vector
    for s, cost in costs.items():
        if cost == 0:
            block = 1
            for mi in t.m:
                block *= len(_arm_min_chains(mi, s))
            total += block * (p - s + 1)
    return total


def irreducible_components(t: CanonicalType, p: int, cap: int = DEFAULT_CAP) -> list[DimVector]:
    """All d in P with d0 <= p attaining <d, d> = -p*(d0 - dinf), zero included.

    Only defined when the variety is a complete intersection; refuses otherwise.
    Each equality vector with dinf = 0 generates translates d + c*h for
    c in [0, p - d0], all of which attain equality as well.
    """
    costs = _slice_costs(t, p)
    if min(costs.values()) < 0:
        raise ValueError(f"variety for {t} at p={p} is not a complete intersection")
    if component_count(t, p) > cap:
        raise EnumerationCapExceeded(
            f"component count {component_count(t, p)} exceeds cap {cap}")
    h = basis_h(t)
    out = [zero_vector(t)]
    for s, cost in costs.items():
        if cost != 0:
            continue
        per_arm = [_arm_min_chains(mi, s) for mi in t.m]
        for combo in _product(per_arm):
            base = DimVector(s, 0, combo)
            for c in range(p - s + 1):
                out.append(base + c * h)
    out.sort(key=lambda d: d.sort_key())
    return out


def _product(pools: list[list[tuple[int, ...]]]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _product(pools[1:]):
            yield (head,) + tail


def equality_vectors_naive(t: CanonicalType, p: int,
                           cap: int = DEFAULT_CAP) -> tuple[int, list[DimVector]]:
    """Brute-force fallback: scan all of enumerate_P and return (defect, equality set).

    Cross-checks the DP on small instances; the equality set lists every d with
    <d, d> + p*(d0 - dinf) = 0 in enumeration order.
    """
    best = 0
    eq: list[DimVector] = []
    for d in enumerate_P(t, p, cap=cap):
        val = euler_quadratic(t, d) + p * (d.d0 - d.dinf)
        if val < best:
            best = val
        if val == 0:
            eq.append(d)
    return best, eq


def boundary_component_count(t: CanonicalType, p: int) -> int:
    """Predicted component count on the boundary: 2 if lcm(m) divides p, else 1."""
    boundary, _ = classify_type(t)
    if boundary != "on_boundary":
        raise ValueError(f"type {t} is not on the boundary (sum 1/m_i = n - 4)")
    return 2 if p % t.lcm == 0 else 1


def ci_failure_witness(t: CanonicalType) -> tuple[int, DimVector]:
    """The tight case of the quadratic bound at level p = prod(m).

    p is divisible by every arm length, so the averaged coordinates
    (m_i - j) * p / m_i are integers; the vector lies in P, is nonzero, and
    satisfies <d, d> = -delta * p * (d0 - dinf) exactly.  On the boundary it
    violates the strict (normality) criterion, below the boundary also the
    weak (complete-intersection) one; above the boundary no violation exists
    and the vector is merely the extremal case.
    """
    p = t.product
    arms = tuple(tuple((mi - j) * p // mi for j in range(1, mi)) for mi in t.m)
    return p, DimVector(p, 0, arms)


@dataclass(frozen=True)
class GeometryReport:
    """Decision summary for the variety at p*h."""

    p: int
    is_ci: bool
    is_normal: bool
    components: tuple[DimVector, ...]
    defect: int

    @classmethod
    def compute(cls, t: CanonicalType, p: int, cap: int = DEFAULT_CAP) -> "GeometryReport":
        defect = ci_defect(t, p)
        ci = defect >= 0
        normal = is_normal(t, p)
        comps = tuple(irreducible_components(t, p, cap=cap)) if ci else ()
        return cls(p=p, is_ci=ci, is_normal=normal, components=comps, defect=defect)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "is_ci": self.is_ci,
            "is_normal": self.is_normal,
            "defect": self.defect,
            "components": [format_dim_vector(d) for d in self.components],
        }
