"""Combinatorial model of the exceptional tubes.

The regular simples of the i-th exceptional tube are indexed by
j in [0, m_i - 1] with dimension vectors e_{i,j}.  A tube indecomposable is
determined by its arm, socle index and quasi-length; composition factors read
socle upward with indices increasing mod m_i.  Hom dimensions between tube
modules follow the serial-category rule: maps are determined by a common
"middle" segment that is a quotient of the source and a submodule of the
target, one dimension per admissible segment length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .forms import CanonicalType, DimVector, basis_e, zero_vector


@dataclass(frozen=True)
class TubeIndec:
    """Indecomposable in an exceptional tube: arm index, socle index, quasi-length."""

    arm: int
    socle: int
    qlen: int

    def __post_init__(self) -> None:
        if self.arm < 1:
            raise ValueError(f"arm index must be >= 1, got {self.arm}")
        if self.socle < 0:
            raise ValueError(f"socle index must be >= 0, got {self.socle}")
        if self.qlen < 1:
            raise ValueError(f"quasi-length must be >= 1, got {self.qlen}")

    def check_against(self, t: CanonicalType) -> None:
        mi = t.arm_length(self.arm)
        if self.socle >= mi:
            raise ValueError(f"socle index {self.socle} out of range for arm "
                             f"{self.arm} of {t}")

    def sort_key(self) -> tuple[int, int, int]:
        return (self.arm, self.socle, self.qlen)

    def __str__(self) -> str:
        return f"{self.arm}:{self.socle}:{self.qlen}"


def parse_tube_indec(text: str) -> TubeIndec:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"malformed tube module {text!r}")
    i, a, l = (int(x) for x in parts)
    return TubeIndec(i, a, l)


@dataclass(frozen=True)
class RegularModuleClass:
    """Isomorphism class of a direct sum of exceptional-tube indecomposables."""

    members: tuple[TubeIndec, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted(self.members, key=TubeIndec.sort_key))
        object.__setattr__(self, "members", canon)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "+".join(str(x) for x in self.members)


def parse_regular_class(text: str) -> RegularModuleClass:
    if not text:
        return RegularModuleClass(())
    return RegularModuleClass(tuple(parse_tube_indec(part) for part in text.split("+")))


ClassLike = Union[TubeIndec, RegularModuleClass, Iterable[TubeIndec]]


def _members(xs: ClassLike) -> tuple[TubeIndec, ...]:
    if isinstance(xs, TubeIndec):
        return (xs,)
    if isinstance(xs, RegularModuleClass):
        return xs.members
    return tuple(xs)


def top_index(t: CanonicalType, x: TubeIndec) -> int:
    """Index of the top composition factor: socle + qlen - 1 mod the tube rank."""
    x.check_against(t)
    return (x.socle + x.qlen - 1) % t.arm_length(x.arm)


def dim_vector(t: CanonicalType, xs: ClassLike) -> DimVector:
    """Sum of e_{i,j} over all composition factors of all members."""
    total = zero_vector(t)
    for x in _members(xs):
        x.check_against(t)
        mi = t.arm_length(x.arm)
        for u in range(x.qlen):
            total = total + basis_e(t, x.arm, (x.socle + u) % mi)
    return total


def hom_dim_tube(t: CanonicalType, x: TubeIndec, y: TubeIndec) -> int:
    """dim Hom between two tube indecomposables.

    Zero across distinct tubes.  Within a tube of rank m, a map exists for each
    segment length j in [1, min(qlen_x, qlen_y)] such that the top-j quotient
    of x equals the bottom-j submodule of y, i.e. j = socle_x + qlen_x - socle_y
    mod m.
    """
    x.check_against(t)
    y.check_against(t)
    if x.arm != y.arm:
        return 0
    mi = t.arm_length(x.arm)
    residue = (x.socle + x.qlen - y.socle) % mi
    count = 0
    for j in range(1, min(x.qlen, y.qlen) + 1):
        if j % mi == residue:
            count += 1
    return count


def hom_dim_regular(t: CanonicalType, xs: ClassLike, ys: ClassLike) -> int:
    """Bilinear extension of hom_dim_tube over direct sums."""
    return sum(hom_dim_tube(t, x, y) for x in _members(xs) for y in _members(ys))


def end_dim(t: CanonicalType, xs: ClassLike) -> int:
    return hom_dim_regular(t, xs, xs)


def hom_to_simple_nonzero(t: CanonicalType, xs: ClassLike, i: int, j: int) -> bool:
    """Whether some member of the class maps onto the j-th simple of tube i."""
    mi = t.arm_length(i)
    if not 0 <= j <= mi - 1:
        raise ValueError(f"simple index {j} out of range [0, {mi - 1}] on arm {i}")
    return any(x.arm == i and top_index(t, x) == j for x in _members(xs))
