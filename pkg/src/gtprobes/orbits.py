"""Regular SU(n) coadjoint orbits and their Gelfand-Tsetlin polytopes.

Coordinates on the polytope are the eigenvalue functions of leading
principal minors, indexed by (level k, position j) with 1 <= j <= k <= n-1
and ordered by descending level, ascending position.  For n = 3 that order
is

    (x_1, x_2, x_3) = (level-2 top eigenvalue, level-2 bottom eigenvalue,
                       level-1 eigenvalue),

which turns the interlacing system into  a >= x_1 >= b,  b >= x_2 >= -a-b,
x_1 >= x_3 >= x_2  for an orbit through diag(a, b, -a-b).  All formulas
below assume this order; it is part of the public contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .geometry import Halfspace, HPolytope, RatVec, ratvec, remove_redundant


class GTIndex(NamedTuple):
    """Position of one minor eigenvalue: level k in 1..n-1, slot j in 1..k."""

    k: int
    j: int


@dataclass(frozen=True)
class OrbitSpec:
    """A regular SU(n) orbit: strictly decreasing rational eigenvalues with
    zero sum."""

    n: int
    lam: RatVec

    def __init__(self, n: int, lam: Iterable) -> None:
        values = ratvec(lam)
        if n < 2:
            raise ValueError("n must be at least 2")
        if len(values) != n:
            raise ValueError(f"expected {n} eigenvalues, got {len(values)}")
        if any(values[i] <= values[i + 1] for i in range(n - 1)):
            raise ValueError("eigenvalues must be strictly decreasing (regular orbit)")
        if sum(values) != 0:
            raise ValueError("eigenvalues must sum to zero")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lam", values)

    @classmethod
    def from_eigenvalues(cls, lam: Iterable) -> "OrbitSpec":
        values = ratvec(lam)
        return cls(len(values), values)

    @property
    def dim(self) -> int:
        """Dimension n(n-1)/2 of the Gelfand-Tsetlin coordinate space."""
        return self.n * (self.n - 1) // 2

    @property
    def a(self) -> Fraction:
        return self.lam[0]

    @property
    def b(self) -> Fraction:
        return self.lam[1]

    def require_su3(self) -> None:
        if self.n != 3:
            raise ValueError(f"operation requires n = 3, got n = {self.n}")


def gt_indices(n: int) -> tuple[GTIndex, ...]:
    """Coordinate order: levels n-1 down to 1, positions ascending."""
    return tuple(GTIndex(k, j) for k in range(n - 1, 0, -1) for j in range(1, k + 1))


@dataclass(frozen=True)
class GTPoint:
    """A point of the Gelfand-Tsetlin coordinate space as an index map."""

    n: int
    values: Mapping[GTIndex, Fraction]

    def __post_init__(self) -> None:
        expected = set(gt_indices(self.n))
        got = {GTIndex(*key) for key in self.values}
        if got != expected:
            raise ValueError("incomplete Gelfand-Tsetlin index set")

    @classmethod
    def from_vector(cls, n: int, vec: Sequence) -> "GTPoint":
        entries = ratvec(vec)
        idx = gt_indices(n)
        if len(entries) != len(idx):
            raise ValueError(f"expected {len(idx)} coordinates, got {len(entries)}")
        return cls(n, dict(zip(idx, entries)))

    def vector(self) -> RatVec:
        return tuple(Fraction(self.values[i]) for i in gt_indices(self.n))


def build_gt_polytope(orbit: OrbitSpec) -> HPolytope:
    """Cut out the Gelfand-Tsetlin polytope from the interlacing system.

    One halfspace per interlacing inequality between consecutive levels,
    with the top level fixed to the orbit eigenvalues; redundant halfspaces
    (none arise for regular orbits) are removed.
    """
    n = orbit.n
    pos = {idx: i for i, idx in enumerate(gt_indices(n))}
    d = orbit.dim
    halfspaces: list[Halfspace] = []

    def unit(index: GTIndex, sign: int) -> list[int]:
        e = [0] * d
        e[pos[index]] = sign
        return e

    for level in range(1, n):
        for j in range(1, level + 1):
            # upper neighbour >= this entry
            if level + 1 == n:
                halfspaces.append(
                    Halfspace(unit(GTIndex(level, j), -1), -orbit.lam[j - 1])
                )
            else:
                normal = unit(GTIndex(level + 1, j), 1)
                normal[pos[GTIndex(level, j)]] = -1
                halfspaces.append(Halfspace(normal, 0))
            # this entry >= lower-right neighbour
            if level + 1 == n:
                halfspaces.append(Halfspace(unit(GTIndex(level, j), 1), orbit.lam[j]))
            else:
                normal = unit(GTIndex(level, j), 1)
                normal[pos[GTIndex(level + 1, j + 1)]] = -1
                halfspaces.append(Halfspace(normal, 0))
    return remove_redundant(HPolytope(halfspaces, d))


SU3_FACET_NAMES = ("F1", "F2", "F3", "F4", "F5", "F6")


def su3_facet_catalog(orbit: OrbitSpec) -> list[tuple[str, Halfspace]]:
    """The six facets of the SU(3) polytope in a fixed order.

    F1: x_1 <= a, F2: x_1 >= b, F3: x_2 <= b, F4: x_2 >= -a-b,
    F5: x_3 <= x_1, F6: x_3 >= x_2, each as its primitive inward normal.
    """
    orbit.require_su3()
    a, b = orbit.a, orbit.b
    return [
        ("F1", Halfspace((-1, 0, 0), -a)),
        ("F2", Halfspace((1, 0, 0), b)),
        ("F3", Halfspace((0, -1, 0), -b)),
        ("F4", Halfspace((0, 1, 0), -a - b)),
        ("F5", Halfspace((1, 0, -1), 0)),
        ("F6", Halfspace((0, -1, 1), 0)),
    ]


def su3_polytope(orbit: OrbitSpec) -> HPolytope:
    """The SU(3) polytope with halfspaces in catalog order F1..F6."""
    return HPolytope([h for _, h in su3_facet_catalog(orbit)], 3)


def diagonal_projection(orbit: OrbitSpec, point: GTPoint | Sequence) -> RatVec:
    """Map Gelfand-Tsetlin coordinates to the matrix diagonal.

    Entry k is the level-k coordinate sum minus the level-(k-1) sum, with
    the level-n sum equal to the (zero) eigenvalue sum; the result always
    sums to zero exactly.
    """
    vec = point.vector() if isinstance(point, GTPoint) else ratvec(point)
    n = orbit.n
    idx = gt_indices(n)
    if len(vec) != len(idx):
        raise ValueError(f"expected {len(idx)} coordinates, got {len(vec)}")
    values = dict(zip(idx, vec))
    sums = [Fraction(0)]
    for k in range(1, n):
        sums.append(sum(values[GTIndex(k, j)] for j in range(1, k + 1)))
    sums.append(Fraction(0))  # full trace
    return tuple(sums[k] - sums[k - 1] for k in range(1, n + 1))


@dataclass(frozen=True)
class WSegment:
    """The x_1 interval over which (x_1, -x_1, 0) stays in the SU(3)
    polytope; the open interval is the part in the interior."""

    lo: Fraction
    hi: Fraction

    def contains(self, x1: Fraction, strict: bool = False) -> bool:
        if strict:
            return self.lo < x1 < self.hi
        return self.lo <= x1 <= self.hi

    def is_empty(self) -> bool:
        return self.lo > self.hi


def w_segment(orbit: OrbitSpec) -> WSegment:
    """Intersection of the zero-diagonal locus with the SU(3) polytope.

    Points with zero diagonal projection are exactly (x_1, -x_1, 0); the
    membership constraints collapse to max(b, -b, 0) <= x_1 <= min(a, a+b).
    """
    orbit.require_su3()
    a, b = orbit.a, orbit.b
    return WSegment(lo=max(b, -b, Fraction(0)), hi=min(a, a + b))


def w_point(x1) -> RatVec:
    """The point (x_1, -x_1, 0) on the zero-projection segment."""
    x = Fraction(x1)
    return (x, -x, Fraction(0))
