"""Exact rational polytope geometry.

Halfspace-presented convex polytopes over the rationals, with membership
tests, brute-force vertex enumeration, and lattice-point enumeration.
Every coordinate is a `fractions.Fraction`; no floats enter this module,
so all predicates (including strict ones on facet boundaries) are decided
exactly.

All types are immutable after construction and all operations are pure
functions, so everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from typing import Iterable, Sequence

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def intvec(entries: Iterable[int]) -> IntVec:
    return tuple(int(e) for e in entries)


def ratvec(entries: Iterable) -> RatVec:
    return tuple(Fraction(e) for e in entries)


def dot(a: Sequence, b: Sequence) -> Fraction | int:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def negated(v: IntVec) -> IntVec:
    return tuple(-e for e in v)


def primitive(v: Iterable[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries, preserving signs."""
    w = intvec(v)
    g = reduce(math.gcd, (abs(e) for e in w), 0)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(e // g for e in w)


@dataclass(frozen=True)
class Halfspace:
    """Closed halfspace {x : <normal, x> >= offset}.

    The normal is stored primitive (entry gcd 1); non-primitive input is
    rescaled together with the offset, which leaves the point set unchanged.
    """

    normal: IntVec
    offset: Fraction

    def __init__(self, normal: Iterable[int], offset) -> None:
        w = intvec(normal)
        g = reduce(math.gcd, (abs(e) for e in w), 0)
        if g == 0:
            raise ValueError("halfspace normal must be nonzero")
        object.__setattr__(self, "normal", tuple(e // g for e in w))
        object.__setattr__(self, "offset", Fraction(offset) / g)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def slack(self, x: Sequence) -> Fraction:
        return dot(self.normal, x) - self.offset

    def holds(self, x: Sequence, strict: bool = False) -> bool:
        s = self.slack(x)
        return s > 0 if strict else s >= 0

    def negated(self) -> "Halfspace":
        return Halfspace(negated(self.normal), -self.offset)


class HPolytope:
    """Bounded intersection of closed halfspaces in Q^d.

    Boundedness is verified eagerly at construction (via the recession
    cone), because downstream lattice enumeration silently misbehaves on
    unbounded input.  Duplicate halfspaces are rejected; redundant but
    non-identical ones are permitted (see `remove_redundant`).
    """

    __slots__ = ("halfspaces", "dim", "_vertices")

    def __init__(self, halfspaces: Sequence[Halfspace], dim: int) -> None:
        hs = tuple(halfspaces)
        if dim < 1:
            raise ValueError("dimension must be positive")
        for h in hs:
            if h.dim != dim:
                raise ValueError(f"halfspace dimension {h.dim} != polytope dimension {dim}")
        seen: set[tuple[IntVec, Fraction]] = set()
        for h in hs:
            key = (h.normal, h.offset)
            if key in seen:
                raise ValueError(f"duplicate halfspace {h.normal} >= {h.offset}")
            seen.add(key)
        if not _is_bounded([h.normal for h in hs], dim):
            raise ValueError("unbounded")
        self.halfspaces = hs
        self.dim = dim
        self._vertices: tuple[RatVec, ...] | None = None

    def __repr__(self) -> str:
        return f"HPolytope(dim={self.dim}, facets={len(self.halfspaces)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HPolytope)
            and self.dim == other.dim
            and self.halfspaces == other.halfspaces
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.halfspaces))

    def _check_dim(self, x: Sequence) -> None:
        if len(x) != self.dim:
            raise ValueError(f"point dimension {len(x)} != polytope dimension {self.dim}")

    def contains(self, x: Sequence) -> bool:
        self._check_dim(x)
        return all(h.holds(x) for h in self.halfspaces)

    def interior_contains(self, x: Sequence) -> bool:
        self._check_dim(x)
        return all(h.holds(x, strict=True) for h in self.halfspaces)

    def facet_relint_contains(self, facet_index: int, w: Sequence) -> bool:
        """Whether w lies on the given halfspace boundary with every other
        listed halfspace strict (each listed halfspace is treated as a
        candidate facet)."""
        if not 0 <= facet_index < len(self.halfspaces):
            raise IndexError(f"facet index {facet_index} out of range")
        self._check_dim(w)
        if self.halfspaces[facet_index].slack(w) != 0:
            return False
        return all(
            h.holds(w, strict=True)
            for i, h in enumerate(self.halfspaces)
            if i != facet_index
        )

    def vertices(self) -> tuple[RatVec, ...]:
        """Exact vertex set, by solving every d-subset of tight halfspaces.

        Complete for bounded polytopes of any affine dimension: a point is
        extreme iff its tight normals span Q^d, hence some independent
        d-subset pins it down.  Sorted lexicographically.
        """
        if self._vertices is None:
            found: set[RatVec] = set()
            for subset in combinations(self.halfspaces, self.dim):
                x = solve_square([h.normal for h in subset], [h.offset for h in subset])
                if x is not None and all(h.holds(x) for h in self.halfspaces):
                    found.add(x)
            self._vertices = tuple(sorted(found))
        return self._vertices

    def bounding_box(self) -> list[tuple[Fraction, Fraction]] | None:
        """Per-coordinate [min, max] over the vertex set; None when empty."""
        verts = self.vertices()
        if not verts:
            return None
        return [
            (min(v[i] for v in verts), max(v[i] for v in verts))
            for i in range(self.dim)
        ]


def lattice_points(
    polytope: HPolytope, strict: Sequence[bool] | None = None
) -> list[IntVec]:
    """Integer points satisfying each halfspace at its declared strictness.

    Scans the integer bounding box derived from the vertex enumeration, so
    the polytope must be bounded (guaranteed at construction).  The result
    is in lexicographic order.
    """
    if strict is None:
        strict = [False] * len(polytope.halfspaces)
    if len(strict) != len(polytope.halfspaces):
        raise ValueError("one strictness flag per halfspace required")
    box = polytope.bounding_box()
    if box is None:
        return []
    ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in box]
    checks = list(zip(polytope.halfspaces, strict))
    out: list[IntVec] = []
    for pt in product(*ranges):
        if all(h.holds(pt, strict=s) for h, s in checks):
            out.append(pt)
    return out


def integer_bounding_box(polytope: HPolytope) -> list[tuple[int, int]]:
    """The integer bounds actually scanned by `lattice_points`; empty when
    the polytope has no vertices."""
    box = polytope.bounding_box()
    if box is None:
        return []
    return [(math.ceil(lo), math.floor(hi)) for lo, hi in box]


def is_smooth_vertex(polytope: HPolytope, v: Sequence) -> bool:
    """Whether a vertex is simple (exactly d tight halfspaces) with the
    tight primitive normals forming a determinant-±1 matrix.

    Assumes the listed halfspaces are irredundant; a redundant halfspace
    tight at v would inflate the valence count.
    """
    x = ratvec(v)
    if x not in polytope.vertices():
        raise ValueError(f"{v} is not a vertex")
    tight = [h.normal for h in polytope.halfspaces if dot(h.normal, x) == h.offset]
    if len(tight) != polytope.dim:
        return False
    return abs(determinant(tight)) == 1


def remove_redundant(polytope: HPolytope) -> HPolytope:
    """Drop listed halfspaces that do not define facets.

    LP-free: a halfspace is facet-defining iff its tight vertex set has
    affine rank d-1.  Intended for full-dimensional polytopes.
    """
    verts = polytope.vertices()
    keep = []
    for h in polytope.halfspaces:
        tight = [v for v in verts if dot(h.normal, v) == h.offset]
        if tight and affine_rank(tight) == polytope.dim - 1:
            keep.append(h)
    return HPolytope(keep, polytope.dim)


# -- exact linear algebra -------------------------------------------------

def solve_square(rows: Sequence[Sequence], rhs: Sequence) -> RatVec | None:
    """Solve the square system rows @ x = rhs exactly; None when singular."""
    n = len(rows)
    a = [[Fraction(e) for e in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [e * inv for e in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [e - f * p for e, p in zip(a[r], a[col])]
    return tuple(a[r][n] for r in range(n))


def matrix_rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    a = [[Fraction(e) for e in row] for row in rows]
    m, n = len(a), len(a[0])
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [e * inv for e in a[rank]]
        for r in range(m):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [e - f * p for e, p in zip(a[r], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def nullspace_direction(rows: Sequence[Sequence], dim: int) -> RatVec | None:
    """A spanning vector of the kernel when the nullity is exactly one."""
    a = [[Fraction(e) for e in row] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(dim):
        pivot = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [e * inv for e in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [e - f * p for e, p in zip(a[r], a[rank])]
        pivots.append(col)
        rank += 1
    if rank != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    x = [Fraction(0)] * dim
    x[free] = Fraction(1)
    for r, col in enumerate(pivots):
        x[col] = -a[r][free]
    return tuple(x)


def determinant(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    a = [[Fraction(e) for e in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [e - f * p for e, p in zip(a[r], a[col])]
    return det


def affine_rank(points: Sequence[RatVec]) -> int:
    """Dimension of the affine hull of the given points."""
    if not points:
        return -1
    base = points[0]
    diffs = [tuple(p[i] - base[i] for i in range(len(base))) for p in points[1:]]
    return matrix_rank(diffs)


def _is_bounded(normals: Sequence[IntVec], dim: int) -> bool:
    """Decide whether {x : <n_i, x> >= c_i} has trivial recession cone.

    The cone {d : <n_i, d> >= 0} is nontrivial iff either the normals fail
    to span (a lineality direction exists) or, when pointed, it carries an
    extreme ray, which is pinned by some rank-(d-1) subset of (d-1) normals.
    """
    unique = list(dict.fromkeys(normals))
    if matrix_rank(unique) < dim:
        return False
    normset = set(unique)
    if all(negated(n) in normset for n in unique):
        # every pairing is forced to zero, so the cone is the (trivial) kernel
        return True
    for subset in combinations(unique, dim - 1):
        r = nullspace_direction(subset, dim)
        if r is None:
            continue
        if all(dot(n, r) >= 0 for n in unique):
            return False
        neg = tuple(-e for e in r)
        if all(dot(n, neg) >= 0 for n in unique):
            return False
    return True
