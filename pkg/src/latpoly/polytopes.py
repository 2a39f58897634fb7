"""Polytopes in vertex representation, lattice point counting and Ehrhart polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .linalg import interpolate_polynomial, poly_eval, rank
from .lp import ConvexBody, membership


class NotLatticePolytopeError(ValueError):
    pass


class DegenerateBodyError(ValueError):
    pass


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite point set.  Redundant points are allowed."""

    vertices: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        seen = {}
        for v in self.vertices:
            v = tuple(Fraction(x) for x in v)
            seen.setdefault(v, None)
        pts = tuple(seen)
        if not pts:
            raise ValueError("a polytope needs at least one point")
        if len({len(v) for v in pts}) != 1:
            raise ValueError("points of different dimensions")
        object.__setattr__(self, "vertices", pts)

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "VPolytope":
        return cls(tuple(tuple(p) for p in points))

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @property
    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    @cached_property
    def body(self) -> ConvexBody:
        return ConvexBody([(1, self.vertices)], self.ambient_dim)

    def __contains__(self, x) -> bool:
        return membership(self.vertices, x)

    def same_set(self, other: "VPolytope") -> bool:
        """True iff both point lists have the same convex hull."""
        return (all(v in other for v in self.vertices)
                and all(v in self for v in other.vertices))

    def integer_vertices(self) -> list[tuple[int, ...]]:
        if not self.is_lattice:
            raise NotLatticePolytopeError("not a lattice polytope")
        return [tuple(int(x) for x in v) for v in self.vertices]


@dataclass(frozen=True)
class EhrhartPoly:
    """Coefficients ``g_0..g_d`` of ``k -> G(kP) = sum g_i k^i``."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __call__(self, k) -> Fraction:
        return poly_eval(self.coefficients, k)


def affine_dim(P: VPolytope) -> int:
    base = P.vertices[0]
    return rank([[a - b for a, b in zip(v, base)] for v in P.vertices[1:]]) if len(P.vertices) > 1 else 0


def is_full_dimensional(P: VPolytope) -> bool:
    return affine_dim(P) == P.ambient_dim


def is_symmetric(P: VPolytope) -> bool:
    """True iff ``P = -P``."""
    return all(tuple(-x for x in v) in P for v in P.vertices)


def count_lattice_points(P: VPolytope, max_box: Optional[int] = None) -> int:
    """``#(P ∩ Z^n)`` by an exact fibre scan of the integer bounding box.

    The outer coordinates are enumerated, and the innermost one is counted
    from its exact LP range, so the cost is proportional to the number of
    lattice points in the projection that drops the widest coordinate.
    ``max_box`` caps the number of integer points in the bounding box.
    """
    return P.body.count_lattice_points(1, max_box)


def lattice_points(P: VPolytope, max_box: Optional[int] = None) -> list[tuple[int, ...]]:
    return P.body.lattice_points(1, max_box)


def dilate(P: VPolytope, k) -> VPolytope:
    return VPolytope(tuple(tuple(k * x for x in v) for v in P.vertices))


def ehrhart(P: VPolytope, max_box: Optional[int] = None) -> EhrhartPoly:
    """Ehrhart polynomial by counting ``G(kP)`` at ``k = 0..n`` and interpolating."""
    if not P.is_lattice:
        raise NotLatticePolytopeError("not a lattice polytope")
    n = P.ambient_dim
    if affine_dim(P) != n:
        raise DegenerateBodyError("polytope is not full-dimensional")
    counts = [(k, P.body.count_lattice_points(k, max_box)) for k in range(n + 1)]
    coeffs = interpolate_polynomial(counts, n)
    if coeffs[0] != 1:
        raise ArithmeticError(f"constant Ehrhart coefficient is {coeffs[0]}, expected 1")
    return EhrhartPoly(tuple(coeffs))


def volume(P: VPolytope, max_box: Optional[int] = None) -> Fraction:
    """Euclidean volume of a full-dimensional lattice polytope (leading Ehrhart coefficient)."""
    return ehrhart(P, max_box).coefficients[-1]


def project(P: VPolytope, keep: int) -> VPolytope:
    """Image under the map forgetting all but the first ``keep`` coordinates."""
    if not 1 <= keep <= P.ambient_dim:
        raise ValueError("keep must lie in 1..n")
    return VPolytope(tuple(v[:keep] for v in P.vertices))


def symmetrize(P: VPolytope) -> VPolytope:
    """``conv(P, -P)``."""
    return VPolytope(P.vertices + tuple(tuple(-x for x in v) for v in P.vertices))


def hull_vertices(P: VPolytope) -> list[tuple[Fraction, ...]]:
    """The points of ``P`` that are vertices of its convex hull, in input order."""
    pts = list(P.vertices)
    if len(pts) == 1:
        return pts
    return [v for i, v in enumerate(pts) if not membership(pts[:i] + pts[i + 1:], v)]


def difference_gauge_view(P: VPolytope) -> ConvexBody:
    """Gauge oracle of ``DP = P - P`` (two LP blocks, no vertex list of DP)."""
    if not is_full_dimensional(P):
        raise DegenerateBodyError("difference body of a lower-dimensional polytope")
    return ConvexBody([(1, P.vertices), (-1, P.vertices)], P.ambient_dim)


def symmetric_gauge_view(P: VPolytope) -> ConvexBody:
    """Gauge oracle of a 0-symmetric full-dimensional polytope."""
    if not is_full_dimensional(P):
        raise DegenerateBodyError("symmetric body is not full-dimensional")
    if not is_symmetric(P):
        raise ValueError("polytope is not 0-symmetric")
    return ConvexBody([(1, P.vertices)], P.ambient_dim)


def cube(n: int, lo: int = 0, hi: int = 1) -> VPolytope:
    """``[lo, hi]^n``."""
    pts = [()]
    for _ in range(n):
        pts = [p + (x,) for p in pts for x in (lo, hi)]
    return VPolytope.from_points(pts)


def cross_polytope(n: int) -> VPolytope:
    pts = []
    for i in range(n):
        for s in (1, -1):
            pts.append(tuple(s * int(i == j) for j in range(n)))
    return VPolytope.from_points(pts)


def simplex(n: int) -> VPolytope:
    """``conv{0, e_1, ..., e_n}``."""
    return VPolytope.from_points([(0,) * n] + [tuple(int(i == j) for j in range(n)) for i in range(n)])


def cyclic_polytope(ts: Sequence[int], n: int) -> VPolytope:
    """Convex hull of the moment-curve points ``(t, t^2, ..., t^n)``."""
    return VPolytope.from_points([tuple(t ** e for e in range(1, n + 1)) for t in ts])
