"""Lattice-face polytopes: the defining check, Liu's volume formula and minima comparisons.

A polytope is lattice-face when, for every set ``U`` of vertices spanning a
``k``-dimensional affine space (``k < n``), the integer points of ``aff(U)``
map onto ``Z^k`` under the projection to the first ``k`` coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional

from .conjecture import sigma
from .linalg import nullspace, rank, smith_invariants, solve_affine_lattice
from .minima import MinimaResult, successive_minima
from .polytopes import (DegenerateBodyError, VPolytope, affine_dim, ehrhart, hull_vertices,
                        is_full_dimensional, is_symmetric, project, symmetric_gauge_view,
                        symmetrize)

VERTEX_CAP = 12
MAX_DIM = 4

NO_INTEGER_POINT = "no-integer-point"
PROJECTION_NOT_ONTO = "projection-not-onto"
BASE_POINT_NONINTEGRAL = "base-point-nonintegral"


class NotLatticeFaceError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeFaceReport:
    is_lattice_face: bool
    failing_subset: Optional[tuple[tuple[Fraction, ...], ...]] = None
    failure_kind: Optional[str] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.is_lattice_face != (self.failing_subset is None):
            raise ValueError("failing_subset must be present iff the check failed")
        if (self.failure_kind is None) != self.is_lattice_face:
            raise ValueError("failure_kind must accompany a failing subset")


def _affine_failure(U) -> Optional[str]:
    """Failure kind of one vertex set spanning a ``k``-flat, or None if it passes."""
    base = U[0]
    n = len(base)
    dirs = [[a - b for a, b in zip(u, base)] for u in U[1:]]
    k = rank(dirs) if dirs else 0
    if k == 0:
        return None if all(x.denominator == 1 for x in base) else BASE_POINT_NONINTEGRAL
    # aff(U) = {x : A x = A base}, A an integer basis of the orthogonal complement
    A = [list(a) for a in nullspace(dirs, n)]
    b = [sum(a * x for a, x in zip(row, base)) for row in A]
    if any(x.denominator != 1 for x in b):
        return NO_INTEGER_POINT
    sol = solve_affine_lattice(A, [int(x) for x in b])
    if sol is None:
        return NO_INTEGER_POINT
    _, lattice = sol
    assert lattice.rank == k
    top = [list(v[:k]) for v in lattice.vectors]
    if rank(top) < k or any(d != 1 for d in smith_invariants(top)):
        return PROJECTION_NOT_ONTO
    return None


def _candidate_subsets(verts, n, exhaustive):
    if exhaustive:
        for size in range(1, len(verts) + 1):
            for U in combinations(verts, size):
                if affine_dim(VPolytope(U)) < n:
                    yield U
        return
    for k in range(n):
        for U in combinations(verts, k + 1):
            if k == 0 or affine_dim(VPolytope(U)) == k:
                yield U


def check_lattice_face(P: VPolytope, cap: int = VERTEX_CAP, exhaustive: bool = False) -> LatticeFaceReport:
    """Check the lattice-face property on the hull vertices of ``P``.

    By default only affinely independent vertex sets are tested, by
    increasing dimension and in lexicographic order of vertex positions.
    With ``exhaustive=True`` every vertex set spanning a proper flat is
    tested, ordered by size.
    """
    n = P.ambient_dim
    if n > MAX_DIM:
        raise ValueError(f"ambient dimension {n} exceeds {MAX_DIM}")
    verts = hull_vertices(P)
    if len(verts) > cap:
        raise ValueError(f"vertex cap: {len(verts)} vertices exceed the cap {cap}")
    for U in _candidate_subsets(verts, n, exhaustive):
        kind = _affine_failure(U)
        if kind is not None:
            k = affine_dim(VPolytope(U))
            return LatticeFaceReport(False, tuple(U), kind, k)
    return LatticeFaceReport(True)


def _require_lattice_face(P: VPolytope) -> VPolytope:
    """The polytope on its hull vertices, after checking it is lattice-face."""
    report = check_lattice_face(P)
    if not report.is_lattice_face:
        raise NotLatticeFaceError(f"not lattice-face ({report.failure_kind})")
    pruned = VPolytope(tuple(hull_vertices(P)))
    assert pruned.is_lattice  # lattice-face polytopes are lattice polytopes
    return pruned


class LiuRow(NamedTuple):
    i: int
    g: Fraction
    volume: Fraction
    equal: bool


def verify_liu(P: VPolytope) -> list[LiuRow]:
    """Compare ``g_i(P)`` with the volume of the projection to the first ``i`` coordinates."""
    if not is_full_dimensional(P):
        raise DegenerateBodyError("polytope is not full-dimensional")
    P = _require_lattice_face(P)
    g = ehrhart(P)
    rows = [LiuRow(0, g[0], Fraction(1), g[0] == 1)]
    for i in range(1, P.ambient_dim + 1):
        vol = ehrhart(project(P, i)).coefficients[-1]
        rows.append(LiuRow(i, g[i], vol, g[i] == vol))
    return rows


class ProjectionMinimaRow(NamedTuple):
    i: int
    j: int
    projected: Fraction
    original: Fraction
    holds: bool


def check_projection_minima(P: VPolytope, require_lattice_face: bool = True) -> list[ProjectionMinimaRow]:
    """Rows ``lambda_j(projection to R^i) >= lambda_j(P)`` for ``1 <= j <= i <= n``.

    With ``require_lattice_face=False`` the comparison is also run on other
    symmetric polytopes, where it may fail.
    """
    if not is_symmetric(P):
        raise ValueError("polytope is not 0-symmetric")
    if require_lattice_face:
        _require_lattice_face(P)
    full = successive_minima(symmetric_gauge_view(P))
    rows = []
    for i in range(1, P.ambient_dim + 1):
        proj = full if i == P.ambient_dim else successive_minima(symmetric_gauge_view(project(P, i)))
        for j in range(i):
            a, b = proj.lambdas[j], full.lambdas[j]
            rows.append(ProjectionMinimaRow(i, j + 1, a, b, a >= b))
    return rows


class TheoremRow(NamedTuple):
    i: int
    g: Fraction
    bound: Fraction
    holds: bool


@dataclass(frozen=True)
class LatfaceTheoremReport:
    part: str  # "symmetric" or "vertex-at-origin"
    minima: MinimaResult
    rows: tuple[TheoremRow, ...]

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.rows)


def check_latface_theorem(P: VPolytope) -> LatfaceTheoremReport:
    """Bound ``g_i(P)`` by ``sigma_i(2/lambda_1, ..., 2/lambda_n)``.

    For symmetric ``P`` the minima are those of ``P`` itself; since
    ``lambda(P - P) = lambda(P)/2`` this is ``sigma_i`` on ``1/lambda_j(P - P)``.
    When the origin is a vertex the minima of ``conv(P, -P)`` are used.
    """
    if not is_full_dimensional(P):
        raise DegenerateBodyError("polytope is not full-dimensional")
    zero = (Fraction(0),) * P.ambient_dim
    if is_symmetric(P):
        part, body = "symmetric", P
    elif zero in hull_vertices(P):
        part, body = "vertex-at-origin", symmetrize(P)
    else:
        raise ValueError("polytope is neither 0-symmetric nor has the origin as a vertex")
    pruned = _require_lattice_face(P)
    minima = successive_minima(symmetric_gauge_view(body))
    values = [2 / lam for lam in minima.lambdas]
    g = ehrhart(pruned)
    rows = []
    for i in range(P.ambient_dim + 1):
        s = sigma(values, i)
        rows.append(TheoremRow(i, g[i], s, g[i] <= s))
    return LatfaceTheoremReport(part, minima, tuple(rows))


def p_t_polytope(t: int) -> VPolytope:
    """``conv{±(t-1, 1), ±(t, 1)}``, symmetric but not lattice-face for ``t >= 2``."""
    return VPolytope.from_points([(t - 1, 1), (1 - t, -1), (t, 1), (-t, -1)])
