"""Exact rational linear programming.

A dense two-phase simplex with Bland's rule and fraction-free integer
pivoting, plus the convex-body machinery built on top of it: membership,
gauge (Minkowski functional) evaluation and coordinate ranges of fibres,
which is what the
lattice point scans in :mod:`latpoly.polytopes` and :mod:`latpoly.minima`
consume.

Most LPs issued by a lattice point scan share their constraint matrix and
objective and differ only in the right-hand side.  :class:`ParametricLP`
keeps the optimal bases it has seen; a cached basis ``B`` is reused
whenever ``B^-1 b >= 0``, which certifies optimality without pivoting
(reduced costs do not depend on ``b``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, lcm, prod
from typing import Iterator, Optional, Sequence

from .linalg import identity, inverse, rank


class LpStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """Optimize ``objective . x`` subject to ``rows[i] . x  senses[i]  rhs[i]``.

    ``free[j]`` marks variable ``j`` as unbounded below; all other variables
    are nonnegative.
    """

    objective: Sequence
    rows: Sequence[Sequence]
    senses: Sequence[str]
    rhs: Sequence
    free: Sequence[bool] = ()
    maximize: bool = True

    def __post_init__(self):
        n = len(self.objective)
        if any(len(r) != n for r in self.rows):
            raise ValueError("constraint row length does not match the objective")
        if not (len(self.rows) == len(self.senses) == len(self.rhs)):
            raise ValueError("rows, senses and rhs must have equal length")
        if any(s not in ("<=", "=", ">=") for s in self.senses):
            raise ValueError("senses must be '<=', '=' or '>='")
        if self.free and len(self.free) != n:
            raise ValueError("free flags must cover every variable")


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    value: Optional[Fraction] = None
    point: Optional[tuple[Fraction, ...]] = None


class EnumerationLimitError(RuntimeError):
    """A lattice point scan would exceed the configured box budget."""


# -- simplex core ----------------------------------------------------------------

@dataclass
class _StdResult:
    status: LpStatus
    value: Optional[Fraction] = None
    x: Optional[list[Fraction]] = None
    basis: list[int] = field(default_factory=list)
    rows: list[int] = field(default_factory=list)


def _pivot(T, z, r, s, D):
    """Integer-preserving pivot; returns the new common denominator.

    Every row holds ``D`` times the real tableau row.  Row ``r`` is kept as
    is and the others get ``(p*row - row[s]*T[r]) / D``, an exact division.
    """
    pr = T[r]
    p = pr[s]
    for i, row in enumerate(T):
        if i != r:
            f = row[s]
            if f:
                T[i] = [(p * x - f * y) // D for x, y in zip(row, pr)]
            else:
                T[i] = [(p * x) // D for x in row]
    f = z[s]
    z[:] = [(p * x - f * y) // D for x, y in zip(z, pr)]
    return p


def _bland(T, z, basis, ncols, D):
    """Primal simplex with Bland's rule.  Returns ``(optimal?, D)``."""
    while True:
        sg = 1 if D > 0 else -1
        s = next((j for j in range(ncols) if z[j] * sg > 0), None)
        if s is None:
            return True, D
        best = None
        for i, row in enumerate(T):
            a = row[s] * sg
            if a > 0:
                rhs = row[-1] * sg
                if best is None:
                    best = (rhs, a, i)
                    continue
                lhs, rhs_best = rhs * best[1], best[0] * a
                if lhs < rhs_best or (lhs == rhs_best and basis[i] < basis[best[2]]):
                    best = (rhs, a, i)
        if best is None:
            return False, D
        r = best[2]
        D = _pivot(T, z, r, s, D)
        basis[r] = s


def _integral_rows(A, b):
    rows = []
    for row, rhs in zip(A, b):
        row = [Fraction(x) for x in row] + [Fraction(rhs)]
        d = lcm(*(x.denominator for x in row))
        ints = [int(x * d) for x in row]
        if ints[-1] < 0:
            ints = [-x for x in ints]
        rows.append(ints)
    return rows


def simplex(A: Sequence[Sequence], b: Sequence, c: Sequence) -> _StdResult:
    """Maximize ``c x`` subject to ``A x = b``, ``x >= 0`` (standard form).

    Rows are scaled to integers and pivoted fraction-free, so intermediate
    entries are integer minors of the input.
    """
    m = len(A)
    n = len(c)
    if len(b) != m:
        raise ValueError("right-hand side length mismatch")
    T = []
    for i, row in enumerate(_integral_rows(A, b)):
        T.append(row[:n] + [int(k == i) for k in range(m)] + [row[n]])
    basis = [n + i for i in range(m)]
    D = 1

    # phase 1: maximize -sum(artificials)
    z = [sum(T[i][j] for i in range(m)) for j in range(n)] + [0] * m
    z.append(sum(row[-1] for row in T))
    _, D = _bland(T, z, basis, n + m, D)
    if any(T[i][-1] for i in range(m) if basis[i] >= n):
        return _StdResult(LpStatus.INFEASIBLE)

    keep = []
    for i in range(m):
        if basis[i] >= n:
            s = next((j for j in range(n) if T[i][j]), None)
            if s is None:
                continue  # redundant equality
            D = _pivot(T, z, i, s, D)
            basis[i] = s
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2, objective scaled to integers by a positive factor
    cf = [Fraction(x) for x in c]
    cd = lcm(*(x.denominator for x in cf)) if cf else 1
    ci = [int(x * cd) for x in cf]
    z = [D * x for x in ci] + [0]
    for i, row in enumerate(T):
        cb = ci[basis[i]]
        if cb:
            z = [x - cb * y for x, y in zip(z, row)]
    ok, D = _bland(T, z, basis, n, D)
    if not ok:
        return _StdResult(LpStatus.UNBOUNDED)
    x = [Fraction(0)] * n
    for i, row in enumerate(T):
        x[basis[i]] = Fraction(row[-1], D)
    value = sum((cf[j] * x[j] for j in range(n)), Fraction(0))
    return _StdResult(LpStatus.OPTIMAL, value, x, basis, keep)


def lp_solve(p: LpProblem) -> LpOutcome:
    """Solve a general LP exactly; the outcome status encodes every case."""
    n = len(p.objective)
    free = list(p.free) if p.free else [False] * n
    cols = []  # (original index, sign)
    for j in range(n):
        cols.append((j, 1))
        if free[j]:
            cols.append((j, -1))
    nslack = sum(1 for s in p.senses if s != "=")
    A, b = [], []
    k = 0
    for row, sense, rhs in zip(p.rows, p.senses, p.rhs):
        std = [sg * Fraction(row[j]) for j, sg in cols] + [Fraction(0)] * nslack
        if sense != "=":
            std[len(cols) + k] = Fraction(1 if sense == "<=" else -1)
            k += 1
        A.append(std)
        b.append(Fraction(rhs))
    sign = 1 if p.maximize else -1
    c = [sign * Fraction(p.objective[j]) * sg for j, sg in cols] + [Fraction(0)] * nslack
    if not A:
        # no constraints: bounded only if every objective entry is nonpositive
        if any(x > 0 for x in c):
            return LpOutcome(LpStatus.UNBOUNDED)
        return LpOutcome(LpStatus.OPTIMAL, Fraction(0), tuple(Fraction(0) for _ in range(n)))
    res = simplex(A, b, c)
    if res.status is not LpStatus.OPTIMAL:
        return LpOutcome(res.status)
    point = [Fraction(0)] * n
    for (j, sg), val in zip(cols, res.x):
        point[j] += sg * val
    return LpOutcome(LpStatus.OPTIMAL, sign * res.value, tuple(point))


# -- parametric right-hand side ---------------------------------------------------

class ParametricLP:
    """``max c x  s.t.  A x = b, x >= 0`` for fixed ``(A, c)`` and varying ``b``."""

    def __init__(self, A: Sequence[Sequence], c: Sequence):
        self.A = [[Fraction(x) for x in row] for row in A]
        self.c = [Fraction(x) for x in c]
        self._bases: list[tuple] = []
        self.fresh_solves = 0

    def _remember(self, res: _StdResult):
        B = [[self.A[r][j] for j in res.basis] for r in res.rows]
        inv = inverse(B) if B else []
        d = lcm(*(x.denominator for row in inv for x in row)) if inv else 1
        binv = [[int(x * d) for x in row] for row in inv]
        w = [sum((self.c[j] * inv[i][k] for i, j in enumerate(res.basis)), Fraction(0))
             for k in range(len(res.rows))]
        wd = lcm(*(x.denominator for x in w)) if w else 1
        # rows dropped as redundant still have to hold for a new right-hand side
        dropped = [(r, [self.A[r][j] for j in res.basis])
                   for r in range(len(self.A)) if r not in res.rows]
        self._bases.insert(0, (res.rows, binv, d, [int(x * wd) for x in w], wd, dropped))

    def maximize(self, b: Sequence) -> Optional[Fraction]:
        """Optimal value for right-hand side ``b``; None if infeasible.

        Raises ``ValueError`` when the LP is unbounded.
        """
        for idx, (rows, binv, d, w, wd, dropped) in enumerate(self._bases):
            bk = [b[r] for r in rows]
            xb = [sum(a * x for a, x in zip(row, bk)) for row in binv]
            if any(x < 0 for x in xb):
                continue
            if dropped and any(sum(a * x for a, x in zip(arow, xb)) != d * b[r]
                               for r, arow in dropped):
                continue
            if idx:
                self._bases.insert(0, self._bases.pop(idx))
            return Fraction(sum(a * x for a, x in zip(w, bk))) / wd
        self.fresh_solves += 1
        res = simplex(self.A, b, self.c)
        if res.status is LpStatus.INFEASIBLE:
            return None
        if res.status is LpStatus.UNBOUNDED:
            raise ValueError("unbounded parametric LP")
        self._remember(res)
        return res.value


# -- convex bodies -----------------------------------------------------------------

def _points(P) -> list[tuple]:
    pts = getattr(P, "vertices", P)
    return [tuple(Fraction(x) for x in p) for p in pts]


class ConvexBody:
    """The body ``K = sum_b sign_b * conv(points_b)`` in parameter coordinates.

    Parameter coordinates ``y in R^k`` map to ambient points ``x = M y``
    through the integer matrix ``coords`` (``n x k``; identity when None), so
    a linear section ``K ∩ M R^k`` with its lattice ``M Z^k`` is expressed
    by passing a lattice basis as ``coords``.  A plain polytope is a single
    ``+1`` block; the difference body ``P - P`` is the blocks ``(+1, P)`` and
    ``(-1, P)``, never expanded into a vertex list.
    """

    def __init__(self, blocks: Sequence[tuple[int, Sequence]], ambient_dim: int,
                 coords: Optional[Sequence[Sequence[int]]] = None):
        self.blocks = [(int(s), _points(pts)) for s, pts in blocks]
        if not self.blocks or any(not pts for _, pts in self.blocks):
            raise ValueError("every block needs at least one point")
        self.ambient_dim = ambient_dim
        if any(len(p) != ambient_dim for _, pts in self.blocks for p in pts):
            raise ValueError("point dimension mismatch")
        self.coords = [list(map(int, r)) for r in coords] if coords is not None else identity(ambient_dim)
        if len(self.coords) != ambient_dim:
            raise ValueError("coordinate map has wrong number of rows")
        self.dim = len(self.coords[0]) if self.coords else 0
        self._lps: dict = {}
        self._order: Optional[list[int]] = None

    # block columns: the scaled weights beta_b >= 0 with sum(beta_b) = scale
    def _block_columns(self) -> list[list[Fraction]]:
        cols = []
        for s, pts in self.blocks:
            for p in pts:
                cols.append([s * x for x in p])
        return cols

    def _range_lp(self, fixed: tuple[int, ...], target: int, sense: int) -> ParametricLP:
        key = ("range", fixed, target, sense)
        lp = self._lps.get(key)
        if lp is not None:
            return lp
        n, nb = self.ambient_dim, len(self.blocks)
        bcols = self._block_columns()
        free = [j for j in range(self.dim) if j not in fixed]
        ncols = len(bcols) + 2 * len(free)
        A = []
        for r in range(n):
            row = [c[r] for c in bcols]
            for j in free:
                row += [-self.coords[r][j], self.coords[r][j]]
            A.append(row)
        start = 0
        for b, (_, pts) in enumerate(self.blocks):
            row = [Fraction(0)] * ncols
            for k in range(start, start + len(pts)):
                row[k] = Fraction(1)
            start += len(pts)
            A.append(row)
        c = [Fraction(0)] * ncols
        t = len(bcols) + 2 * free.index(target)
        c[t], c[t + 1] = Fraction(sense), Fraction(-sense)
        lp = ParametricLP(A, c)
        self._lps[key] = lp
        return lp

    def _range_rhs(self, fixed, values, scale) -> list:
        rhs = []
        for r in range(self.ambient_dim):
            rhs.append(sum(self.coords[r][j] * v for j, v in zip(fixed, values)))
        rhs += [scale] * len(self.blocks)
        return rhs

    def coordinate_range(self, fixed: Sequence[int], values: Sequence[int], target: int,
                         scale: int = 1) -> Optional[tuple[Fraction, Fraction]]:
        """Exact ``(min, max)`` of coordinate ``target`` over ``scale*K`` with the
        coordinates ``fixed`` pinned to ``values``; None if that fibre is empty."""
        fixed = tuple(fixed)
        rhs = self._range_rhs(fixed, values, scale)
        hi = self._range_lp(fixed, target, 1).maximize(rhs)
        if hi is None:
            return None
        lo = -self._range_lp(fixed, target, -1).maximize(rhs)
        return lo, hi

    def bounding_box(self, scale: int = 1) -> list[tuple[Fraction, Fraction]]:
        box = []
        for j in range(self.dim):
            rng = self.coordinate_range((), (), j, scale)
            assert rng is not None
            box.append(rng)
        return box

    def scan_order(self) -> list[int]:
        """Coordinates sorted by increasing box width; the widest is scanned last."""
        if self._order is None:
            box = self.bounding_box(1)
            self._order = sorted(range(self.dim), key=lambda j: (box[j][1] - box[j][0], j))
        return self._order

    def _gauge_lp(self) -> ParametricLP:
        lp = self._lps.get("gauge")
        if lp is not None:
            return lp
        bcols = self._block_columns()
        A = [[c[r] for c in bcols] for r in range(self.ambient_dim)]
        sizes = [len(pts) for _, pts in self.blocks]
        for b in range(1, len(self.blocks)):
            row = [Fraction(0)] * len(bcols)
            for k in range(sizes[0]):
                row[k] = Fraction(1)
            off = sum(sizes[:b])
            for k in range(off, off + sizes[b]):
                row[k] = Fraction(-1)
            A.append(row)
        c = [Fraction(-1)] * sizes[0] + [Fraction(0)] * (len(bcols) - sizes[0])
        lp = ParametricLP(A, c)
        self._lps["gauge"] = lp
        return lp

    def ambient(self, y: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, y)) for row in self.coords]

    def gauge(self, y: Sequence[int]) -> Fraction:
        """``min{lam >= 0 : M y in lam K}``; requires 0 in the interior of K."""
        rhs = self.ambient(y) + [0] * (len(self.blocks) - 1)
        val = self._gauge_lp().maximize(rhs)
        if val is None:
            raise ValueError("point not in the linear span of the body (degenerate body)")
        return -val

    def contains(self, y: Sequence, scale: int = 1) -> bool:
        key = "member"
        lp = self._lps.get(key)
        if lp is None:
            bcols = self._block_columns()
            A = [[c[r] for c in bcols] for r in range(self.ambient_dim)]
            start = 0
            for _, pts in self.blocks:
                A.append([Fraction(int(start <= k < start + len(pts))) for k in range(len(bcols))])
                start += len(pts)
            lp = ParametricLP(A, [0] * len(bcols))
            self._lps[key] = lp
        x = self.ambient(y)
        den = lcm(*(Fraction(v).denominator for v in x), 1)
        rhs = [int(Fraction(v) * den) for v in x] + [scale * den] * len(self.blocks)
        return lp.maximize(rhs) is not None

    # -- lattice point scans --

    def box_size(self, scale: int = 1) -> int:
        box = self.bounding_box(scale)
        return prod(max(0, floor(hi) - ceil(lo) + 1) for lo, hi in box)

    def _check_budget(self, scale, max_box):
        if max_box is not None:
            size = self.box_size(scale)
            if size > max_box:
                raise EnumerationLimitError(
                    f"bounding box holds {size} lattice points, above the limit {max_box}")

    def _leaves(self, scale: int) -> Iterator[tuple[list[int], int, int]]:
        order = self.scan_order()
        if self.dim == 0:
            yield [], 0, 0
            return
        fixed_vals: list[int] = []

        def rec(level):
            rng = self.coordinate_range(order[:level], fixed_vals, order[level], scale)
            if rng is None:
                return
            lo, hi = ceil(rng[0]), floor(rng[1])
            if level == self.dim - 1:
                if lo <= hi:
                    yield list(fixed_vals), lo, hi
                return
            for v in range(lo, hi + 1):
                fixed_vals.append(v)
                yield from rec(level + 1)
                fixed_vals.pop()

        yield from rec(0)

    def count_lattice_points(self, scale: int = 1, max_box: Optional[int] = None) -> int:
        self._check_budget(scale, max_box)
        if self.dim == 0:
            return 1
        return sum(hi - lo + 1 for _, lo, hi in self._leaves(scale))

    def lattice_points(self, scale=1, max_box: Optional[int] = None) -> list[tuple[int, ...]]:
        """All ``y in Z^k`` with ``M y in scale*K``, sorted lexicographically.

        ``scale`` may be any nonnegative rational.
        """
        self._check_budget(scale, max_box)
        if self.dim == 0:
            return [()]
        order = self.scan_order()
        out = []
        for prefix, lo, hi in self._leaves(scale):
            for v in range(lo, hi + 1):
                y = [0] * self.dim
                for j, val in zip(order, prefix + [v]):
                    y[j] = val
                out.append(tuple(y))
        out.sort()
        return out


# -- operations on vertex lists --------------------------------------------------------

def membership(P, x: Sequence) -> bool:
    """True iff ``x`` is a convex combination of the points of ``P`` (LP feasibility)."""
    pts = _points(P)
    if len(x) != len(pts[0]):
        raise ValueError("dimension mismatch")
    m = len(pts)
    A = [[p[r] for p in pts] for r in range(len(x))] + [[1] * m]
    return simplex(A, list(x) + [1], [0] * m).status is LpStatus.OPTIMAL


def support_bound(P, direction: Sequence) -> Fraction:
    """``max <v, direction>`` over the points of ``P``."""
    return max(sum((a * Fraction(b) for a, b in zip(p, direction)), Fraction(0)) for p in _points(P))


def is_full_dimensional(P, difference: bool = False) -> bool:
    pts = _points(P)
    if difference:
        base = pts[0]
        return rank([[a - b for a, b in zip(p, base)] for p in pts]) == len(base)
    return rank(pts) == len(pts[0])


def gauge(P, z: Sequence[int], difference: bool = False) -> Fraction:
    """``min{lam > 0 : z in lam K}`` by the LP ``max mu`` with ``mu z`` in ``K``.

    ``K`` is the 0-symmetric polytope spanned by the points of ``P``, or
    ``P - P`` when ``difference`` is set (two convex-combination blocks).
    """
    pts = _points(P)
    n = len(pts[0])
    if len(z) != n:
        raise ValueError("dimension mismatch")
    if not any(z):
        raise ValueError("gauge of the zero vector")
    if not is_full_dimensional(pts, difference):
        raise ValueError("degenerate (lower-dimensional) body")
    m = len(pts)
    blocks = [(1, pts), (-1, pts)] if difference else [(1, pts)]
    nvar = m * len(blocks) + 1
    rows = []
    for r in range(n):
        row = []
        for s, bp in blocks:
            row += [s * p[r] for p in bp]
        rows.append(row + [-Fraction(z[r])])
    for b in range(len(blocks)):
        rows.append([Fraction(int(b * m <= k < (b + 1) * m)) for k in range(nvar - 1)] + [0])
    res = simplex(rows, [0] * n + [1] * len(blocks), [0] * (nvar - 1) + [1])
    if res.status is not LpStatus.OPTIMAL or res.value == 0:
        raise ValueError("degenerate body or z outside its span")
    return 1 / res.value
