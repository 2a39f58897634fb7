"""Exact integer and rational linear algebra.

Matrices are plain sequences of rows.  Entries are Python ints (or
``Fraction`` where rational input is allowed), so every routine here is
exact and arbitrary precision.  Column-oriented operations (minors of a
generator matrix, lattices spanned by columns) take the matrix in the
usual row-major layout; use :func:`from_columns` to build one from a list
of column vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm
from typing import NamedTuple, Optional, Sequence

Vector = tuple
Matrix = Sequence[Sequence[int]]


class DependentColumnsError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeBasis:
    """Basis of a lattice of rank ``len(vectors)`` inside ``Z^ambient_dim``."""

    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if any(len(v) != self.ambient_dim for v in vecs):
            raise ValueError("basis vector has wrong length")
        if len(vecs) > self.ambient_dim:
            raise ValueError("more basis vectors than the ambient dimension")
        if vecs and rank(from_columns(vecs)) != len(vecs):
            raise DependentColumnsError("basis vectors are dependent")

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def matrix(self) -> list[list[int]]:
        """The basis as an ``ambient_dim x rank`` matrix (basis vectors as columns)."""
        return from_columns(self.vectors, self.ambient_dim)


class LatticeDeterminant(NamedTuple):
    gram: int
    det: Optional[int]  # exact square root of ``gram`` when it is a perfect square

    @property
    def is_integral(self) -> bool:
        return self.det is not None


# -- small helpers -----------------------------------------------------------

def from_columns(cols: Sequence[Sequence[int]], nrows: Optional[int] = None) -> list[list]:
    cols = [list(c) for c in cols]
    if nrows is None:
        nrows = len(cols[0]) if cols else 0
    return [[c[r] for c in cols] for r in range(nrows)]


def columns(M: Matrix) -> list[tuple]:
    if not M:
        return []
    return [tuple(row[j] for row in M) for j in range(len(M[0]))]


def transpose(M: Matrix) -> list[list]:
    return [list(c) for c in columns(M)]


def mat_vec(M: Matrix, v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def mat_mul(A: Matrix, B: Matrix) -> list[list]:
    Bc = columns(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bc] for row in A]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def content(v: Sequence[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators so that it becomes integral."""
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def primitive(v: Sequence) -> tuple[int, ...]:
    """Smallest integer vector on the ray of a nonzero rational vector."""
    (row,) = integer_rows([v])
    g = content(row)
    return tuple(x // g for x in row)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    if a != 0 and b % a == 0:
        s = 1 if a > 0 else -1
        return abs(a), s, 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# -- elimination ---------------------------------------------------------------

def _bareiss(M: Matrix) -> tuple[int, int]:
    """Fraction-free elimination; returns ``(rank, last pivot)``.

    For a square nonsingular matrix the last pivot is the determinant up to
    the sign of the row swaps, which callers track separately.
    """
    A = integer_rows(M)
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    r = 0
    prev = 1
    sign = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        for i in range(r + 1, nrows):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r, sign * prev


def rank(M: Matrix) -> int:
    """Rank over the rationals.  Rational entries are accepted."""
    if not M or not M[0]:
        return 0
    return _bareiss(M)[0]


def det(M: Matrix) -> int:
    n = len(M)
    if n == 0:
        return 1
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    r, d = _bareiss([[int(x) for x in row] for row in M])
    return d if r == n else 0


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and the pivot columns."""
    A = [[Fraction(x) for x in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def nullspace(M: Sequence[Sequence], ncols: Optional[int] = None) -> list[tuple[int, ...]]:
    """Primitive integer vectors spanning the rational nullspace of ``M``."""
    if ncols is None:
        ncols = len(M[0])
    if not M:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    R, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(primitive(v))
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """One rational solution of ``A x = b`` (free variables set to 0), or None."""
    ncols = len(A[0])
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return x


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


# -- minors and normal forms ----------------------------------------------------

def gcd_of_minors(M: Matrix) -> int:
    """gcd of all maximal (i x i) minors of an n x i matrix with independent columns.

    Row subsets are visited in lexicographic order and the scan stops as soon
    as the running gcd reaches 1.
    """
    n = len(M)
    i = len(M[0]) if M else 0
    if i == 0:
        return 1
    if i > n:
        raise DependentColumnsError("dependent columns")
    g = 0
    for rows in combinations(range(n), i):
        g = gcd(g, det([M[r] for r in rows]))
        if g == 1:
            return 1
    if g == 0:
        raise DependentColumnsError("dependent columns")
    return g


def hermite_normal_form(M: Matrix) -> tuple[list[list[int]], list[list[int]]]:
    """Column Hermite normal form: returns ``(H, U)`` with ``H = M U``, ``det U = +-1``.

    ``H`` is lower echelon; its nonzero columns come first, each pivot is
    positive and the entries to the left of a pivot lie in ``[0, pivot)``.
    """
    H = [[int(x) for x in row] for row in M]
    nrows = len(H)
    ncols = len(H[0]) if H else 0
    U = identity(ncols)

    def combine(p, j, x, y):
        # replace columns (p, j) by a unimodular combination killing entry y
        g, s, t = _xgcd(x, y)
        a, b = -y // g, x // g
        for mat in (H, U):
            for row in mat:
                cp, cj = row[p], row[j]
                row[p] = s * cp + t * cj
                row[j] = a * cp + b * cj

    p = 0
    for i in range(nrows):
        if p == ncols:
            break
        for j in range(p + 1, ncols):
            if H[i][j]:
                combine(p, j, H[i][p], H[i][j])
        if H[i][p] == 0:
            continue
        if H[i][p] < 0:
            for mat in (H, U):
                for row in mat:
                    row[p] = -row[p]
        piv = H[i][p]
        for j in range(p):
            q = H[i][j] // piv
            if q:
                for mat in (H, U):
                    for row in mat:
                        row[j] -= q * row[p]
        p += 1
    return H, U


def smith_invariants(M: Matrix) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of the Smith normal form."""
    A = [[int(x) for x in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    out = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(A[i][j]), i, j) for i in range(t, nrows)
                   for j in range(t, ncols) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        piv = A[t][t]
        for i in range(t + 1, nrows):
            q = A[i][t] // piv
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[t])]
        for j in range(t + 1, ncols):
            q = A[t][j] // piv
            if q:
                for row in A:
                    row[j] -= q * row[t]
        if any(A[i][t] for i in range(t + 1, nrows)) or any(A[t][j] for j in range(t + 1, ncols)):
            continue
        bad = next((i for i in range(t + 1, nrows)
                    if any(A[i][j] % piv for j in range(t + 1, ncols))), None)
        if bad is not None:
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            continue
        out.append(abs(piv))
        t += 1
    return out


# -- lattices ------------------------------------------------------------------

def integer_kernel(A: Matrix, ncols: int) -> list[tuple[int, ...]]:
    """Basis of the lattice ``{x in Z^ncols : A x = 0}``."""
    if not A:
        return [tuple(int(i == j) for i in range(ncols)) for j in range(ncols)]
    H, U = hermite_normal_form(A)
    r = sum(1 for c in columns(H) if any(c))
    return [c for c in columns(U)[r:]]


def canonical_basis(vectors: Sequence[Sequence[int]], ambient_dim: int) -> LatticeBasis:
    """Hermite-reduced basis of the lattice generated by ``vectors``."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return LatticeBasis(ambient_dim, ())
    H, _ = hermite_normal_form(from_columns(vectors, ambient_dim))
    return LatticeBasis(ambient_dim, tuple(c for c in columns(H) if any(c)))


def saturate(vectors: Sequence[Sequence[int]], ambient_dim: Optional[int] = None) -> LatticeBasis:
    """Basis of ``span(vectors) ∩ Z^n``."""
    vectors = [tuple(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient dimension unknown for empty input")
        ambient_dim = len(vectors[0])
    nonzero = [v for v in vectors if any(v)]
    if not nonzero:
        return LatticeBasis(ambient_dim, ())
    normals = nullspace(nonzero, ambient_dim)
    kernel = integer_kernel(normals, ambient_dim)
    return canonical_basis(kernel, ambient_dim)


def lattice_coordinates(basis: LatticeBasis, v: Sequence[int]) -> Optional[list[Fraction]]:
    """Rational coordinates of ``v`` in ``basis`` (None if ``v`` is outside the span)."""
    return solve(basis.matrix(), list(v))


def sublattice_index(V: Matrix) -> int:
    """Index of the lattice generated by the columns of ``V`` in its saturation.

    Computed by writing ``V = S D`` for a basis ``S`` of the saturation, so
    the result is ``|det D|``.  Independent of the minor scan in
    :func:`gcd_of_minors`, which must return the same number.
    """
    cols = columns(V)
    n = len(V)
    if not cols:
        return 1
    if rank(V) != len(cols):
        raise DependentColumnsError("dependent columns")
    S = saturate(cols, n)
    D = []
    for c in cols:
        coords = lattice_coordinates(S, c)
        assert coords is not None and all(x.denominator == 1 for x in coords)
        D.append([int(x) for x in coords])
    return abs(det(transpose(D)))


def lattice_determinant(B: LatticeBasis) -> LatticeDeterminant:
    """Gram determinant of the basis; ``det`` is its square root when integral."""
    if not B.vectors:
        raise ValueError("empty basis")
    gram = det([[sum(a * b for a, b in zip(u, v)) for v in B.vectors] for u in B.vectors])
    root = isqrt(gram)
    return LatticeDeterminant(gram, root if root * root == gram else None)


def solve_affine_lattice(A: Matrix, b: Sequence[int]) -> Optional[tuple[tuple[int, ...], LatticeBasis]]:
    """Integer solutions of ``A x = b`` as ``p0 + lattice``, or None if there are none."""
    ncols = len(A[0])
    H, U = hermite_normal_form(A)
    hcols = columns(H)
    r = sum(1 for c in hcols if any(c))
    y = [0] * ncols
    for j in range(r):
        prow = next(i for i, x in enumerate(hcols[j]) if x)
        rest = b[prow] - sum(H[prow][l] * y[l] for l in range(j))
        q, rem = divmod(rest, H[prow][j])
        if rem:
            return None
        y[j] = q
    if mat_vec(H, y) != list(b):
        return None
    p0 = tuple(mat_vec(U, y))
    directions = canonical_basis(columns(U)[r:], ncols)
    return p0, directions


# -- polynomials -----------------------------------------------------------------

def interpolate_polynomial(points: Sequence[tuple], degree: int) -> list[Fraction]:
    """Coefficients ``c_0..c_d`` of the polynomial through ``degree + 1`` points."""
    points = list(points)
    if len(points) != degree + 1:
        raise ValueError(f"need {degree + 1} points, got {len(points)}")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("repeated abscissae")
    vander = [[x ** e for e in range(degree + 1)] for x in xs]
    coeffs = solve(vander, [Fraction(v) for _, v in points])
    assert coeffs is not None
    return coeffs


def poly_eval(coeffs: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
