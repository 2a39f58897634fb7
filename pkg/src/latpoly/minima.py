"""Successive minima of 0-symmetric bodies with respect to ``Z^n``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import NamedTuple, Optional, Sequence

from .linalg import LatticeBasis, rank, sublattice_index
from .lp import ConvexBody


@dataclass(frozen=True)
class MinimaResult:
    lambdas: tuple[Fraction, ...]
    witnesses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.lambdas) != len(self.witnesses):
            raise ValueError("one witness per minimum")
        if any(a > b for a, b in zip(self.lambdas, self.lambdas[1:])):
            raise ValueError("minima must be nondecreasing")

    @property
    def product(self) -> Fraction:
        return prod(self.lambdas, start=Fraction(1))


class _Span:
    """Incrementally maintained echelon basis over the rationals."""

    def __init__(self):
        self.rows: list[tuple[int, list[Fraction]]] = []

    def add(self, v: Sequence) -> bool:
        v = [Fraction(x) for x in v]
        for p, row in self.rows:
            if v[p]:
                f = v[p] / row[p]
                v = [a - f * b for a, b in zip(v, row)]
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            return False
        self.rows.append((piv, v))
        return True


def _is_canonical(y: Sequence[int]) -> bool:
    # one representative of each pair {y, -y}: first nonzero entry positive
    for x in y:
        if x:
            return x > 0
    return False


def successive_minima(K: ConvexBody, max_box: Optional[int] = None) -> MinimaResult:
    """Exact minima of a 0-symmetric full-dimensional body, with witnesses.

    ``e_1..e_dim`` are independent lattice vectors, so every minimum is at
    most ``B = max gauge(e_i)``.  All lattice points of ``B*K`` are collected,
    sorted by (gauge, lexicographic order) and the independent ones are
    picked greedily.  Of each pair ``±z`` only the one whose first nonzero
    entry is positive is considered.
    """
    k = K.dim
    if k == 0:
        return MinimaResult((), ())
    units = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    try:
        bound = max(K.gauge(e) for e in units)
    except ValueError as exc:
        raise ValueError("degenerate body: 0 is not an interior point") from exc
    cands = [y for y in K.lattice_points(bound, max_box) if _is_canonical(y)]
    ranked = sorted((K.gauge(y), y) for y in cands)
    span = _Span()
    lambdas, witnesses = [], []
    for g, y in ranked:
        if span.add(y):
            lambdas.append(g)
            witnesses.append(y)
            if len(witnesses) == k:
                break
    if len(witnesses) != k:
        raise ValueError("degenerate body: fewer than dim independent lattice vectors")
    return MinimaResult(tuple(lambdas), tuple(witnesses))


def section_body(K: ConvexBody, L: LatticeBasis) -> ConvexBody:
    """``K ∩ span(L)`` in the coordinates of the lattice basis ``L``."""
    if K.coords != [[int(i == j) for j in range(K.ambient_dim)] for i in range(K.ambient_dim)]:
        raise ValueError("section of a body that is already a section")
    if L.ambient_dim != K.ambient_dim:
        raise ValueError("dimension mismatch")
    if L.rank and sublattice_index(L.matrix()) != 1:
        raise ValueError("lattice basis is not saturated")
    return ConvexBody(K.blocks, K.ambient_dim, L.matrix())


def successive_minima_section(K: ConvexBody, L: LatticeBasis,
                              max_box: Optional[int] = None) -> MinimaResult:
    """Minima of ``K ∩ span(L)`` w.r.t. ``Z^n ∩ span(L)``; witnesses in ambient coordinates."""
    S = section_body(K, L)
    res = successive_minima(S, max_box)
    return MinimaResult(res.lambdas, tuple(tuple(S.ambient(y)) for y in res.witnesses))


class SandwichReport(NamedTuple):
    product: Fraction
    lower: Fraction
    upper: Fraction
    lower_ok: bool
    upper_ok: bool


def minkowski_sandwich(K, vol: Fraction) -> SandwichReport:
    """Check ``2^n/n! <= lambda_1...lambda_n vol(K) <= 2^n`` exactly.

    ``K`` is a gauge body or an already computed :class:`MinimaResult`.
    """
    minima = K if isinstance(K, MinimaResult) else successive_minima(K)
    n = len(minima.lambdas)
    product = minima.product * Fraction(vol)
    lower = Fraction(2 ** n, factorial(n))
    upper = Fraction(2 ** n)
    return SandwichReport(product, lower, upper, lower <= product, product <= upper)


class SectionLemmaReport(NamedTuple):
    section_lambdas: tuple[Fraction, ...]
    section_product: Fraction
    kept_product: Fraction
    holds: bool


def check_section_lemma(K: ConvexBody, minima: MinimaResult, L: LatticeBasis,
                        excluded: Sequence[int], max_box: Optional[int] = None) -> SectionLemmaReport:
    """Compare the section minima of ``K ∩ span(L)`` with the minima of ``K``.

    ``excluded`` holds ``n - i`` zero-based positions into ``minima``; the
    corresponding witnesses must span a complement of ``span(L)``.  The
    report carries ``prod_j lambda_j(section)`` and ``prod_{k not excluded}
    lambda_k(K)``; the lemma asserts the former is at least the latter.
    """
    n = K.ambient_dim
    excluded = sorted(set(excluded))
    if len(excluded) + L.rank != n:
        raise ValueError("excluded set must have size n - dim(L)")
    vecs = [minima.witnesses[j] for j in excluded] + list(L.vectors)
    if rank(vecs) != n:
        raise ValueError("subspaces intersect")
    sec = successive_minima_section(K, L, max_box)
    kept = prod((minima.lambdas[k] for k in range(n) if k not in excluded), start=Fraction(1))
    return SectionLemmaReport(sec.lambdas, sec.product, kept, sec.product >= kept)
