"""Elementary symmetric bounds on Ehrhart coefficients and the reports comparing them.

Throughout, ``sigma_i(P)`` means ``sigma_i`` evaluated on ``1/lambda_j(P - P)``.
Halving the difference body doubles its minima, so the same numbers arise
as ``sigma_i`` on ``2/lambda_j`` of the symmetrized body ``(P - P)/2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor, prod
from typing import NamedTuple, Optional, Sequence

from .minima import MinimaResult, successive_minima
from .polytopes import (DegenerateBodyError, EhrhartPoly, NotLatticePolytopeError, VPolytope,
                        count_lattice_points, difference_gauge_view, ehrhart, is_full_dimensional)
from .zonotopes import Zonotope, as_vpolytope, ehrhart_stanley, is_general_position, is_primitive


def sigma(values: Sequence, i: int) -> Fraction:
    """``i``-th elementary symmetric polynomial of ``values``."""
    n = len(values)
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    # coefficients of prod (1 + x_j t), truncated at degree i
    e = [Fraction(1)] + [Fraction(0)] * i
    for x in values:
        for d in range(i, 0, -1):
            e[d] += e[d - 1] * x
    return e[i]


def difference_minima(P: VPolytope, max_box: Optional[int] = None) -> MinimaResult:
    if not is_full_dimensional(P):
        raise DegenerateBodyError("sigma_i is only defined for full-dimensional polytopes")
    return successive_minima(difference_gauge_view(P), max_box)


def reciprocal_minima(P: VPolytope, minima: Optional[MinimaResult] = None) -> list[Fraction]:
    minima = minima or difference_minima(P)
    return [1 / lam for lam in minima.lambdas]


def sigma_of_polytope(P: VPolytope, i: int, minima: Optional[MinimaResult] = None) -> Fraction:
    return sigma(reciprocal_minima(P, minima), i)


class FloorBound(NamedTuple):
    bound: int
    count: int
    holds: bool


def conjecture_floor_bound(P: VPolytope, minima: Optional[MinimaResult] = None,
                           max_box: Optional[int] = None) -> FloorBound:
    """``#(P ∩ Z^n)`` against ``prod floor(1/lambda_i(P - P) + 1)``."""
    bound = prod((floor(r + 1) for r in reciprocal_minima(P, minima)), start=1)
    count = count_lattice_points(P, max_box)
    return FloorBound(bound, count, count <= bound)


def l_bound(P: VPolytope, minima: Optional[MinimaResult] = None) -> Fraction:
    """``prod (1/lambda_i(P - P) + 1)``, which expands to ``sum_i sigma_i(P)``."""
    return prod((r + 1 for r in reciprocal_minima(P, minima)), start=Fraction(1))


@dataclass(frozen=True)
class BoundRecord:
    """``g_i`` against one bound.

    When ``squared`` is set the bound is irrational and ``bound`` holds its
    square; ``holds`` then compares ``g_i^2`` with it (both sides are
    nonnegative).
    """

    i: int
    g: Fraction
    name: str
    bound: Fraction
    holds: bool
    squared: bool = False


@dataclass(frozen=True)
class BoundReport:
    ehrhart: EhrhartPoly
    minima: MinimaResult
    records: tuple[BoundRecord, ...]
    floor_bound: FloorBound
    l_value: Fraction
    l_matches_sigma_sum: bool
    extra: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.records)

    def failures(self) -> list[BoundRecord]:
        return [r for r in self.records if not r.holds]


def _record(i, g, name, bound):
    return BoundRecord(i, g, name, bound, g <= bound)


def coefficient_report(P: VPolytope, zonotope: Optional[Zonotope] = None,
                       max_box: Optional[int] = None) -> BoundReport:
    """Compare every Ehrhart coefficient of ``P`` with the sigma bounds.

    If ``zonotope`` is given (with ``P`` its vertex polytope) the zonotope
    bounds are reported as well: ``(n!/i!) sigma_i``, the sharper
    ``C(n,i) (n-i)^((n-i)/2) sigma_i`` (compared after squaring), and for
    generators in general position ``C(m,i)/C(n,i) sigma_i``.
    """
    if not P.is_lattice:
        raise NotLatticePolytopeError("not a lattice polytope")
    n = P.ambient_dim
    minima = difference_minima(P, max_box)
    recips = reciprocal_minima(P, minima)
    g = ehrhart(P, max_box)
    sig = [sigma(recips, i) for i in range(n + 1)]
    records = [_record(i, g[i], "sigma", sig[i]) for i in range(n + 1)]
    extra = {}
    if zonotope is not None:
        if zonotope.ambient_dim != n:
            raise ValueError("zonotope and polytope dimensions differ")
        gens = zonotope.nonzero_generators()
        m = len(gens)
        for i in range(n + 1):
            records.append(_record(i, g[i], "factorial", Fraction(factorial(n), factorial(i)) * sig[i]))
        for i in range(n + 1):
            sq = (comb(n, i) * sig[i]) ** 2 * Fraction(n - i) ** (n - i)
            records.append(BoundRecord(i, g[i], "root-factor", sq, g[i] ** 2 <= sq, squared=True))
        general = m >= n and is_general_position(Zonotope(n, tuple(gens)))
        extra["general_position"] = general
        if general:
            for i in range(n + 1):
                records.append(_record(i, g[i], "general-position",
                                       Fraction(comb(m, i), comb(n, i)) * sig[i]))
    floor_b = conjecture_floor_bound(P, minima, max_box)
    lv = l_bound(P, minima)
    return BoundReport(g, minima, tuple(records), floor_b, lv, lv == sum(sig), extra)


class CorollaryReport(NamedTuple):
    m: int
    g1: Fraction
    sigma1: Fraction
    holds: bool


def check_corollary_primitive(Z: Zonotope) -> CorollaryReport:
    """For primitive generators in general position, ``g_1(Z) = m <= sigma_1(Z)``."""
    if any(not any(v) for v in Z.generators):
        raise ValueError("zero generator")
    if not all(is_primitive(v) for v in Z.generators):
        raise ValueError("generators are not primitive")
    if not is_general_position(Z):
        raise ValueError("generators are not in general position")
    m = len(Z.generators)
    g1 = ehrhart_stanley(Z)[1]
    s1 = sigma_of_polytope(as_vpolytope(Z), 1)
    return CorollaryReport(m, g1, s1, g1 == m and m <= s1)


def prime_power_base(k: int) -> Optional[int]:
    """The prime ``p`` with ``k = p^e`` (``e >= 1``), or None."""
    if k < 2:
        return None
    p = next(d for d in range(2, k + 1) if k % d == 0)
    while k % p == 0:
        k //= p
    return p if k == 1 else None


def davenport_prime_power(n: int, k: int) -> int:
    """``n(k - 1) + 1``, the Davenport constant of ``(Z/k)^n`` for prime powers ``k``."""
    if n < 1:
        raise ValueError("n must be positive")
    if prime_power_base(k) is None:
        raise ValueError(f"formula unproven for k = {k}, which is not a prime power")
    return n * (k - 1) + 1


def _group(n, k):
    elems = [()]
    for _ in range(n):
        elems = [e + (x,) for e in elems for x in range(k)]
    return elems


def davenport_bruteforce(n: int, k: int) -> int:
    """Davenport constant of ``(Z/k)^n`` by exhaustive search.

    Zero-sum free multisets are grown in nondecreasing element order while
    tracking the set of nonempty subsequence sums; the answer is one more
    than the longest one found.
    """
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    elems = _group(n, k)[1:]  # the zero element is a zero sum on its own
    zero = (0,) * n

    def add(a, b):
        return tuple((x + y) % k for x, y in zip(a, b))

    best = 0

    def grow(start, length, sums):
        nonlocal best
        best = max(best, length)
        for idx in range(start, len(elems)):
            g = elems[idx]
            shifted = {add(s, g) for s in sums}
            if zero in shifted:
                continue
            grow(idx, length + 1, sums | shifted | {g})

    grow(0, 0, frozenset())
    return best + 1


class DavenportReport(NamedTuple):
    m: int
    lambda1: Fraction
    bound: Fraction
    holds: bool


def check_davenport_prop(Z: Zonotope, k: int) -> DavenportReport:
    """For ``n(k-1)+1 <= m <= kn`` primitive generators: ``m <= n / lambda_1(Z - Z)``."""
    n, m = Z.ambient_dim, len(Z.generators)
    if prime_power_base(k) is None:
        raise ValueError(f"k = {k} is not a prime power")
    if not davenport_prime_power(n, k) <= m <= k * n:
        raise ValueError(f"generator count {m} outside {n * (k - 1) + 1}..{k * n}")
    if not all(any(v) and is_primitive(v) for v in Z.generators):
        raise ValueError("generators are not primitive")
    lam1 = difference_minima(as_vpolytope(Z)).lambdas[0]
    bound = n / lam1
    return DavenportReport(m, lam1, bound, m <= bound)
