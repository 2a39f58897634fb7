"""The family ``Q^n_l = conv(l[-1,1]^(n-1) x {0}, ±e_n)`` and its closed forms.

These polytopes have minima ``(1/l, ..., 1/l, 1)`` while ``g_(n-2)`` grows
like ``l^(n-1)``, one degree faster than ``sigma_(n-2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .polytopes import EhrhartPoly, VPolytope


def _comb(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def _q_vertices(n, l):
    base = [()]
    for _ in range(n - 1):
        base = [p + (x,) for p in base for x in (-l, l)]
    apex = tuple(int(i == n - 1) for i in range(n))
    return [p + (0,) for p in base] + [apex, tuple(-x for x in apex)]


@dataclass(frozen=True)
class QFamilyInstance:
    n: int
    l: int
    polytope: VPolytope

    def __post_init__(self):
        if self.n < 2 or self.l < 1:
            raise ValueError("need n >= 2 and l >= 1")
        if self.polytope != VPolytope.from_points(_q_vertices(self.n, self.l)):
            raise ValueError("polytope does not match (n, l)")


def q_family(n: int, l: int) -> QFamilyInstance:
    if n < 2 or l < 1:
        raise ValueError("need n >= 2 and l >= 1")
    return QFamilyInstance(n, l, VPolytope.from_points(_q_vertices(n, l)))


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli numbers with ``B_1 = +1/2``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 1:
        return Fraction(1, 2)
    if m == 0:
        return Fraction(1)
    # sum_{j<=m} C(m+1, j) B_j = 0 in the B_1 = -1/2 convention
    acc = Fraction(1) - Fraction(m + 1, 2)
    acc += sum((comb(m + 1, j) * bernoulli(j) for j in range(2, m)), Fraction(0))
    return -acc / (m + 1)


def p_coeff(i: int, j: int) -> Fraction:
    """Coefficient of ``k^i`` in ``sum_{m=1}^{k-1} m^j`` (for ``i >= 1``)."""
    if j < 0 or not 0 <= i <= j + 1:
        raise ValueError(f"need 0 <= i <= j + 1, got i={i}, j={j}")
    total = Fraction(0)
    for t in range(i, j + 2):
        total += (-1) ** (t - i) * Fraction(comb(j + 1, t) * comb(t, i), j + 1) * bernoulli(j + 1 - t)
    return total


def faulhaber_sum(i: int) -> list[Fraction]:
    """Coefficients ``c_0..c_(i+1)`` of ``k -> sum_{m=0}^{k-1} m^i``.

    ``p_coeff(0, j)`` is not the constant term (that term is 0), so it is
    not used.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i == 0:
        return [Fraction(0), Fraction(1)]
    return [Fraction(0)] + [p_coeff(t, i) for t in range(1, i + 2)]


def q_family_ehrhart_closed(n: int, l: int) -> EhrhartPoly:
    """Ehrhart coefficients of ``Q^n_l`` from the lattice-slice sum."""
    if n < 2 or l < 1:
        raise ValueError("need n >= 2 and l >= 1")
    coeffs = [Fraction(1)]
    for i in range(1, n + 1):
        inner = Fraction(_comb(n - 1, i) * l)
        for j in range(i - 1, n):
            inner += p_coeff(i, j) * _comb(n - 1, j) * (2 * l) ** (j - i + 1)
        coeffs.append(2 * Fraction(2 * l) ** (i - 1) * inner)
    return EhrhartPoly(tuple(coeffs))


def q_sigma_closed(n: int, l: int, i: int) -> Fraction:
    """``sigma_i`` on ``(2l, ..., 2l, 2)``, the reciprocal minima of ``Q^n_l - Q^n_l``."""
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    return Fraction(_comb(n - 1, i) * (2 * l) ** i + 2 * _comb(n - 1, i - 1) * (2 * l) ** max(i - 1, 0))


def q_l_poly(n: int, l: int) -> list[Fraction]:
    """Coefficients in ``k`` of ``prod (k/lambda_j(D Q) + 1) = (2lk + 1)^(n-1) (2k + 1)``."""
    poly = [Fraction(1), Fraction(2)]
    for _ in range(n - 1):
        poly = [a + b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + [2 * l * c for c in poly])]
    return poly


def g_second(n: int, l: int) -> Fraction:
    """``g_(n-2)(Q^n_l)``, valid for ``n >= 3``."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return (n - 1) * Fraction(2 * l) ** (n - 3) * (Fraction(2, 3) * l * l + 1)


def g_third(n: int, l: int) -> Fraction:
    """``g_(n-3)(Q^n_l)``, valid for ``n >= 4``."""
    if n < 4:
        raise ValueError("needs n >= 4")
    return Fraction(2, 3) * comb(n - 1, 2) * Fraction(2 * l) ** (n - 4) * (2 * l * l + 1)


def find_violation(n: int, i: int, c, l_max: int) -> Optional[int]:
    """Smallest ``l <= l_max`` with ``g_i(Q^n_l) > c sigma_i(Q^n_l)``."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("factor must be positive")
    if i == n - 2 and n >= 3:
        g = g_second
    elif i == n - 3 and n >= 4:
        g = g_third
    else:
        raise ValueError(f"only i = n-2 (n >= 3) or i = n-3 (n >= 4) are supported, got n={n}, i={i}")
    for l in range(1, l_max + 1):
        if g(n, l) > c * q_sigma_closed(n, l, i):
            return l
    return None
