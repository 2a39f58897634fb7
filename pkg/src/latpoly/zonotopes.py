"""Lattice zonotopes ``Z = sum_i [0, v_i]`` and their Ehrhart coefficients."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import content, det, from_columns, gcd_of_minors, rank, sublattice_index
from .polytopes import EhrhartPoly, VPolytope

GENERATOR_CAP = 16


@dataclass(frozen=True)
class Zonotope:
    ambient_dim: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in v) for v in self.generators)
        if any(len(v) != self.ambient_dim for v in gens):
            raise ValueError("generator of wrong dimension")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *generators: Sequence[int]) -> "Zonotope":
        return cls(len(generators[0]), tuple(generators))

    @property
    def zero_generators(self) -> list[int]:
        return [i for i, v in enumerate(self.generators) if not any(v)]

    def nonzero_generators(self) -> list[tuple[int, ...]]:
        if self.zero_generators:
            warnings.warn("zero generators are ignored", stacklevel=3)
        return [v for v in self.generators if any(v)]

    @property
    def dim(self) -> int:
        return rank(self.generators) if self.generators else 0


def as_vpolytope(Z: Zonotope, cap: int = GENERATOR_CAP) -> VPolytope:
    """All ``2^m`` subset sums of the generators (a redundant vertex list)."""
    m = len(Z.generators)
    if m > cap:
        raise ValueError(f"generator cap: {m} generators exceed the cap {cap}")
    pts = [(0,) * Z.ambient_dim]
    for v in Z.generators:
        pts = pts + [tuple(a + b for a, b in zip(p, v)) for p in pts]
    return VPolytope.from_points(pts)


def zonotope_volume(Z: Zonotope) -> int:
    """Sum of ``|det|`` over all n-subsets of generators."""
    n = Z.ambient_dim
    return sum(abs(det(from_columns(S, n))) for S in combinations(Z.generators, n))


def _independent_subsets(gens, i):
    n = len(gens[0]) if gens else 0
    for S in combinations(gens, i):
        if rank(from_columns(S, n)) == i:
            yield S


def ehrhart_stanley(Z: Zonotope) -> EhrhartPoly:
    """``g_i`` = sum over independent i-subsets ``X`` of ``gcd(i-minors of X)``.

    The polynomial has degree ``dim Z``.
    """
    gens = Z.nonzero_generators()
    n = Z.ambient_dim
    coeffs = [Fraction(1)]
    for i in range(1, (rank(gens) if gens else 0) + 1):
        coeffs.append(Fraction(sum(gcd_of_minors(from_columns(S, n))
                                   for S in _independent_subsets(gens, i))))
    return EhrhartPoly(tuple(coeffs))


def ehrhart_geometric(Z: Zonotope) -> EhrhartPoly:
    """``g_i`` = sum over i-subsets ``J`` of ``vol_i(P_J) / det(lin P_J ∩ Z^n)``.

    For independent ``J`` that ratio is the index of the lattice generated by
    ``v_j, j in J`` inside ``lin P_J ∩ Z^n``, which is computed from a basis
    of the saturation; dependent subsets contribute zero.
    """
    gens = Z.nonzero_generators()
    n = Z.ambient_dim
    coeffs = [Fraction(1)]
    for i in range(1, (rank(gens) if gens else 0) + 1):
        coeffs.append(Fraction(sum(sublattice_index(from_columns(S, n))
                                   for S in _independent_subsets(gens, i))))
    return EhrhartPoly(tuple(coeffs))


def is_general_position(Z: Zonotope) -> bool:
    n = Z.ambient_dim
    if len(Z.generators) < n:
        raise ValueError("fewer generators than the dimension")
    return all(det(from_columns(S, n)) != 0 for S in combinations(Z.generators, n))


def is_primitive(v: Sequence[int]) -> bool:
    if not any(v):
        raise ValueError("the zero vector is not primitive")
    return content(v) == 1


def _bipartite_matching(adj: list[list[int]], ncols: int) -> list[int]:
    """Perfect matching by augmenting paths; returns the column of each row."""
    match_col = [-1] * ncols

    def augment(r, seen):
        for c in adj[r]:
            if not seen[c]:
                seen[c] = True
                if match_col[c] < 0 or augment(match_col[c], seen):
                    match_col[c] = r
                    return True
        return False

    for r in range(len(adj)):
        if not augment(r, [False] * ncols):
            raise ArithmeticError("no perfect matching")
    row_to_col = [-1] * len(adj)
    for c, r in enumerate(match_col):
        row_to_col[r] = c
    return row_to_col


def basis_exchange_bijection(b: Sequence[Sequence[int]], a: Sequence[Sequence[int]],
                             i: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """A bijection ``I -> phi(I)`` from i-subsets to (n-i)-subsets of ``range(n)``
    with ``{b_k : k in I} ∪ {a_j : j in phi(I)}`` a basis for every ``I``.

    Found as a perfect matching on the nonzero pattern of the matrix of
    determinants ``det[b_I | a_J]``.  Indices are zero-based.
    """
    n = len(b)
    if len(a) != n or rank(b) != n or rank(a) != n:
        raise ValueError("both families must be bases")
    if not 1 <= i <= n - 1:
        raise ValueError("i must lie in 1..n-1")
    rows = list(combinations(range(n), i))
    cols = list(combinations(range(n), n - i))
    adj = []
    for I in rows:
        adj.append([c for c, J in enumerate(cols)
                    if det(from_columns([b[k] for k in I] + [a[j] for j in J], n)) != 0])
    match = _bipartite_matching(adj, len(cols))
    return {I: cols[c] for I, c in zip(rows, match)}
