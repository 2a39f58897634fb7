"""Seeded test and experiment corpus: named polytopes and zonotopes."""
from __future__ import annotations

import random
from typing import NamedTuple, Optional

from .lattice_face import p_t_polytope
from .linalg import rank
from .polytopes import VPolytope, cross_polytope, cube, cyclic_polytope, simplex
from .qfamily import q_family
from .zonotopes import Zonotope, as_vpolytope


class Instance(NamedTuple):
    name: str
    polytope: VPolytope
    zonotope: Optional[Zonotope] = None


def random_zonotope(rng: random.Random, n: int, m: int, entry: int = 3) -> Zonotope:
    """Full-dimensional zonotope with ``m`` nonzero generators in ``[-entry, entry]^n``."""
    if m < n:
        raise ValueError("fewer generators than the dimension")
    while True:
        gens = []
        while len(gens) < m:
            v = tuple(rng.randint(-entry, entry) for _ in range(n))
            if any(v):
                gens.append(v)
        if rank(gens) == n:
            return Zonotope(n, tuple(gens))


def random_zonotopes(count: int, seed: int = 0, n_max: int = 3, m_max: int = 5,
                     entry: int = 3) -> list[Zonotope]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        m = rng.randint(n, max(n, m_max))
        out.append(random_zonotope(rng, n, m, entry))
    return out


def random_parallelepipeds(count: int, seed: int = 0, dims=(2, 3), entry: int = 3) -> list[Zonotope]:
    rng = random.Random(seed)
    return [random_zonotope(rng, n, n, entry) for n in (rng.choice(dims) for _ in range(count))]


def centered(Z: Zonotope) -> VPolytope:
    """``sum [-v, v]``: the translate of ``2Z`` centred at the origin."""
    total = [sum(v[i] for v in Z.generators) for i in range(Z.ambient_dim)]
    return VPolytope.from_points([tuple(2 * x - s for x, s in zip(p, total))
                                  for p in as_vpolytope(Z).vertices])


def symmetric_lattice_face() -> list[Instance]:
    """Symmetric lattice-face examples, vertices on the curve ``(t, t^3)``."""
    return [
        Instance("odd-curve-1-2", VPolytope.from_points([(1, 1), (-1, -1), (2, 8), (-2, -8)])),
        Instance("odd-curve-1-3", VPolytope.from_points([(1, 1), (-1, -1), (3, 27), (-3, -27)])),
        Instance("parallelogram-1-2", VPolytope.from_points([(1, -1), (-1, 1), (2, 4), (-2, -4)])),
    ]


def symmetric_corpus(seed: int = 0) -> list[Instance]:
    """0-symmetric full-dimensional lattice polytopes with ``n <= 3``."""
    out = []
    for n in (1, 2, 3):
        out.append(Instance(f"box-{n}", cube(n, -1, 1)))
        out.append(Instance(f"cross-{n}", cross_polytope(n)))
    for n in (2, 3):
        for l in (1, 2, 3):
            out.append(Instance(f"q-{n}-{l}", q_family(n, l).polytope))
    for t in (2, 3):
        out.append(Instance(f"p_t-{t}", p_t_polytope(t)))
    out.extend(symmetric_lattice_face())
    rng = random.Random(seed)
    for j in range(6):
        n = 2 + j % 2
        Z = random_zonotope(rng, n, n + j % 3, 2)
        out.append(Instance(f"centered-zonotope-{j}", centered(Z)))
    return out


def full_corpus(seed: int = 0) -> list[Instance]:
    """Every corpus instance in dimension at most 3."""
    out = []
    for n in (1, 2, 3):
        out.append(Instance(f"cube-{n}", cube(n)))
        out.append(Instance(f"simplex-{n}", simplex(n)))
    for n in (2, 3):
        out.append(Instance(f"cyclic-{n}", cyclic_polytope(range(n + 1), n)))
    out.append(Instance("cyclic-3-wide", cyclic_polytope([0, 1, 2, 3, 4], 3)))
    out.append(Instance("q-3-4", q_family(3, 4).polytope))
    out.extend(symmetric_corpus(seed))
    for j, Z in enumerate(random_zonotopes(8, seed + 1, entry=2)):
        out.append(Instance(f"zonotope-{j}", as_vpolytope(Z), Z))
    for j, Z in enumerate(random_parallelepipeds(6, seed + 2)):
        out.append(Instance(f"parallelepiped-{j}", as_vpolytope(Z), Z))
    return out
