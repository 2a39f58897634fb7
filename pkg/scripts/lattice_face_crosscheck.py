"""Compare the independent-subset lattice-face check with the exhaustive scan on random planar sets."""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from latpoly.lattice_face import check_lattice_face
from latpoly.polytopes import VPolytope


@dataclass
class Config:
    seconds: float = 30.0
    seed: int = 5
    radius: int = 4
    max_points: int = 6


def run(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    t0 = time.perf_counter()
    total = lattice_face = disagreements = 0
    while time.perf_counter() - t0 < cfg.seconds:
        r = cfg.radius
        pts = [(rng.randint(-r, r), rng.randint(-r, r)) for _ in range(rng.randint(1, cfg.max_points))]
        P = VPolytope.from_points(pts)
        fast = check_lattice_face(P).is_lattice_face
        slow = check_lattice_face(P, exhaustive=True).is_lattice_face
        total += 1
        lattice_face += fast
        if fast != slow:
            disagreements += 1
            print("disagreement:", pts, fast, slow)
    print(f"{total} point sets, {lattice_face} lattice-face, {disagreements} disagreements")
    return disagreements


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seconds", type=float, default=Config.seconds)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    raise SystemExit(1 if run(Config(args.seconds, args.seed)) else 0)


if __name__ == "__main__":
    main()
