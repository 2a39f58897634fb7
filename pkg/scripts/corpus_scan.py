"""Coefficient reports over the seeded corpus, one line per instance."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from latpoly.conjecture import coefficient_report
from latpoly.corpus import full_corpus
from latpoly.jsonio import fmt
from latpoly.polytopes import is_full_dimensional


@dataclass
class Config:
    seed: int = 0
    max_box: int = 10 ** 7


def run(cfg: Config) -> int:
    floor_failures = 0
    for inst in full_corpus(cfg.seed):
        P = inst.polytope
        if not (P.is_lattice and is_full_dimensional(P)):
            print(f"{inst.name:28s} skipped (not a full-dimensional lattice polytope)")
            continue
        t0 = time.perf_counter()
        rep = coefficient_report(P, inst.zonotope, cfg.max_box)
        fails = ", ".join(f"{r.name}[{r.i}]" for r in rep.failures()) or "-"
        fb = rep.floor_bound
        floor_failures += not fb.holds
        print(f"{inst.name:28s} n={P.ambient_dim} count={fb.count:<6d} floor={fb.bound:<6d} "
              f"L={fmt(rep.l_value):<10s} failed: {fails}  ({time.perf_counter() - t0:.2f}s)")
    print(f"floor-product failures: {floor_failures}")
    return floor_failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--max-box", type=int, default=Config.max_box)
    args = ap.parse_args()
    raise SystemExit(1 if run(Config(args.seed, args.max_box)) else 0)


if __name__ == "__main__":
    main()
