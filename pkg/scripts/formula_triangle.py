"""Compare the three zonotope Ehrhart formulas on random instances and time them."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from latpoly.corpus import random_zonotopes
from latpoly.polytopes import ehrhart
from latpoly.zonotopes import as_vpolytope, ehrhart_geometric, ehrhart_stanley


@dataclass
class Config:
    count: int = 100
    seed: int = 0
    n_max: int = 3
    m_max: int = 5
    entry: int = 3


def run(cfg: Config) -> int:
    timings = {"stanley": 0.0, "geometric": 0.0, "interpolated": 0.0}
    mismatches = 0
    for Z in random_zonotopes(cfg.count, cfg.seed, cfg.n_max, cfg.m_max, cfg.entry):
        out = {}
        for name, f in (("stanley", ehrhart_stanley), ("geometric", ehrhart_geometric),
                        ("interpolated", lambda Z: ehrhart(as_vpolytope(Z)))):
            t0 = time.perf_counter()
            out[name] = f(Z).coefficients
            timings[name] += time.perf_counter() - t0
        if len(set(out.values())) != 1:
            mismatches += 1
            print("mismatch:", Z.generators, out)
    print(f"{cfg.count} zonotopes, {mismatches} mismatches")
    for name, t in timings.items():
        print(f"  {name:12s} {t:.2f}s")
    return mismatches


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for f in ("count", "seed", "n_max", "m_max", "entry"):
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=getattr(Config, f))
    args = ap.parse_args()
    cfg = Config(args.count, args.seed, args.n_max, args.m_max, args.entry)
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
