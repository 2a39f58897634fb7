"""Search the Q family for the first l at which g_i exceeds c * sigma_i."""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field

from latpoly.conjecture import sigma_of_polytope
from latpoly.jsonio import fmt
from latpoly.polytopes import ehrhart
from latpoly.qfamily import find_violation, g_second, g_third, q_family, q_sigma_closed


@dataclass
class Config:
    dims: list = field(default_factory=lambda: [3, 4, 5])
    factors: list = field(default_factory=lambda: [1, 10])
    l_max: int = 400
    confirm: bool = True  # recount the n = 3 hits exactly


def run(cfg: Config) -> list[dict]:
    rows = []
    for n in cfg.dims:
        for i in (n - 2, n - 3):
            if i < 1 or (i == n - 3 and n < 4):
                continue
            g = g_second if i == n - 2 else g_third
            for c in cfg.factors:
                l = find_violation(n, i, c, cfg.l_max)
                row = {"n": n, "i": i, "c": c, "l": l}
                if l is not None:
                    row["g"] = fmt(g(n, l))
                    row["sigma"] = fmt(q_sigma_closed(n, l, i))
                    if cfg.confirm and n == 3:
                        P = q_family(n, l).polytope
                        row["confirmed"] = (ehrhart(P)[i] == g(n, l)
                                            and sigma_of_polytope(P, i) == q_sigma_closed(n, l, i))
                rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+")
    ap.add_argument("--factors", type=int, nargs="+")
    ap.add_argument("--l-max", type=int)
    ap.add_argument("--no-confirm", action="store_true")
    args = ap.parse_args()
    cfg = Config()
    if args.dims:
        cfg.dims = args.dims
    if args.factors:
        cfg.factors = args.factors
    if args.l_max:
        cfg.l_max = args.l_max
    cfg.confirm = not args.no_confirm
    print(json.dumps({"config": asdict(cfg), "rows": run(cfg)}, indent=2))


if __name__ == "__main__":
    main()
