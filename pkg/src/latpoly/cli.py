"""Command-line front end.  Every subcommand reads and writes JSON.

Exit codes: 0 success, 2 malformed input, 3 failed precondition or
enumeration limit, 4 internal error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import jsonio
from .conjecture import coefficient_report, sigma, reciprocal_minima
from .lattice_face import check_lattice_face, verify_liu
from .lp import EnumerationLimitError
from .minima import successive_minima
from .polytopes import (VPolytope, difference_gauge_view, ehrhart, is_symmetric,
                        symmetric_gauge_view)
from .qfamily import q_family, q_family_ehrhart_closed, q_l_poly, q_sigma_closed
from .zonotopes import (Zonotope, as_vpolytope, ehrhart_geometric, ehrhart_stanley,
                        zonotope_volume)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4
DEFAULT_MAX_BOX = 10 ** 7

fmt = jsonio.fmt


class PreconditionError(ValueError):
    pass


def _coeffs(poly) -> list[str]:
    return [fmt(c) for c in poly.coefficients]


def _read_doc(args):
    if args.json is not None:
        text = args.json
    elif args.input is not None:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise jsonio.InputError(f"cannot read {args.input}: {exc}") from exc
    else:
        raise jsonio.InputError("one of --input or --json is required")
    return jsonio.load_body(jsonio.loads(text))


def _polytope(body) -> VPolytope:
    return as_vpolytope(body) if isinstance(body, Zonotope) else body


def cmd_ehrhart(args) -> dict:
    body = _read_doc(args)
    P = _polytope(body)
    interp = ehrhart(P, args.max_box)
    out = {"coefficients": _coeffs(interp)}
    if isinstance(body, Zonotope):
        stanley = ehrhart_stanley(body)
        out["stanley"] = _coeffs(stanley)
        out["agree"] = stanley.coefficients == interp.coefficients
    return out


def cmd_minima(args) -> dict:
    P = _polytope(_read_doc(args))
    if args.difference:
        K = difference_gauge_view(P)
    else:
        if not is_symmetric(P):
            raise PreconditionError("polytope is not 0-symmetric; use --difference for P - P")
        K = symmetric_gauge_view(P)
    return jsonio.dump_minima(successive_minima(K, args.max_box))


def cmd_report(args) -> dict:
    body = _read_doc(args)
    P = _polytope(body)
    zon = body if isinstance(body, Zonotope) else None
    return jsonio.dump_report(P, coefficient_report(P, zon, args.max_box))


def cmd_latticeface(args) -> dict:
    P = _polytope(_read_doc(args))
    rep = check_lattice_face(P)
    out = {
        "is_lattice_face": rep.is_lattice_face,
        "failing_subset": None if rep.failing_subset is None
        else [[jsonio.number(x) for x in v] for v in rep.failing_subset],
        "failure_kind": rep.failure_kind,
        "k": rep.k,
    }
    if args.verify_liu:
        out["liu"] = None
        if rep.is_lattice_face:
            out["liu"] = [{"i": r.i, "g": fmt(r.g), "volume": fmt(r.volume), "equal": r.equal}
                          for r in verify_liu(P)]
    return out


def cmd_qfamily(args) -> dict:
    n, l = args.n, args.l
    if n < 2 or l < 1:
        raise PreconditionError("need n >= 2 and l >= 1")
    inst = q_family(n, l)
    closed = q_family_ehrhart_closed(n, l)
    interp = ehrhart(inst.polytope, args.max_box)
    sig = [q_sigma_closed(n, l, i) for i in range(n + 1)]
    recips = reciprocal_minima(inst.polytope)
    return {
        "polytope": jsonio.dump_polytope(inst.polytope),
        "closed_form": _coeffs(closed),
        "interpolated": _coeffs(interp),
        "agree": closed.coefficients == interp.coefficients,
        "sigma": [fmt(s) for s in sig],
        "sigma_from_minima_agree": sig == [sigma(recips, i) for i in range(n + 1)],
        "L_poly": [fmt(c) for c in q_l_poly(n, l)],
    }


def cmd_zonotope_coeffs(args) -> dict:
    Z = _read_doc(args)
    if not isinstance(Z, Zonotope):
        raise jsonio.InputError("expected a zonotope document with 'generators'")
    stanley = ehrhart_stanley(Z)
    geometric = ehrhart_geometric(Z)
    out = {"stanley": _coeffs(stanley), "geometric": _coeffs(geometric),
           "volume": zonotope_volume(Z)}
    if Z.dim == Z.ambient_dim:
        interp = ehrhart(as_vpolytope(Z), args.max_box)
        out["interpolated"] = _coeffs(interp)
        out["agree"] = stanley.coefficients == geometric.coefficients == interp.coefficients
    else:
        out["interpolated"] = None
        out["agree"] = stanley.coefficients == geometric.coefficients
    return out


COMMANDS = {
    "ehrhart": cmd_ehrhart,
    "minima": cmd_minima,
    "report": cmd_report,
    "latticeface": cmd_latticeface,
    "qfamily": cmd_qfamily,
    "zonotope-coeffs": cmd_zonotope_coeffs,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--input", metavar="FILE", help="JSON document to read")
            src.add_argument("--json", metavar="STRING", help="inline JSON document")
        p.add_argument("--output", metavar="FILE", help="write the result here instead of stdout")
        p.add_argument("--max-box", type=int, default=DEFAULT_MAX_BOX,
                       help="cap on lattice points in an enumeration box (default 10^7)")
        return p

    common(sub.add_parser("ehrhart", help="Ehrhart coefficients of a polytope or zonotope"))
    p = common(sub.add_parser("minima", help="successive minima of a symmetric polytope"))
    p.add_argument("--difference", action="store_true", help="use the difference body P - P")
    common(sub.add_parser("report", help="Ehrhart coefficients against the sigma bounds"))
    p = common(sub.add_parser("latticeface", help="lattice-face check"))
    p.add_argument("--verify-liu", action="store_true", help="compare g_i with projection volumes")
    p = common(sub.add_parser("qfamily", help="closed forms for the Q family"), with_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    common(sub.add_parser("zonotope-coeffs", help="zonotope coefficients by three formulas"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except jsonio.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, EnumerationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = jsonio.dumps(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
