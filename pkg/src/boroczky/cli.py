"""Command-line front end.  JSON is the machine interface; SVG is for looking at."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_MISMATCH = 0, 2, 3, 4

# fat-point computations above this n need much larger fields
BIG_N = 24


class UsageError(ValueError):
    pass


class MismatchError(AssertionError):
    """A result that is known to hold came out differently."""

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report


def _common(p: argparse.ArgumentParser):
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=["json", "svg"], default=None)
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs single-threaded")
    p.add_argument("--big", action="store_true", help="allow large-field runs (n >= 24) with no runtime promise")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boroczky", description="Exact computations on Boroczky line configurations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _common(p)
        return p

    p = cmd("build", "lines, intersection points and counts")
    p.add_argument("--n", type=int, required=True)
    p = cmd("orbits", "orbit decomposition of the triple points")
    p.add_argument("--n", type=int, required=True)
    p = cmd("alpha", "least degree of a form vanishing to order m at the triple points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p = cmd("mingens", "Hilbert function and minimal generator degrees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p = cmd("witness", "product-of-lines witness against I^(3) in I^2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim-check", action="store_true", help="also compute dim (I^(3))_n")
    p = cmd("contain", "check (I^(3))_d in (I^2)_d for every d up to a bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", type=int, required=True)
    p = cmd("elliptic", "configuration built from the 6-torsion of the Fermat cubic")
    p.add_argument("--report", help="same as --out")
    p.add_argument("--check-table", action="store_true", help="fail unless the torsion table matches the reference")
    p.add_argument("--skip-containment", action="store_true")
    p.add_argument("--dim-check", action="store_true", help="also compute dim (I^(3))_18 (slow)")
    p = cmd("render", "SVG drawing of the configuration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radius", type=float, default=None)
    p = cmd("sweep", "build, count and orbit-decompose a range of n")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    return parser


def _check_n(n: int, big: bool = True, fat: bool = False):
    if n < 3:
        raise UsageError(f"--n must be >= 3, got {n}")
    if fat and n >= BIG_N and not big:
        raise UsageError(f"n={n} needs --big (large cyclotomic field, no runtime guarantee)")


def _build_report(config) -> dict:
    from .configuration import incidence_report, triple_count_formula
    rep = incidence_report(config)
    points = [
        {"coords": list(p.key()), "multiplicity": k, "lines": list(idx)}
        for p, k, idx in rep.all_points()
    ]
    points.sort(key=lambda d: (d["coords"], d["multiplicity"]))
    out = {
        "n": config.n,
        "field": {"m": config.conductor},
        "lines": [l.to_json(i) for i, l in enumerate(config.lines)],
        "tangent_indices": list(config.tangent_indices),
        "points": points,
        "counts": {"triple": rep.count(3), "double": rep.count(2)},
        "histogram": {str(k): v for k, v in rep.histogram().items()},
        "anomalies": rep.anomalies,
        "formula": {"triple": triple_count_formula(config.n)},
    }
    return out


def cmd_build(args) -> dict:
    from .configuration import build_config
    _check_n(args.n)
    report = _build_report(build_config(args.n))
    if report["counts"]["triple"] != report["formula"]["triple"] or report["anomalies"]:
        raise MismatchError("triple count or multiplicity check failed", report)
    return report


def _orbit_report(n: int) -> dict:
    from .configuration import build_config, triple_points
    from .symmetry import orbit_count_formulas, orbit_decompose, orbit_profile, pi3_rotation_stabilizes
    config = build_config(n)
    B = triple_points(config)
    orbits = orbit_decompose(B)
    prof = orbit_profile(orbits)
    o3, o6 = orbit_count_formulas(n)
    geo = {"O1": prof.get(1, 0), "O3": prof.get(3, 0), "O6": prof.get(6, 0)}
    return {
        "n": n,
        "orbits": [
            {"size": o.size, "representative": o.representative.to_json()["coords"],
             "points": [p.to_json()["coords"] for p in o.points]}
            for o in orbits
        ],
        "formula": {"O3": o3, "O6": o6},
        "geometric": geo,
        "match": geo["O3"] == o3 and geo["O6"] == o6,
        "pi3_rotation_stabilizes": pi3_rotation_stabilizes(B),
    }


def cmd_orbits(args) -> dict:
    _check_n(args.n)
    if args.n % 3:
        raise UsageError("orbits need 3 | n (the action closes on the triple points only then)")
    rep = _orbit_report(args.n)
    if args.n % 6 == 0 and not rep["match"]:
        raise MismatchError("orbit counts disagree with the closed forms", rep)
    return rep


def _scheme(n: int):
    from .configuration import build_config
    from .fatpoints import boroczky_scheme
    config = build_config(n)
    return config, boroczky_scheme(config)


def cmd_alpha(args) -> dict:
    from .fatpoints import alpha
    _check_n(args.n, args.big, fat=True)
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    _, scheme = _scheme(args.n)
    return {"scheme": scheme.label, "alpha": {"m": args.m, "value": alpha(scheme, args.m)}}


def cmd_mingens(args) -> dict:
    from .fatpoints import minimal_generators
    _check_n(args.n, args.big, fat=True)
    if args.dmax < 1:
        raise UsageError("--dmax must be >= 1")
    _, scheme = _scheme(args.n)
    s = minimal_generators(scheme, args.dmax)
    return {
        "scheme": scheme.label,
        "alpha": {"m": 1, "value": s.alpha},
        "hilbert_function": {str(d): v for d, v in sorted(s.hilbert_function.items())},
        "generators": s.generator_degrees,
        "complete": s.complete,
        "status": "complete" if s.complete else "possibly incomplete",
    }


def cmd_witness(args) -> dict:
    from .fatpoints import containment_witness
    _check_n(args.n, args.big, fat=True)
    config, scheme = _scheme(args.n)
    v = containment_witness(config.lines, scheme.points, scheme.label, dim_check=args.dim_check)
    rep = v.to_json()
    if args.n % 6 == 0 and args.n >= 12 and v.verdict != "NOT_CONTAINED":
        raise MismatchError("expected the product of lines to refute containment", rep)
    return rep


def cmd_contain(args) -> dict:
    from .fatpoints import containment_up_to_degree
    _check_n(args.n, args.big, fat=True)
    if args.upto < 0:
        raise UsageError("--upto must be >= 0")
    _, scheme = _scheme(args.n)
    return containment_up_to_degree(scheme, args.upto).to_json()


def cmd_elliptic(args) -> dict:
    from . import elliptic as ell
    from .fatpoints import containment_witness
    table = ell.generate_E6(check_table=False)
    bad = ell.table_mismatches(table)
    cfg = ell.build_elliptic_config(table, check=False)
    rep = cfg.incidence
    points = [{"coords": list(p.key()), "multiplicity": k, "lines": list(idx)} for p, k, idx in rep.all_points()]
    points.sort(key=lambda d: (d["coords"], d["multiplicity"]))
    out = {
        "n": len(cfg.lines),
        "field": {"generators": list(table.curve.field.generators), "relations": ["s^3 + 2", "t^2 + t + 1"]},
        "lines": [l.to_json(i) for i, l in enumerate(cfg.lines)],
        "tangent_labels": [list(ij) for ij in sorted(cfg.tangent_labels())],
        "points": points,
        "counts": {"triple": rep.count(3), "double": rep.count(2), "at_least_double": rep.count_at_least(2),
                   "at_least_quadruple": rep.count_at_least(4)},
        "torsion_table": [[table.grid[i][j].to_json()["coords"] for j in range(6)] for i in range(6)],
        "table_mismatches": bad,
        "s3_profile": {str(k): v for k, v in ell.s3_orbit_profile(cfg.triple_points).items()},
        "problems": ell.statistics_problems(cfg),
    }
    if not args.skip_containment:
        v = containment_witness(cfg.lines, cfg.triple_points, "elliptic:E6", dim_check=args.dim_check)
        out["containment"] = v.to_json()
    if (args.check_table and bad) or out["problems"]:
        raise MismatchError("elliptic configuration differs from the reference values", out)
    if "containment" in out and out["containment"]["witness"]["verdict"] != "NOT_CONTAINED":
        raise MismatchError("expected the product of the 18 lines to refute containment", out)
    return out


def cmd_render(args) -> str:
    from .configuration import build_config
    from .render import render_svg
    _check_n(args.n)
    if args.format == "json":
        raise UsageError("render produces SVG only")
    return render_svg(build_config(args.n), {"radius": args.radius} if args.radius else None)


def cmd_sweep(args) -> dict:
    from .configuration import build_config, incidence_report, triple_count_formula
    if args.n_from < 3 or args.n_to < args.n_from:
        raise UsageError("need 3 <= n-from <= n-to")
    rows = []
    ok = True
    for n in range(args.n_from, args.n_to + 1):
        rep = incidence_report(build_config(n))
        row = {"n": n, "triple": rep.count(3), "double": rep.count(2), "formula": triple_count_formula(n),
               "anomalies": rep.anomalies}
        row["match"] = row["triple"] == row["formula"] and not rep.anomalies
        if n % 3 == 0:
            orb = _orbit_report(n)
            row["orbits"] = {"formula": orb["formula"], "geometric": orb["geometric"], "match": orb["match"]}
            if n % 6 == 0 and not orb["match"]:
                row["match"] = False
        ok = ok and row["match"]
        rows.append(row)
    out = {"n_from": args.n_from, "n_to": args.n_to, "rows": rows, "all_match": ok}
    if not ok:
        raise MismatchError("sweep found a disagreement", out)
    return out


COMMANDS = {
    "build": cmd_build, "orbits": cmd_orbits, "alpha": cmd_alpha, "mingens": cmd_mingens,
    "witness": cmd_witness, "contain": cmd_contain, "elliptic": cmd_elliptic, "render": cmd_render,
    "sweep": cmd_sweep,
}


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def _emit(payload, args):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True, default=_default) + "\n"
    out = getattr(args, "report", None) or args.out
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(kind: str, exc: BaseException, code: int, module: str = "") -> int:
    rec = {"error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}
    if module:
        rec["error"]["module"] = module
    sys.stderr.write(json.dumps(rec, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.threads < 1:
        return _error("usage", UsageError("--threads must be >= 1"), EXIT_USAGE)
    try:
        payload = COMMANDS[args.command](args)
    except UsageError as e:
        return _error("usage", e, EXIT_USAGE)
    except MismatchError as e:
        if e.report is not None:
            _emit(e.report, args)
        return _error("mismatch", e, EXIT_MISMATCH)
    except Exception as e:  # computation failures
        tb = e.__traceback__
        while tb and tb.tb_next:
            tb = tb.tb_next
        module = tb.tb_frame.f_globals.get("__name__", "") if tb else ""
        return _error("computation", e, EXIT_COMPUTE, module)
    _emit(payload, args)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
