"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 invariant violation (for example a
classifier/evaluator mismatch or a failed spot-check).
"""

import argparse
import os
import sys
from dataclasses import dataclass

from . import __version__
from .checks import SUITES, run_suite
from .classify import HODGE, classify, crosscheck, higher_vanishing, scan_degrees
from .dgla import ArtinRing
from .errors import InputError, InvariantViolation, ResourceError, UnsupportedRepresentation
from .reports import (
    classify_json,
    dumps,
    load_cone,
    parse_degree,
    parse_hodge,
    parse_pair,
    report_rows,
    t1_rows,
    tsv,
)
from .surface import (
    DEFAULT_WINDOW,
    MonomialBivector,
    default_window,
    e1_page,
    poisson_cohomology,
    surface_t1_dims,
)
from .t1 import t1_dim

COMMANDS = ("dual", "t1", "classify", "surface", "check", "window")


@dataclass
class RunConfig:
    command: str
    cone: str = None
    degree: str = None
    scan: tuple = None  # (q_max, p_max)
    window: int = None
    hodge: tuple = HODGE
    artin: str = None
    format: str = "json"
    seed: int = 0
    trials: int = None
    n: int = None
    report: str = "dims"
    mu_p: str = "pig"
    suite: str = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in ("json", "tsv"):
            raise InputError(f"unknown format {self.format!r}")
        if self.window is not None and self.window < 1:
            raise InputError("window bound must be positive")
        if self.scan is not None and min(self.scan) < 0:
            raise InputError("scan bounds must be nonnegative")
        if self.trials is not None and self.trials < 1:
            raise InputError("trials must be positive")


def _need(value, flag):
    if value is None:
        raise InputError(f"missing required option {flag}")
    return value


def _dual(cfg):
    cone = load_cone(_need(cfg.cone, "--cone"))
    data = {"schema": 1, **cone.to_json()}
    return 0, dumps(data)


def _label(report, cone, R):
    return report.labels_at(cone, R) or "-"


def _t1(cfg):
    cone = load_cone(_need(cfg.cone, "--cone"))
    if (cfg.degree is None) == (cfg.scan is None):
        raise InputError("give exactly one of --degree or --scan")
    report = classify(cone)
    records = []
    if cfg.degree is not None:
        R = parse_degree(cfg.degree, cone)
        for i in cfg.hodge:
            records.append((R, i, t1_dim(cone, R, i), _label(report, cone, R)))
    else:
        q_max, p_max = cfg.scan
        for R in scan_degrees(cone, q_max, p_max):
            for i in cfg.hodge:
                dim = t1_dim(cone, R, i)
                if dim:
                    records.append((R, i, dim, _label(report, cone, R)))
    if cfg.format == "tsv":
        return 0, tsv(t1_rows(records))
    return 0, dumps(
        {
            "schema": 1,
            "rows": [
                {"degree": list(R), "hodge_i": i, "dim": d, "case_label": lab}
                for R, i, d, lab in records
            ],
        }
    )


def _classify(cfg):
    cone = load_cone(_need(cfg.cone, "--cone"))
    report = classify(cone)
    code = 0
    data = classify_json(cone, report)
    if cfg.scan is not None:
        q_max, p_max = cfg.scan
        bad = crosscheck(cone, q_max, p_max)
        higher = higher_vanishing(cone, q_max, p_max)
        data["crosscheck"] = {
            "q_max": q_max,
            "p_max": p_max,
            "mismatches": [
                {
                    "degree": list(m.degree),
                    "classified": list(m.classified),
                    "evaluated": list(m.evaluated),
                }
                for m in bad
            ],
            "higher_nonzero": [list(R) for R in higher],
        }
        if bad or higher:
            code = 2
    if cfg.format == "tsv":
        return code, tsv(report_rows(report, cone))
    return code, dumps(data)


def _surface(cfg):
    n = _need(cfg.n, "--n")
    d = cfg.window if cfg.window is not None else default_window()
    if cfg.report == "dims":
        dims = surface_t1_dims(n, d)
        nonzero = [(R, v) for R, v in sorted(dims.items()) if any(v)]
        if cfg.format == "tsv":
            rows = []
            for R, v in nonzero:
                k = R[0]
                for i, dim in zip((1, 2), v):
                    if dim:
                        rows.append((R[0], R[1], None, i, dim, f"{k}S2"))
            return 0, tsv(rows)
        return 0, dumps(
            {
                "schema": 1,
                "n": n,
                "window": d,
                "degrees_scanned": len(dims),
                "nonzero": [{"degree": list(R), "dims": {"1": a, "2": b}} for R, (a, b) in nonzero],
            }
        )
    if cfg.report == "e1":
        if cfg.format == "tsv":
            raise InputError("the e1 report is JSON only")
        return 0, dumps(e1_page(n).to_json())
    if cfg.report == "poisson":
        if cfg.format == "tsv":
            raise InputError("the poisson report is JSON only")
        mu_p = MonomialBivector.named(n, cfg.mu_p)
        return 0, dumps(poisson_cohomology(n, mu_p, d).to_json())
    raise InputError(f"unknown surface report {cfg.report!r}")


def _check(cfg):
    suite = _need(cfg.suite, "--suite")
    artin = ArtinRing.parse(cfg.artin) if cfg.artin else None
    rep = run_suite(suite, seed=cfg.seed, trials=cfg.trials, artin=artin)
    return (0 if rep.passed else 2), dumps(rep.to_json())


def _window(cfg):
    raw = os.environ.get("TORICDEF_WINDOW")
    d = default_window()
    return 0, dumps(
        {
            "schema": 1,
            "window": d,
            "source": "TORICDEF_WINDOW" if raw else "default",
            "default": DEFAULT_WINDOW,
        }
    )


DISPATCH = {
    "dual": _dual,
    "t1": _t1,
    "classify": _classify,
    "surface": _surface,
    "check": _check,
    "window": _window,
}


def run(cfg):
    """(exit code, output text) for a RunConfig; errors become (code, message)."""
    try:
        return DISPATCH[cfg.command](cfg)
    except (InputError, UnsupportedRepresentation, ResourceError) as exc:
        return 1, f"error: {exc}\n"
    except InvariantViolation as exc:
        return 2, f"invariant violation: {exc}\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toricdef", description="Deformations of toric Gorenstein singularities."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--artin", help='Artin coefficients, e.g. "t^3"')
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dual", help="dual rays, R* and edge lengths of a cone")
    p.add_argument("--cone", required=True)

    p = sub.add_parser("t1", help="evaluate dim T¹_(i)(-R)")
    p.add_argument("--cone", required=True)
    p.add_argument("--degree", help="x,y,z or sym:q,j,p (= q R* - p s_j, j from 1)")
    p.add_argument("--scan", help="q_max,p_max")
    p.add_argument("--hodge", default="1,2,3")
    p.add_argument("--format", choices=("json", "tsv"), default="tsv")

    p = sub.add_parser("classify", help="closed-form classification of nonzero degrees")
    p.add_argument("--cone", required=True)
    p.add_argument("--scan", nargs="?", const="5,20", help="crosscheck q_max,p_max (default 5,20)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("surface", help="A_n surfaces: T¹ table, E1 page, Poisson cohomology")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--report", choices=("dims", "e1", "poisson"), default="dims")
    p.add_argument("--mu-p", default="pig", help="pig, zero or a JSON file {n, b, m}")
    p.add_argument("--window", type=int)
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("check", help="seeded property suites")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--artin", dest="suite_artin")

    sub.add_parser("window", help="show the default window bound")
    return parser


def config_from_args(args):
    kw = {"command": args.command}
    if args.command == "check":
        kw.update(
            suite=args.suite,
            seed=args.seed,
            trials=args.trials,
            artin=args.suite_artin or args.artin,
        )
    elif args.command == "dual":
        kw.update(cone=args.cone)
    elif args.command == "t1":
        kw.update(
            cone=args.cone,
            degree=args.degree,
            scan=parse_pair(args.scan, "--scan") if args.scan else None,
            hodge=parse_hodge(args.hodge),
            format=args.format,
        )
    elif args.command == "classify":
        kw.update(
            cone=args.cone,
            scan=parse_pair(args.scan, "--scan") if args.scan else None,
            format=args.format,
        )
    elif args.command == "surface":
        if args.n < 1:
            raise InputError("--n must be positive")
        kw.update(
            n=args.n, report=args.report, mu_p=args.mu_p, window=args.window, format=args.format
        )
    if args.artin and args.command != "check":
        kw["artin"] = args.artin
    return RunConfig(**kw)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    code, text = run(cfg)
    (sys.stdout if code == 0 or text.startswith("{") else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
