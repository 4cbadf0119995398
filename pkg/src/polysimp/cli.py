"""Command-line front end.

    polysimp simplify --algo optf --eps 0.5 --input line.csv
    polysimp compare --eps 1 --factors 1,2,4 --input line.csv
    polysimp generate --instance triangle --c 2 --m 11 --verify
    polysimp render --input line.csv --overlay simple.csv --out pic.svg

Standard output carries data only; diagnostics go to standard error. Exit
codes: 0 success, 1 a generated claim failed, 2 bad arguments or unparsable
input, 3 brute-force guard exceeded, 4 file I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Optional

from .distances import (
    DistanceMeasure,
    frechet_value,
    hausdorff_directed_value,
    hausdorff_undirected_value,
)
from .fileio import PolylineParseError, dumps, format_csv, format_document, read_polyline
from .geometry import Polyline
from .instances import (
    PROFILES,
    gen_dpf_zigzag,
    gen_fig1_hausdorff_gap,
    gen_fig2_frechet_gap,
    gen_iif_gadget,
    gen_notsuf,
    gen_random,
    gen_triangle_zigzag,
    verify_claims,
)
from .opt_frechet import optimal_frechet
from .opt_hausdorff import DEFAULT_GUARD, GuardExceeded, brute_force_optimal, optimal_hausdorff_qp
from .render import render_free_space, render_polylines
from .simplify import Criterion, SimplificationResult, douglas_peucker, imai_iri

EXIT_OK, EXIT_CLAIM, EXIT_PARSE, EXIT_GUARD, EXIT_IO = 0, 1, 2, 3, 4

ALGOS = ("dph", "dpf", "iih", "iif", "optf", "opth-qp", "brute")
COMPARE_ALGOS = ("dph", "iih", "dpf", "iif", "optf", "opth-qp",
                 "brute-hausdorff_directed_PQ", "brute-frechet")
INSTANCES = ("fig1", "fig2", "triangle", "dpf-zigzag", "iif-gadget", "notsuf", "random")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunReport:
    algorithm: str
    eps: float
    eps_multiplier: float
    input_vertices: int
    output_vertices: int
    indices: List[int]
    measure: str
    certified_hausdorff: float
    certified_frechet: float
    wall_time_ms: Optional[float]


def run_algorithm(algo: str, P: Polyline, eps: float,
                  measure: DistanceMeasure = DistanceMeasure.HAUSDORFF_PQ) -> SimplificationResult:
    if algo == "dph":
        return douglas_peucker(P, eps, Criterion.HAUSDORFF)
    if algo == "dpf":
        return douglas_peucker(P, eps, Criterion.FRECHET)
    if algo == "iih":
        return imai_iri(P, eps, Criterion.HAUSDORFF)
    if algo == "iif":
        return imai_iri(P, eps, Criterion.FRECHET)
    if algo == "optf":
        return optimal_frechet(P, eps)
    if algo == "opth-qp":
        return optimal_hausdorff_qp(P, eps)
    if algo == "brute":
        return brute_force_optimal(P, eps, measure)
    if algo.startswith("brute-"):
        return brute_force_optimal(P, eps, DistanceMeasure(algo[len("brute-"):]))
    raise ValueError(f"unknown algorithm {algo!r}")


def _hausdorff_for(measure: DistanceMeasure, P: Polyline, Q: Polyline) -> float:
    if measure is DistanceMeasure.HAUSDORFF_QP:
        return hausdorff_directed_value(Q, P)
    if measure is DistanceMeasure.HAUSDORFF:
        return hausdorff_undirected_value(P, Q)
    return hausdorff_directed_value(P, Q)


def make_report(P: Polyline, res: SimplificationResult, eps: float, multiplier: float,
                elapsed_ms: Optional[float]) -> RunReport:
    """Certified values are recomputed here from the two polylines."""
    Q = res.polyline(P)
    measure = DistanceMeasure(res.measure)
    # Fréchet-certified algorithms still report the input-to-output Hausdorff value
    h_measure = DistanceMeasure.HAUSDORFF_PQ if measure is DistanceMeasure.FRECHET else measure
    return RunReport(res.algorithm, eps, multiplier, len(P), len(res.indices), list(res.indices),
                     h_measure.value, _hausdorff_for(h_measure, P, Q), frechet_value(P, Q), elapsed_ms)


# -- helpers -----------------------------------------------------------------

def _load(path) -> Polyline:
    try:
        P, _ = read_polyline(path)
    except PolylineParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None
    return P


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror or exc}") from None


def _nonneg(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0 or v == float("inf"):
        raise argparse.ArgumentTypeError(f"eps must be finite and >= 0, got {text}")
    return v


def _factors(text: str) -> List[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad factor list {text!r}") from None
    if not vals or any(not v > 0 for v in vals):
        raise argparse.ArgumentTypeError("factors must be positive numbers")
    return vals


# -- subcommands -------------------------------------------------------------

def cmd_simplify(args) -> int:
    P = _load(args.input)
    measure = DistanceMeasure(args.measure)
    if args.algo == "brute" and len(P) > DEFAULT_GUARD:
        raise CliError(EXIT_GUARD, f"brute force refuses n={len(P)} > guard={DEFAULT_GUARD}")
    t0 = time.perf_counter()
    res = run_algorithm(args.algo, P, args.eps, measure)
    elapsed = None if args.no_timing else round((time.perf_counter() - t0) * 1e3, 3)
    report = asdict(make_report(P, res, args.eps, 1.0, elapsed))
    Q = res.polyline(P)
    if args.format == "json":
        _emit(format_document(Q, report=report), args.output)
    else:
        _emit(format_csv(Q), args.output)
    if args.report:
        _emit(dumps({"report": report}) + "\n", args.report)
    return EXIT_OK


def _compare_cell(job):
    algo, P, eps = job
    return len(run_algorithm(algo, P, eps).indices)


def compare_counts(P: Polyline, eps: float, factors: List[float], jobs: int = 1):
    """Rows ``(algorithm, [count per factor])``; brute rows dropped above the guard."""
    algos = [a for a in COMPARE_ALGOS if not (a.startswith("brute") and len(P) > DEFAULT_GUARD)]
    cells = [(a, P, eps * f) for a in algos for f in factors]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(_compare_cell, cells))
    else:
        counts = [_compare_cell(c) for c in cells]
    k = len(factors)
    return [(a, counts[r * k:(r + 1) * k]) for r, a in enumerate(algos)]


def format_table(rows, factors) -> str:
    heads = ["algorithm"] + [f"x{f:g}" for f in factors]
    body = [[a] + [str(c) for c in counts] for a, counts in rows]
    widths = [max(len(r[i]) for r in [heads] + body) for i in range(len(heads))]
    lines = []
    for r in [heads] + body:
        lines.append("  ".join(r[0].ljust(widths[0]) if i == 0 else r[i].rjust(widths[i])
                               for i in range(len(r))).rstrip())
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> int:
    P = _load(args.input)
    if len(P) > DEFAULT_GUARD:
        print(f"note: n={len(P)} > guard={DEFAULT_GUARD}, brute-force rows omitted", file=sys.stderr)
    rows = compare_counts(P, args.eps, args.factors, args.jobs)
    doc = {"eps": args.eps, "factors": args.factors, "input_vertices": len(P),
           "rows": [{"algorithm": a, "counts": c} for a, c in rows]}
    doc_text = dumps(doc) + "\n"
    _emit(doc_text if args.format == "json" else format_table(rows, args.factors), args.output)
    if args.json:
        _emit(doc_text, args.json)
    return EXIT_OK


def build_instance(args):
    name = args.instance
    if name == "fig1":
        return gen_fig1_hausdorff_gap()
    if name == "fig2":
        return gen_fig2_frechet_gap()
    if name == "triangle":
        return gen_triangle_zigzag(args.c, args.m)
    if name == "dpf-zigzag":
        return gen_dpf_zigzag(args.c, args.m)
    if name == "iif-gadget":
        return gen_iif_gadget(args.reps)
    if name == "notsuf":
        return gen_notsuf()
    return gen_random(args.n, args.seed, args.profile)


def cmd_generate(args) -> int:
    try:
        inst = build_instance(args)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"invalid parameters for {args.instance}: {exc}") from None
    if isinstance(inst, Polyline):  # random polylines carry no claims
        P, claims, results = inst, [], None
    else:
        P = inst.polyline
        claims = [c.to_dict() for c in inst.claims]
        results = verify_claims(inst) if args.verify else None
    if results is not None:
        for d, r in zip(claims, results):
            d["passed"] = r.passed
            d["observed"] = r.observed
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.claim.algorithm} x{r.claim.eps_multiplier:g} {r.claim.op} "
                  f"{r.claim.expected!r} observed={r.observed!r}", file=sys.stderr)
    if args.format == "csv":
        _emit(format_csv(P), args.output)
    else:
        meta = None
        if not isinstance(inst, Polyline):
            meta = {"instance": inst.name, "eps": inst.eps, "factor_c": inst.factor_c,
                    "params": inst.params}
        _emit(format_document(P, claims=claims, report=meta), args.output)
    if results is not None and not all(r.passed for r in results):
        return EXIT_CLAIM
    return EXIT_OK


def cmd_render(args) -> int:
    P = _load(args.input)
    if args.free_space is not None:
        if args.eps is None:
            raise CliError(EXIT_PARSE, "--free-space needs --eps")
        svg = render_free_space(P, _load(args.free_space), args.eps, res=args.resolution)
    else:
        overlay = _load(args.overlay) if args.overlay else None
        if args.capsules and args.eps is None:
            raise CliError(EXIT_PARSE, "--capsules needs --eps")
        svg = render_polylines(P, overlay, args.eps, capsules=args.capsules)
    _emit(svg, args.out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polysimp", description="Polyline simplification toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simplify", help="simplify one polyline")
    s.add_argument("--algo", choices=ALGOS, required=True)
    s.add_argument("--eps", type=_nonneg, required=True)
    s.add_argument("--measure", choices=[m.value for m in DistanceMeasure],
                   default=DistanceMeasure.HAUSDORFF_PQ.value, help="distance for --algo brute")
    s.add_argument("--input", required=True)
    s.add_argument("--format", choices=("csv", "json"), default="json")
    s.add_argument("--output", help="output file (default: stdout)")
    s.add_argument("--report", help="also write the run report as JSON here")
    s.add_argument("--no-timing", action="store_true", help="omit wall time (reproducible output)")
    s.set_defaults(func=cmd_simplify)

    c = sub.add_parser("compare", help="vertex counts of all algorithms at several eps factors")
    c.add_argument("--eps", type=_nonneg, required=True)
    c.add_argument("--factors", type=_factors, default=[1.0])
    c.add_argument("--input", required=True)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--output")
    c.add_argument("--json", metavar="PATH", help="also write the counts as JSON here")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c.set_defaults(func=cmd_compare)

    g = sub.add_parser("generate", help="write a constructed instance and its claims")
    g.add_argument("--instance", choices=INSTANCES, required=True)
    g.add_argument("--c", type=float, default=2.0, help="enlargement factor (triangle, dpf-zigzag)")
    g.add_argument("--m", type=int, default=11, help="vertex count (triangle, dpf-zigzag)")
    g.add_argument("--reps", type=int, default=1, help="copies (iif-gadget)")
    g.add_argument("--n", type=int, default=10, help="vertex count (random)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--profile", choices=PROFILES, default="smooth")
    g.add_argument("--format", choices=("csv", "json"), default="json")
    g.add_argument("--output")
    g.add_argument("--verify", action="store_true", help="run the claims; exit 1 if any fails")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("render", help="draw polylines or a free-space diagram as SVG")
    r.add_argument("--input", required=True)
    r.add_argument("--overlay")
    r.add_argument("--free-space", dest="free_space", metavar="OTHER")
    r.add_argument("--eps", type=_nonneg)
    r.add_argument("--capsules", action="store_true", help="shade the eps-region of the input")
    r.add_argument("--resolution", type=int, default=16, help="free-space samples per cell side")
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"polysimp: {exc}", file=sys.stderr)
        return exc.code
    except GuardExceeded as exc:
        print(f"polysimp: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
