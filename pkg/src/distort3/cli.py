"""Command line interface: ``distort3 <command> ...``.

Exit codes: 0 ok, 1 unreadable point file, 2 tameness violation, 3 fewer
than three points, 4 lemma violation (a bug), 5 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import io as pio
from .construction import ConstructionParams, build_curve, sample_polyline
from .distortion import (
    InsufficientPointsError,
    SizeLimitError,
    TamenessError,
    check_tame,
    delta3,
)
from .geometry import GeometryError
from .lower_bound import LemmaViolation, convexity_certificate, prop1_verify
from .optimizer import brute_force_oracle, local_search
from .scan import baseline, fit_exponent, records_to_csv, scan, scan_slope
from .svg import render_svg

EXIT_OK, EXIT_PARSE, EXIT_TAME, EXIT_FEW, EXIT_LEMMA, EXIT_USAGE = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:.12g}"


def _load_tame(path):
    return check_tame(pio.read_points(path))


def cmd_delta3(args) -> int:
    seq = _load_tame(args.input)
    rep = delta3(seq, allow_large=args.max_n_override)
    w = rep.worst
    print(f"delta3={_fmt(rep.delta3)} worst=({w.i},{w.j},{w.k}) triples={rep.triples_evaluated}")
    if args.json:
        payload = {
            "delta3": pio.json_real(rep.delta3),
            "worst": [w.i, w.j, w.k],
            "rho3": w.rho3,
            "area": w.area,
            "triples_evaluated": rep.triples_evaluated,
        }
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _write_svg(path, curve_pts, marks, plane, title):
    Path(path).write_text(render_svg([curve_pts], marks, plane=plane, title=title) + "\n")


def cmd_construct(args) -> int:
    try:
        params = ConstructionParams(args.m, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    curve = build_curve(params)
    marks = check_tame(curve.marked_points()).points
    pio.write_points(args.out, marks)
    print(f"wrote {len(marks)} points in R^{params.d} to {args.out}")
    if args.svg:
        _write_svg(args.svg, sample_polyline(curve, args.per_unit), marks, args.plane, f"Gamma(m={args.m}, d={args.d})")
        print(f"wrote {args.svg}")
    return EXIT_OK


def cmd_scan(args) -> int:
    records = scan(args.d, args.m, allow_large=args.max_n_override)
    text = records_to_csv(records)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    if len(records) >= 2:
        slope, resid = scan_slope(records)
        print(f"slope={slope:.6f} residual={resid:.6f} expected={1 / (args.d - 1):.6f}")
    return EXIT_OK


def cmd_baseline(args) -> int:
    rows = baseline(args.n, opening=args.opening)
    lines = ["n,delta3,consecutive"] + [f"{r.n},{pio.format_real(r.delta3)},{pio.format_real(r.consecutive)}" for r in rows]
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    if len(rows) >= 2:
        slope, resid = fit_exponent([(r.n, r.delta3) for r in rows])
        print(f"slope={slope:.6f} residual={resid:.6f}")
    return EXIT_OK


def cmd_witness(args) -> int:
    seq = _load_tame(args.input)
    if seq.dim != 2:
        raise UsageError(f"witness needs planar points, got dimension {seq.dim}")
    if len(seq) < 3:
        raise InsufficientPointsError("need at least 3 points")
    rep = delta3(seq, allow_large=args.max_n_override)
    if not rep.finite:
        raise UsageError(f"3-distortion is infinite (degenerate triple {rep.worst.triple}); no certificate")
    report = prop1_verify(seq, rep.delta3)
    out = report.to_dict()
    out["delta3"] = pio.json_real(out["delta3"])
    if args.delta is not None:
        out["explore"] = convexity_certificate(seq, args.delta).to_dict()
    elif report.certificate is None:
        out["certificate"] = convexity_certificate(seq, report.delta).to_dict()
    text = json.dumps(out, indent=2)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n")
    return EXIT_OK


def cmd_optimize(args) -> int:
    res = local_search(args.n, args.d, restarts=args.restarts, seed=args.seed)
    print(f"value={_fmt(res.value)} restarts={res.restarts} converged={str(res.converged).lower()}")
    if args.n <= 3 and args.d == 2:
        orc = brute_force_oracle(args.n)
        print(f"oracle={_fmt(orc.value)} turns={tuple(round(t, 4) for t in orc.turns)} lengths={orc.lengths}")
    if args.out:
        pio.write_points(args.out, res.best.points)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    P = pio.read_points(args.input)
    _write_svg(args.svg, P, P, args.plane, Path(args.input).name)
    print(f"wrote {args.svg}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="distort3", description="3-distortion of embedded paths.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("delta3", help="exact 3-distortion of a point file")
    s.add_argument("input")
    s.add_argument("--json", "--out", dest="json", help="also write a JSON report")
    s.add_argument("--max-n-override", action="store_true", help="allow n > 1500 (still exhaustive)")
    s.set_defaults(func=cmd_delta3)

    s = sub.add_parser("construct", help="marked points of Gamma(m, d)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--out", required=True)
    s.add_argument("--svg")
    s.add_argument("--plane", choices=["xy", "xz", "yz"], default="xy")
    s.add_argument("--per-unit", type=int, default=16)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("scan", help="3-distortion of Gamma(m, d) over several m, with log-log slope")
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--m", type=int, nargs="+", required=True)
    s.add_argument("--out")
    s.add_argument("--max-n-override", action="store_true")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("baseline", help="fixed arc sampled at n unit steps")
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.add_argument("--opening", type=float, default=math.pi / 3)
    s.add_argument("--out")
    s.set_defaults(func=cmd_baseline)

    s = sub.add_parser("witness", help="square-root lower-bound certificate for a planar file")
    s.add_argument("input")
    s.add_argument("--delta", type=int, help="also certify convexity of this subsampling step")
    s.add_argument("--out")
    s.add_argument("--max-n-override", action="store_true")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("optimize", help="search for small 3-distortion embeddings of Pi_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--restarts", type=int)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--out")
    s.set_defaults(func=cmd_optimize)

    s = sub.add_parser("render", help="SVG of a point file")
    s.add_argument("input")
    s.add_argument("--svg", required=True)
    s.add_argument("--plane", choices=["xy", "xz", "yz"], default="xy")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except pio.PointFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TamenessError as exc:
        print(f"tameness violation at index {exc.index}: {exc}", file=sys.stderr)
        return EXIT_TAME
    except InsufficientPointsError as exc:
        print(f"too few points: {exc}", file=sys.stderr)
        return EXIT_FEW
    except LemmaViolation as exc:
        print(f"lemma violation (bug): {exc}", file=sys.stderr)
        return EXIT_LEMMA
    except (UsageError, SizeLimitError, GeometryError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
