"""Command-line front end emitting curves, reports and oracle comparisons as CSV or JSON.

Exit codes: 0 success, 2 bad flags, 3 domain error, 4 P function requested in
the nonclassical region, 5 Fock truncation too small.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import json
import math
import sys

import numpy as np

from . import charfunc, coherence, fock_oracle, prep
from .criteria import classify, critical_alpha
from .errors import (
    DegenerateDistribution,
    DegenerateState,
    DomainError,
    NoBracket,
    NonclassicalRegion,
    TruncationError,
)
from .figures import FIGURES, computed_constants, curve
from .gaussian_core import GaussianParams, validate

EXIT_DOMAIN = 3
EXIT_NONCLASSICAL = 4
EXIT_TRUNCATION = 5

QUANTITIES = ("g2", "rc", "qm", "pmargin")
ORACLE_ETAS = (0.3 + 0.2j, -0.25 + 0.4j)


def fmt(value) -> str:
    if isinstance(value, complex):
        sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
        return f"{fmt(value.real)}{sign}{fmt(abs(value.imag))}j"
    return format(float(value), ".12g")


def _clean(obj):
    """Round floats to 12 significant digits for byte-stable JSON."""
    if isinstance(obj, float):
        return obj if not math.isfinite(obj) else float(fmt(obj))
    if isinstance(obj, (np.floating, np.integer)):
        return _clean(obj.item())
    if isinstance(obj, complex):
        return [_clean(obj.real), _clean(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return _clean(dataclasses.asdict(obj))
    return obj


def to_json(obj) -> str:
    return json.dumps(_clean(obj), indent=2, sort_keys=True) + "\n"


def csv_rows(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _add_param_flags(p):
    g = p.add_argument_group("state parameters (angles in radians)")
    g.add_argument("--nbar", type=float, default=0.0, help="mean thermal photon number")
    g.add_argument("--r", type=float, default=0.0, help="squeeze magnitude")
    g.add_argument("--theta", type=float, default=0.0, help="squeeze phase")
    g.add_argument("--alpha", type=float, default=0.0, help="coherent amplitude |alpha|")
    g.add_argument("--phi", type=float, default=0.0, help="coherent phase")
    g.add_argument("--t-prep", type=float, default=1.0, help="preparation time")
    g.add_argument("--amplitude-quadrature", action="store_true", help="set theta = 2 phi")


def _add_output_flags(p, default_format="csv"):
    p.add_argument("--format", choices=("csv", "json"), default=default_format)
    p.add_argument("--out", default=None, help="write to this path instead of stdout")


def _points(value):
    n = int(value)
    if n < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return n


def _positive(value):
    v = float(value)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclab",
        description="Nonclassicality diagnostics for displaced-squeezed thermal states "
        "under degenerate parametric amplification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="tabulate a quantity against scaled time x")
    _add_param_flags(p)
    p.add_argument("--quantity", choices=QUANTITIES, required=True)
    p.add_argument("--x-max", type=_positive, default=5.0)
    p.add_argument("--points", type=_points, default=201)
    _add_output_flags(p)

    p = sub.add_parser("classify", help="verdicts and crossing times of every criterion")
    _add_param_flags(p)
    p.add_argument("--x-max", type=_positive, default=5.0)
    p.add_argument("--points", type=_points, default=11)
    _add_output_flags(p, "json")

    p = sub.add_parser("critical-alpha", help="|alpha| where g2(inf) = g2(0), theta = 2 phi")
    p.add_argument("--nbar", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    _add_output_flags(p)

    p = sub.add_parser("pmap", help="P(beta) on a square grid")
    _add_param_flags(p)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--half-width", type=_positive, default=None)
    p.add_argument("--grid", type=_points, default=101)
    _add_output_flags(p)

    p = sub.add_parser("figure", help="data and reported constants of a reference figure")
    p.add_argument("number", type=int, choices=sorted(FIGURES))
    p.add_argument("--points", type=_points, default=201)
    _add_output_flags(p)

    p = sub.add_parser("oracle-check", help="closed forms against the truncated Fock oracle")
    _add_param_flags(p)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--dim", type=int, default=None)
    _add_output_flags(p)
    return parser


def params_from_args(args) -> GaussianParams:
    theta = 2.0 * args.phi if args.amplitude_quadrature else args.theta
    return validate(GaussianParams(args.nbar, args.r, theta, args.alpha, args.phi, args.t_prep))


def cmd_curve(args):
    params = params_from_args(args)
    xs = np.linspace(0.0, args.x_max, args.points)
    values = curve(args.quantity, params, xs)
    if args.format == "json":
        return to_json({"quantity": args.quantity, "params": params, "x": xs.tolist(), "value": values.tolist()})
    return csv_rows(("x", "value"), zip(xs, values))


def cmd_classify(args):
    report = classify(params_from_args(args), args.x_max, args.points)
    if args.format == "csv":
        rows = [(name, x) for name, xs in report.crossings.items() for x in xs]
        return csv_rows(("criterion", "x"), rows)
    return to_json(
        {
            "params": report.params,
            "verdict_curve": [{"x": x, **dataclasses.asdict(v)} for x, v in report.verdict_curve],
            "crossings": report.crossings,
            "asymptotes": report.asymptotes,
            "amplitude_quadrature": report.amplitude_quadrature,
            "notes": report.notes,
        }
    )


def cmd_critical_alpha(args):
    value = critical_alpha(args.nbar, args.r)
    if args.format == "json":
        return to_json({"nbar": args.nbar, "r": args.r, "alpha_c": value})
    return csv_rows(("nbar", "r", "alpha_c"), [(args.nbar, args.r, value)])


def cmd_pmap(args):
    params = params_from_args(args)
    try:
        if args.half_width is None:
            center = coherence.amplitude_A(params, args.x)
            half = prep.quadrature_half_width(params, args.x)
            re = np.linspace(center.real - half, center.real + half, args.grid)
            im = np.linspace(center.imag - half, center.imag + half, args.grid)
        else:
            re = im = np.linspace(-args.half_width, args.half_width, args.grid)
        values = prep.p_grid(params, args.x, re, im)
    except DegenerateDistribution as exc:
        notice = {"distribution": "delta", "center": exc.center}
        if args.format == "json":
            return to_json(notice)
        return csv_rows(("re", "im", "p"), [(exc.center.real, exc.center.imag, "delta")])
    if args.format == "json":
        return to_json({"re": re.tolist(), "im": im.tolist(), "p": values.tolist()})
    rows = ((re[i], im[j], values[i, j]) for i in range(len(re)) for j in range(len(im)))
    return csv_rows(("re", "im", "p"), rows)


def cmd_figure(args):
    fig = FIGURES[args.number]
    xs = np.linspace(0.0, fig.x_max, args.points)
    values = curve(fig.quantity, fig.params, xs)
    header = {
        "figure": fig.number,
        "quantity": fig.quantity,
        "params": fig.params,
        "reported": fig.reported,
        "computed": computed_constants(fig),
    }
    if args.format == "json":
        return to_json({**header, "x": xs.tolist(), "value": values.tolist()})
    head = "# " + json.dumps(_clean(header), sort_keys=True) + "\n"
    return head + csv_rows(("x", "value"), zip(xs, values))


def oracle_comparison(params, x, dim=None):
    rows = []

    def add(name, closed, oracle):
        delta = abs(oracle - closed) / abs(closed) if closed != 0 else abs(oracle)
        rows.append((name, closed, oracle, delta))

    obs = fock_oracle.oracle_observables(params, x, dim, etas=ORACLE_ETAS)
    m = obs.moments
    add("g2", coherence.g2(params, x), fock_oracle.oracle_g2(params, x, dim))
    add("n_mean", coherence.mean_photon_number(params, x), m.n_mean)
    add("mandel_q", charfunc.mandel_q(params, x), (m.a2dag_a2 - m.n_mean**2) / m.n_mean)
    for eta, value in zip(ORACLE_ETAS, obs.chi):
        closed = charfunc.chi(params, x, eta)
        rows.append((f"chi({fmt(eta)})", closed, complex(value), abs(value - closed) / abs(closed)))
    return rows, obs.dim


def cmd_oracle_check(args):
    params = params_from_args(args)
    rows, dim = oracle_comparison(params, args.x, args.dim)
    if args.format == "json":
        return to_json(
            {"dim": dim, "rows": [{"quantity": q, "closed_form": c, "oracle": o, "rel_delta": d} for q, c, o, d in rows]}
        )
    return csv_rows(("quantity", "closed_form", "oracle", "rel_delta"), rows)


COMMANDS = {
    "curve": cmd_curve,
    "classify": cmd_classify,
    "critical-alpha": cmd_critical_alpha,
    "pmap": cmd_pmap,
    "figure": cmd_figure,
    "oracle-check": cmd_oracle_check,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
    except NonclassicalRegion as exc:
        print(f"nclab: NonclassicalRegion: {exc}", file=sys.stderr)
        return EXIT_NONCLASSICAL
    except TruncationError as exc:
        print(f"nclab: TruncationError: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (DomainError, DegenerateState, NoBracket) as exc:
        print(f"nclab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
