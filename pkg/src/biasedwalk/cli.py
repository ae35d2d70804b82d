"""Command-line front end: simulation, classification, and table generation.

Subcommands: ``simulate``, ``classify``, ``origin``, ``polya``, ``mean``,
``phase-diagram``, ``classical``.  Real-valued options accept plain
decimals as well as the expression tokens ``pi``, ``pi/2``, ``1/sqrt2``,
``sqrt2/2`` and similar, so exact irrational parameter points survive
parsing.  Output is CSV (lossless shortest round-trip reals,
``#``-prefixed metadata lines) or JSON; reruns with ``--no-timestamp``
are byte-identical.

Exit codes: 0 success, 2 parameter-domain error, 3 I/O error,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np

from . import analysis, classical, evolution
from .core import (
    InvariantViolationError,
    ParameterDomainError,
    Tolerances,
    WalkParams,
    make_initial_state,
)
from .evolution import Distribution

__all__ = ["main", "run", "parse_real", "parse_probability", "read_distribution"]


# ---------------------------------------------------------------------------
# parameter expression parsing

_CONSTANTS = {"pi": math.pi}


def _parse_atom(text: str) -> float:
    text = text.strip()
    if text in _CONSTANTS:
        return _CONSTANTS[text]
    if text.startswith("sqrt"):
        inner = text[4:].strip()
        if inner.startswith("(") and inner.endswith(")"):
            inner = inner[1:-1]
        value = _parse_atom(inner)
        if value < 0.0:
            raise ValueError(f"sqrt of negative value in {text!r}")
        return math.sqrt(value)
    return float(text)


def parse_real(text: str) -> float:
    """Parse a decimal or expression token (``pi``, ``pi/2``, ``1/sqrt2``...)."""
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return _parse_atom(num) / _parse_atom(den)
        return _parse_atom(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterDomainError(f"cannot parse real value {text!r}") from exc


def parse_probability(text: str):
    """Parse a probability, keeping integer ratios exact as Fractions."""
    if re.fullmatch(r"\d+\s*/\s*\d+", text):
        try:
            return Fraction(text.replace(" ", ""))
        except ZeroDivisionError as exc:
            raise ParameterDomainError(f"cannot parse probability {text!r}") from exc
    return parse_real(text)


# ---------------------------------------------------------------------------
# output helpers

def _fmt(value) -> str:
    # floats use the shortest decimal that round-trips the exact binary
    # value, so files are lossless and re-readable bit for bit
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _csv_document(meta: dict, header: list[str], rows: list[list]) -> str:
    lines = ["# " + " ".join(f"{k}={_fmt(v)}" for k, v in meta.items() if k != "generated")]
    if "generated" in meta:
        lines.append(f"# generated: {meta['generated']}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_document(meta: dict, header: list[str] | None = None,
                   rows: list[list] | None = None, body: dict | None = None) -> str:
    doc: dict = {"meta": meta}
    if body is not None:
        doc.update(body)
    if rows is not None:
        doc["rows"] = [dict(zip(header, row)) for row in rows]
    return json.dumps(doc, indent=2) + "\n"


def _emit_table(args, meta: dict, header: list[str], rows: list[list],
                path: str | None) -> None:
    if not args.no_timestamp:
        meta = dict(meta, generated=_timestamp())
    if args.format == "json":
        _write_text(path, _json_document(meta, header, rows))
    else:
        _write_text(path, _csv_document(meta, header, rows))


def _emit_report(args, meta: dict, body: dict, path: str | None) -> None:
    if not args.no_timestamp:
        meta = dict(meta, generated=_timestamp())
    _write_text(path, _json_document(meta, body=body))


# ---------------------------------------------------------------------------
# distribution file round trip

def read_distribution(path: str) -> tuple[dict, Distribution]:
    """Read a ``simulate`` output file (CSV or JSON) back into a Distribution."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        meta = doc.get("meta", {})
        probs = {int(row["m"]): float(row["prob"]) for row in doc["rows"]}
        return meta, Distribution(t=int(meta.get("t", 0)), probs=probs)
    meta: dict = {}
    probs = {}
    header: list[str] | None = None
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            for token in line[1:].strip().split():
                if "=" in token:
                    key, _, value = token.partition("=")
                    meta[key] = value
            continue
        if header is None:
            header = line.split(",")
            continue
        values = dict(zip(header, line.split(",")))
        probs[int(values["m"])] = float(values["prob"])
    return meta, Distribution(t=int(meta.get("t", 0)), probs=probs)


# ---------------------------------------------------------------------------
# subcommands

def _walk_params(args) -> WalkParams:
    return WalkParams(r=args.r, rho=args.rho)


def _initial_state(args):
    return make_initial_state(args.a, args.phi)


def _cmd_simulate(args) -> int:
    params = _walk_params(args)
    state = _initial_state(args)
    if args.t < 0:
        raise ParameterDomainError(f"--t must be >= 0, got {args.t}")
    psi = evolution.evolve(state, params, args.t)
    dist = evolution.distribution(psi)
    total = dist.total()
    tolerances = Tolerances(probability=args.tol_prob)
    if abs(total - 1.0) > tolerances.probability:
        raise InvariantViolationError(
            f"distribution sums to {total!r}, beyond tolerance {tolerances.probability}"
        )
    meta = {"command": "simulate", "r": params.r, "rho": params.rho,
            "a": args.a, "phi": args.phi, "t": args.t}
    header = ["m", "prob", "amp_R_re", "amp_R_im", "amp_L_re", "amp_L_im"]
    rows = []
    for m in sorted(psi.amplitudes):
        amp = psi.amplitudes[m]
        rows.append([m, dist.probs[m], amp[0].real, amp[0].imag, amp[1].real, amp[1].imag])
    _emit_table(args, meta, header, rows, args.out)
    return 0


def _cmd_classify(args) -> int:
    report = analysis.classify(_walk_params(args))
    meta = {"command": "classify", "r": report.params.r, "rho": report.params.rho}
    body = {
        "rho_R": report.rho_R,
        "recurrent": report.recurrent,
        "v_L": report.v_L,
        "v_R": report.v_R,
        "rho_0": report.rho_0,
        "genuine_biased": report.genuine_biased,
        "saddle_points": list(report.saddles.points),
        "saddles_exist": report.saddles.exists,
        "boundary_flag": report.boundary,
    }
    _emit_report(args, meta, body, args.out)
    return 0


def _cmd_origin(args) -> int:
    params = _walk_params(args)
    state = _initial_state(args)
    if args.t_max < 1:
        raise ParameterDomainError(f"--t-max must be >= 1, got {args.t_max}")
    series = evolution.origin_series(state, params, args.t_max)
    times, p0 = series.occupied()
    meta = {"command": "origin", "r": params.r, "rho": params.rho,
            "a": args.a, "phi": args.phi, "t_max": args.t_max}
    rows = [[int(t), float(p)] for t, p in zip(times, p0)]
    _emit_table(args, meta, ["t", "P0"], rows, args.out)
    return 0


def _cmd_polya(args) -> int:
    params = _walk_params(args)
    state = _initial_state(args)
    if args.t_max < 1:
        raise ParameterDomainError(f"--t-max must be >= 1, got {args.t_max}")
    series = evolution.origin_series(state, params, args.t_max)
    estimate = analysis.polya_estimate_from_series(series)
    times, p0 = series.occupied()
    window = (times >= args.t_max / 10) & (times >= 1)
    slope = None
    if np.count_nonzero(window & (p0 > 0)) >= 2:
        slope = analysis.loglog_slope(times[window], p0[window])
    meta = {"command": "polya", "r": params.r, "rho": params.rho,
            "a": args.a, "phi": args.phi, "t_max": args.t_max}
    body = {
        "partial_product_estimate": estimate,
        "loglog_slope_last_decade": slope,
        "recurrent_closed_form": analysis.classify_recurrence(params),
    }
    _emit_report(args, meta, body, args.out)
    return 0


def _cmd_mean(args) -> int:
    params = _walk_params(args)
    closed = analysis.asymptotic_mean(args.a, args.phi, params)
    integral = analysis.mean_integral(args.a, args.phi, params)
    body = {
        "closed_form": closed,
        "integral": integral,
        "difference": closed - integral,
    }
    meta = {"command": "mean", "r": params.r, "rho": params.rho,
            "a": args.a, "phi": args.phi}
    if args.t is not None:
        if args.t < 1:
            raise ParameterDomainError(f"--t must be >= 1, got {args.t}")
        state = _initial_state(args)
        dist = evolution.distribution(evolution.evolve(state, params, args.t))
        body["empirical_mean_per_step"] = evolution.empirical_mean(dist) / args.t
        meta["t"] = args.t
    _emit_report(args, meta, body, args.out)
    return 0


def _cmd_phase_diagram(args) -> int:
    table = analysis.phase_diagram(r_max=args.r_max, rho_steps=args.rho_steps,
                                   include_grid=args.grid_out is not None)
    meta = {"command": "phase-diagram", "r_max": args.r_max, "rho_steps": args.rho_steps}
    rows = [[r, rho_r, rho_0] for r, rho_r, rho_0 in table.rows]
    _emit_table(args, meta, ["r", "rho_R", "rho_0"], rows, args.out)
    if args.grid_out is not None:
        grid_rows = [[r, rho, label] for r, rho, label in table.grid]
        _emit_table(args, dict(meta, table="grid"), ["r", "rho", "region"],
                    grid_rows, args.grid_out)
    return 0


def _cmd_classical(args) -> int:
    params = classical.ClassicalParams(r=args.r, p=args.p)
    if args.t < 0:
        raise ParameterDomainError(f"--t must be >= 0, got {args.t}")
    stirling = None
    if args.t >= params.period and args.t % params.period == 0:
        stirling = classical.stirling_asymptotic(params, args.t)
    body = {
        "P0": classical.classical_origin_probability(params, args.t),
        "q": classical.q_factor(params),
        "stirling": stirling,
        "recurrent": classical.classical_recurrent(params),
        "mean": classical.classical_mean(params, args.t),
    }
    meta = {"command": "classical", "r": params.r, "p": params.p_float, "t": args.t}
    if args.seed is not None:
        mean_estimate, origin_frequency = classical.classical_monte_carlo(
            params, args.t, args.trials, args.seed)
        body["monte_carlo"] = {
            "mean_estimate": mean_estimate,
            "origin_frequency": origin_frequency,
            "trials": args.trials,
            "seed": args.seed,
            "generator": classical.MONTE_CARLO_GENERATOR,
        }
    _emit_report(args, meta, body, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single-line diagnostic, exit code 2
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _add_output_args(sp, formats=("csv", "json")):
    sp.add_argument("--out", help="output path (stdout if omitted)")
    sp.add_argument("--format", choices=list(formats), default=formats[0],
                    help="output format (default: %(default)s)")
    sp.add_argument("--no-timestamp", action="store_true",
                    help="omit the generated-at line for byte-identical reruns")


def _add_walk_args(sp):
    sp.add_argument("--r", type=int, required=True, help="right-step length (>= 1)")
    sp.add_argument("--rho", type=parse_real, required=True,
                    help="coin parameter in [0, 1]; accepts tokens like 1/sqrt2")


def _add_state_args(sp):
    sp.add_argument("--a", type=parse_real, default=1.0,
                    help="initial |R> weight in [0, 1] (default 1)")
    sp.add_argument("--phi", type=parse_real, default=0.0,
                    help="initial relative phase in [0, 2*pi); accepts pi, pi/2 (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="biasedwalk",
                     description="Biased quantum walks on the integer line")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("simulate", help="evolve a walk and write its distribution")
    _add_walk_args(sp)
    _add_state_args(sp)
    sp.add_argument("--t", type=int, required=True, help="number of steps (>= 0)")
    sp.add_argument("--tol-prob", type=float, default=1e-10,
                    help="norm-check tolerance (default 1e-10)")
    _add_output_args(sp)
    sp.set_defaults(func=_cmd_simulate)

    sp = sub.add_parser("classify", help="recurrence / bias report for (r, rho)")
    _add_walk_args(sp)
    _add_output_args(sp, formats=("json",))
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("origin", help="probability at the origin for t = 0..t_max")
    _add_walk_args(sp)
    _add_state_args(sp)
    sp.add_argument("--t-max", type=int, required=True, help="largest step count (>= 1)")
    _add_output_args(sp)
    sp.set_defaults(func=_cmd_origin)

    sp = sub.add_parser("polya", help="return-probability estimate and decay fit")
    _add_walk_args(sp)
    _add_state_args(sp)
    sp.add_argument("--t-max", type=int, required=True, help="largest step count (>= 1)")
    _add_output_args(sp, formats=("json",))
    sp.set_defaults(func=_cmd_polya)

    sp = sub.add_parser("mean", help="asymptotic mean: closed form vs integral")
    _add_walk_args(sp)
    _add_state_args(sp)
    sp.add_argument("--t", type=int, default=None,
                    help="also report the simulated mean per step at this t")
    _add_output_args(sp, formats=("json",))
    sp.set_defaults(func=_cmd_mean)

    sp = sub.add_parser("phase-diagram", help="threshold curves and region grid")
    sp.add_argument("--r-max", type=int, default=10, help="largest step length (default 10)")
    sp.add_argument("--rho-steps", type=int, default=99,
                    help="rho grid resolution (default 99)")
    sp.add_argument("--grid-out", help="also write the region-labeled grid here")
    _add_output_args(sp)
    sp.set_defaults(func=_cmd_phase_diagram)

    sp = sub.add_parser("classical", help="classical biased random walk report")
    sp.add_argument("--r", type=int, required=True, help="right-step length (>= 1)")
    sp.add_argument("--p", type=parse_probability, required=True,
                    help="right-step probability; ratios like 1/4 stay exact")
    sp.add_argument("--t", type=int, required=True, help="step count (>= 0)")
    sp.add_argument("--seed", type=int, default=None,
                    help="run a Monte Carlo cross-check with this seed")
    sp.add_argument("--trials", type=int, default=1_000_000,
                    help="Monte Carlo trials (default 1e6)")
    _add_output_args(sp, formats=("json",))
    sp.set_defaults(func=_cmd_classical)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"biasedwalk: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParameterDomainError as exc:
        print(f"biasedwalk: parameter error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"biasedwalk: i/o error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # internal invariant violations and the unexpected
        print(f"biasedwalk: internal error: {exc}", file=sys.stderr)
        return 4


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
