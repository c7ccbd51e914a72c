"""Command-line interface.

    spinfold figure <id> [--grid N] [--out PATH] [--oracle] [--png PATH]
    spinfold calibrate [--out PATH]
    spinfold report [--figures-dir DIR]
    spinfold evolve|metric|curvature|phase|concurrence|brachistochrone --model M ...

Exit codes: 0 success, 1 acceptance failure, 2 usage error.  Every command
accepts ``--config PATH``, a key=value file whose entries fill any option
not given on the command line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import SpinfoldError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MODELS = ("xxz", "ising-qubit", "ising-spin-s")
BRACHISTOCHRONE_FAMILY = {"xxz": "xxz-sinusoidal", "ising-qubit": "ising-qubit", "ising-spin-s": "ising-spin-s"}
TIME_COORDINATE = {"xxz": "eta", "ising-qubit": "kappa", "ising-spin-s": "eta"}

DEFAULTS = {
    "grid": 200,
    "out": None,
    "oracle": False,
    "png": None,
    "figures_dir": None,
    "model": None,
    "N": 2,
    "s": 0.5,
    "J": 1.0,
    "nu": 0.0,
    "b": 0.0,
    "coeffs": "1,0,0,0",
    "point": "",
    "t": 1.0,
    "h": 1e-5,
    "convention": "canonical",
    "cycle": None,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_config(p):
    p.add_argument("--config", metavar="PATH", help="key=value file; command-line flags take precedence")


def _add_model_options(p, with_time=False):
    p.add_argument("--model", choices=MODELS)
    p.add_argument("--N", type=int, help="number of sites")
    p.add_argument("--s", type=float, help="site spin (ising-spin-s)")
    p.add_argument("--J", type=float, help="coupling")
    p.add_argument("--nu", type=float, help="anisotropy (xxz)")
    p.add_argument("--b", type=float, help="field (xxz)")
    p.add_argument("--coeffs", help="initial amplitudes c11,c10,c01,c00 (xxz); complex like 0.5+0.5j")
    p.add_argument("--point", help="chart point as k=v,... (values may use pi)")
    p.add_argument("--h", type=float, help="finite-difference step")
    if with_time:
        p.add_argument("--t", type=float, help="evolution time")
    _add_config(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinfold", description="Geometry, speed, entanglement and phases of evolving spin systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("figure", help="write one figure's data as CSV")
    p.add_argument("figure_id")
    p.add_argument("--grid", type=int, help="points per series (default 200)")
    p.add_argument("--out", help="CSV path (default: standard output)")
    p.add_argument("--oracle", action="store_const", const=True, help="add a first-principles oracle column")
    p.add_argument("--png", help="also render the series to this image file")
    _add_config(p)

    p = sub.add_parser("calibrate", help="compare every closed form with its oracle")
    p.add_argument("--out", help="ledger path (default KNOWN_DEVIATIONS.md)")
    _add_config(p)

    p = sub.add_parser("report", help="print the acceptance table")
    p.add_argument("--figures-dir", dest="figures_dir", help="also write every figure as CSV and PNG here")
    _add_config(p)

    p = sub.add_parser("evolve", help="closed-form evolved state and its exact-evolution residual")
    _add_model_options(p, with_time=True)
    p = sub.add_parser("metric", help="numeric quantum geometric tensor at a chart point")
    _add_model_options(p)
    p = sub.add_parser("curvature", help="Gaussian curvature of the numeric metric")
    _add_model_options(p)
    p = sub.add_parser("phase", help="total, dynamic and geometric phases of an evolution")
    _add_model_options(p, with_time=True)
    p.add_argument("--cycle", type=float, help="span of the time-like coordinate for a cyclic (AA) phase")
    p = sub.add_parser("concurrence", help="concurrence or I-concurrence of the evolved pair")
    _add_model_options(p)
    p = sub.add_parser("brachistochrone", help="time-optimal evolution of a model family")
    _add_model_options(p)
    p.add_argument("--convention", choices=("canonical", "paper"), help="speed convention for the speed command")
    return parser


# configuration ----------------------------------------------------------


def read_config(path: str | Path) -> dict[str, str]:
    out = {}
    for n, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        k, v = (x.strip() for x in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


def _coerce(value: str, like):
    if isinstance(like, bool):
        return value.lower() in ("1", "true", "yes", "on")
    if isinstance(like, int):
        return int(value)
    if isinstance(like, float):
        return float(value)
    return value


def resolve_options(args: argparse.Namespace) -> argparse.Namespace:
    """Fill options: command line, then config file, then defaults."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    known = vars(args)
    for key in cfg:
        if key not in known:
            raise UsageError(f"unknown configuration key {key!r} for {args.command}")
    for key, value in known.items():
        if key in ("command", "config", "figure_id") or value is not None:
            continue
        default = DEFAULTS.get(key)
        if key in cfg:
            like = {"N": 0, "grid": 0}.get(key, default if default is not None else "")
            if key in ("s", "J", "nu", "b", "t", "h", "cycle"):
                like = 0.0
            setattr(args, key, _coerce(cfg[key], like))
        else:
            setattr(args, key, default)
    return args


def _number(text: str) -> float:
    allowed = {"pi": np.pi, "sqrt": np.sqrt, "__builtins__": {}}
    try:
        return float(eval(text, allowed, {}))  # restricted to arithmetic on pi
    except Exception:
        raise UsageError(f"cannot read number {text!r}") from None


def parse_point(text: str) -> dict[str, float]:
    point = {}
    for item in filter(None, (x.strip() for x in text.split(","))):
        if "=" not in item:
            raise UsageError(f"point entries look like key=value, got {item!r}")
        k, v = item.split("=", 1)
        point[k.strip()] = _number(v.strip())
    return point


def parse_coeffs(text: str) -> np.ndarray:
    try:
        c = np.array([complex(x.strip().replace(" ", "")) for x in text.split(",")])
    except ValueError:
        raise UsageError(f"cannot read coefficients {text!r}") from None
    if c.size != 4:
        raise UsageError("xxz needs four coefficients c11,c10,c01,c00")
    return c


# commands ---------------------------------------------------------------


def _family(args):
    from .evolution import build_family

    if args.model is None:
        raise UsageError("--model is required")
    if args.model == "xxz":
        c = parse_coeffs(args.coeffs)
        return build_family("xxz", coeffs=c / np.linalg.norm(c), J=args.J, nu=args.nu, b=args.b)
    if args.model == "ising-qubit":
        return build_family("ising-qubit", N=args.N, J=args.J)
    return build_family("ising-spin-s", N=args.N, s=args.s, J=args.J)


def _print_pairs(pairs, out):
    for k, v in pairs:
        if isinstance(v, float):
            v = f"{v:.12g}"
        print(f"{k}={v}", file=out)


def cmd_figure(args, out) -> int:
    from .figures import FIGURES, FigureJob, run_figure

    if args.figure_id not in FIGURES:
        raise UsageError(f"unknown figure {args.figure_id!r}; choose from {', '.join(FIGURES)}")
    text = run_figure(FigureJob(args.figure_id, args.grid, args.out, bool(args.oracle), args.png))
    if args.out is None:
        out.write(text)
    return EXIT_OK


def cmd_calibrate(args, out) -> int:
    from .calibration import write_ledger

    path = args.out or "KNOWN_DEVIATIONS.md"
    entries = write_ledger(path)
    counts = {}
    for e in entries:
        counts[e.kind] = counts.get(e.kind, 0) + 1
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"wrote {len(entries)} verdicts to {path} ({summary})", file=out)
    return EXIT_OK


def cmd_report(args, out) -> int:
    from .acceptance import format_row, run_acceptance

    if args.figures_dir:
        from .figures import FIGURES, FigureJob, run_figure

        d = Path(args.figures_dir)
        d.mkdir(parents=True, exist_ok=True)
        for fid in FIGURES:
            run_figure(FigureJob(fid, DEFAULTS["grid"], d / f"figure_{fid}.csv", False, d / f"figure_{fid}.png"))
        print(f"wrote {len(FIGURES)} figures (CSV and PNG) to {d}", file=out)
    results = run_acceptance()
    for r in results:
        print(format_row(r), file=out)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_evolve(args, out) -> int:
    from .evolution import aligned_residual, evolve_exact

    fam = _family(args)
    start = fam.point(**parse_point(args.point))
    end = fam.advance(start, args.t)
    closed = fam.state(**end)
    exact = evolve_exact(fam.state(**start), fam.spec, args.t)
    _print_pairs([(k, float(v)) for k, v in end.items()], out)
    print("index,re,im", file=out)
    for i, a in enumerate(closed.amplitudes):
        print(f"{i},{a.real:.12g},{a.imag:.12g}", file=out)
    _print_pairs([("residual", aligned_residual(closed, exact))], out)
    return EXIT_OK


def cmd_metric(args, out) -> int:
    from .geometry import qgt_numeric

    fam = _family(args)
    patch, conn = qgt_numeric(fam, parse_point(args.point), args.h)
    _print_pairs(
        [("chart", ",".join(patch.chart)), ("g_uu", float(patch.g_uu)), ("g_uv", float(patch.g_uv)),
         ("g_vv", float(patch.g_vv)), ("det", float(patch.det)), ("beta_u", float(conn.beta_u)), ("beta_v", float(conn.beta_v))],
        out,
    )
    return EXIT_OK


def _numeric_metric(fam, chart, h):
    from .geometry import qgt_tensor

    base = fam.point()

    def metric(u, v):
        u, v = np.broadcast_arrays(np.asarray(u, float), np.asarray(v, float))
        E, Fm, G = (np.empty(u.shape) for _ in range(3))
        for idx in np.ndindex(u.shape):
            p = {**base, chart[0]: float(u[idx]), chart[1]: float(v[idx])}
            g, _ = qgt_tensor(fam, p, [{chart[0]: 1.0}, {chart[1]: 1.0}], h)
            E[idx], Fm[idx], G[idx] = g[0, 0], g[0, 1], g[1, 1]
        return E, Fm, G

    return metric


def cmd_curvature(args, out) -> int:
    from .geometry import default_chart, gauss_curvature

    fam = _family(args)
    chart = default_chart(fam)
    point = fam.point(**parse_point(args.point))
    polar = chart[0] if args.model != "xxz" else None
    sample = gauss_curvature(_numeric_metric(fam.with_defaults(**point), chart, args.h), {k: point[k] for k in chart}, 1e-3, chart, polar)
    _print_pairs([("chart", ",".join(chart)), ("K", float(sample.K)), ("valid", str(sample.valid).lower())], out)
    return EXIT_OK


def cmd_phase(args, out) -> int:
    from .phases import aa_phase, geometric_phase, time_cycle

    fam = _family(args)
    point = parse_point(args.point)
    if args.cycle is not None:
        res = aa_phase(fam, time_cycle(fam, point, TIME_COORDINATE[args.model], args.cycle))
        _print_pairs([("aa_phase", res.aa_phase), ("topological_part", res.topological_part),
                      ("dynamic", res.dynamic), ("bargmann", res.bargmann)], out)
        return EXIT_OK
    dec = geometric_phase(fam, (0.0, args.t), point)
    _print_pairs([("total", dec.total), ("dynamic", dec.dynamic), ("geometric", dec.geometric),
                  ("unwrapped_total", dec.unwrapped_total), ("branch_windings", dec.branch_windings)], out)
    return EXIT_OK


def cmd_concurrence(args, out) -> int:
    from .entanglement import concurrence_pure_2qubit, i_concurrence

    fam = _family(args)
    psi = fam.state(**parse_point(args.point))
    if psi.basis.n_sites != 2:
        raise UsageError("concurrence needs a two-site model (--N 2)")
    value = concurrence_pure_2qubit(psi) if psi.basis.local_dim == 2 else i_concurrence(psi)
    _print_pairs([("kind", value.kind), ("value", value.value)], out)
    return EXIT_OK


def cmd_brachistochrone(args, out) -> int:
    from .dynamics import brachistochrone

    if args.model is None:
        raise UsageError("--model is required")
    params = {"N": args.N, "s": args.s, "J": args.J, **parse_point(args.point)}
    rep = brachistochrone(BRACHISTOCHRONE_FAMILY[args.model], params)
    v_max = rep.v_max * (2 if args.convention == "paper" else 1)
    pairs = [(f"argmax_{k}", float(v)) for k, v in rep.argmax_point.items()]
    pairs += [("v_max", v_max), ("s_min", rep.s_min), ("T_opt", rep.T_opt), ("formula", rep.formula_id),
              ("printed_T", rep.printed_T), ("agrees", str(rep.agrees).lower())]
    if not np.isnan(rep.printed_argmax):
        pairs += [("printed_argmax", rep.printed_argmax), ("printed_v_max", rep.printed_v_max)]
    pairs += [(k, float(v)) for k, v in rep.details.items()]
    _print_pairs(pairs, out)
    return EXIT_OK


COMMANDS = {
    "figure": cmd_figure,
    "calibrate": cmd_calibrate,
    "report": cmd_report,
    "evolve": cmd_evolve,
    "metric": cmd_metric,
    "curvature": cmd_curvature,
    "phase": cmd_phase,
    "concurrence": cmd_concurrence,
    "brachistochrone": cmd_brachistochrone,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args = resolve_options(args)
        return COMMANDS[args.command](args, out)
    except (UsageError, FileNotFoundError) as exc:
        print(f"spinfold: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpinfoldError as exc:
        print(f"spinfold: error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
