"""Figure registry: each figure id is one closed form swept over a grid.

CSV schema: header ``series,x,y`` (plus ``oracle`` on request), 12
significant digits, LF line endings, UTF-8.  Rows are ordered by series,
then by grid point, so identical invocations give identical bytes.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import cumulative_trapezoid

from . import formulas as F
from .errors import DomainError
from .evolution import ising_qubit_vector, ising_spin_s_vector, wrap_angle, xxz_vector
from .geometry import closed_metric_fn, curvature_field

DEFAULT_GRID = 200
SPIN_SERIES = (0.5, 1.0, 1.5, 2.0)
KAPPA_SERIES = (np.pi / 6, np.pi / 4, np.pi / 2)
N_SERIES = (2, 3, 4, 5)
NU_SERIES = (-5.0, -3.0, -2.0 / 3.0, 0.5, 2.0)
ETA_PMAX = 1e-3
ETA_TILDE = 1.0
ETA_FIG_4_8 = 0.1

Series = tuple[str, float]


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    formula_id: str
    x_label: str
    y_label: str
    series: tuple[Series, ...]
    x_range: Callable[[float], tuple[float, float]]
    y: Callable[[float, np.ndarray], np.ndarray]
    oracle: Callable[[float, np.ndarray], np.ndarray] | None = None
    fixed: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FigureJob:
    figure_id: str
    grid: int = DEFAULT_GRID
    out: str | Path | None = None
    oracle: bool = False
    png: str | Path | None = None


def _fmt(x: float) -> str:
    if np.isnan(x):
        return "nan"
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x + 0.0:.12g}"  # + 0.0 turns -0.0 into 0.0


def _vec(fn, *args):
    return np.array([fn(*a) for a in zip(*np.broadcast_arrays(*args))], dtype=float)


def _kappa_series(label="kappa"):
    names = {np.pi / 6: "pi/6", np.pi / 4: "pi/4", np.pi / 2: "pi/2"}
    return tuple((f"{label}={names[k]}", k) for k in KAPPA_SERIES)


def _spin_series():
    return tuple((f"s={s:g}", s) for s in SPIN_SERIES)


def _pair_eta(C, kappa):
    return np.arcsin(np.sqrt(np.clip(C / abs(np.sin(kappa)), 0.0, 1.0)))


def _iconc_kappa(x):
    return np.arcsin(np.sqrt(np.clip(ETA_TILDE * x, 0.0, 1.0)))


# oracles: first-principles values at each grid point -------------------


def _drift_speed(C):
    from .calibration import _drift_metric

    return np.sqrt(_vec(_drift_metric, C))


def _qubit_pair_dE(C, kappa):
    from .calibration import _qubit_dE

    return _vec(lambda e: _qubit_dE(2, e), _pair_eta(C, kappa))


def _spin_pair_dE(s, x):
    from .calibration import _spin_dE

    return _vec(lambda k: _spin_dE(2, s, k), _iconc_kappa(x))


def _principal_geometric(v0, v1, dyn):
    ov = np.vdot(v0, v1)
    if abs(ov) < 1e-6:
        return float("nan")
    return wrap_angle(np.angle(ov) - dyn)


def _qubit_pair_geometric(kappa, eta):
    # J = 1, so evolving kappa from 0 takes t = kappa
    from .dynamics import mean_energy
    from .evolution import ising_qubit_family

    fam = ising_qubit_family(2)
    dyn = -mean_energy(fam.state(eta=eta), fam.spec) * kappa
    return _principal_geometric(ising_qubit_vector(2, eta, 0.0, 0.0), ising_qubit_vector(2, eta, 0.0, kappa), dyn)


def _qubit_cycle_aa(N, eta):
    from .dynamics import mean_energy
    from .evolution import ising_qubit_family

    fam = ising_qubit_family(N)
    dyn = -mean_energy(fam.state(eta=eta), fam.spec) * 2 * np.pi
    return _principal_geometric(ising_qubit_vector(N, eta, 0.0, 0.0), ising_qubit_vector(N, eta, 0.0, 2 * np.pi), dyn)


def _spin_pair_geometric(s, kappa, eta):
    from .dynamics import mean_energy
    from .evolution import ising_spin_s_family

    fam = ising_spin_s_family(2, s)
    dyn = -mean_energy(fam.state(kappa=kappa), fam.spec) * eta
    return _principal_geometric(ising_spin_s_vector(2, s, kappa, 0.0, 0.0), ising_spin_s_vector(2, s, kappa, 0.0, eta), dyn)


def _pm_geometric(nu, C):
    from .dynamics import mean_energy
    from .models import xxz_spec
    from .statespace import PureState

    c = F.plus_minus_coeffs(np.pi / 2)
    eta = C / F.short_time_slope(np.pi / 2, nu)
    spec = xxz_spec(1.0, nu, 0.0)
    dyn = -mean_energy(PureState(spec.basis, c, normalize=True), spec) * eta / 2
    return _principal_geometric(xxz_vector(c, 0.0, 0.0, nu), xxz_vector(c, eta, 0.0, nu), dyn)


def _fd_curvature(fid, params, u):
    u = np.asarray(u, dtype=float)
    K = curvature_field(closed_metric_fn(fid, params), u, np.full_like(u, 0.3), 1e-4)
    cap = (u < 1e-3) | (u > np.pi - 1e-3)
    return np.where(cap, np.nan, K)


def _registry() -> dict[str, FigureSpec]:
    unit = lambda _: (0.0, 1.0)
    sink = lambda k: (0.0, float(abs(np.sin(k))))
    return {
        "3.1a": FigureSpec(
            "3.1a", "3.52", "C", "v_C", (("chi=pi/2,k=1", 0.0),), unit,
            lambda _, C: F.evaluate("3.52", C=C),
            lambda _, C: _drift_speed(C),
        ),
        "3.1b": FigureSpec(
            "3.1b", "3.53", "C", "s_C", (("chi=pi/2,k=1", 0.0),), unit,
            lambda _, C: F.evaluate("3.53", C=C),
            lambda _, C: F.evaluate("3.53", C=C[0]) + cumulative_trapezoid(_drift_speed(C), C, initial=0.0),
        ),
        "3.2": FigureSpec(
            "3.2", "3.72-derived", "C", "v", _kappa_series(), sink,
            lambda k, C: F.evaluate("3.72-derived", J=1.0, kappa=k, C=C),
            lambda k, C: _qubit_pair_dE(C, k), {"J": 1.0},
        ),
        "3.3": FigureSpec(
            "3.3", "3.73", "C", "s", _kappa_series(), sink,
            lambda k, C: F.evaluate("3.73", kappa=k, C=C),
            lambda k, C: _qubit_pair_dE(C, k) * k,
        ),
        "3.4": FigureSpec(
            "3.4", "3.74", "C", "T", _kappa_series(), sink,
            lambda k, C: F.evaluate("3.74", J=1.0, kappa=k, C=C),
            lambda k, C: _qubit_pair_dE(C, k) * k / 0.5, {"J": 1.0},
        ),
        "3.5": FigureSpec(
            "3.5", "3.105", "x", "v", _spin_series(), unit,
            lambda s, x: F.evaluate("3.105", s=s, J=1.0, x=x, eta_tilde=ETA_TILDE),
            _spin_pair_dE, {"J": 1.0, "eta_tilde": ETA_TILDE},
        ),
        "3.6": FigureSpec(
            "3.6", "3.106", "x", "s", _spin_series(), unit,
            lambda s, x: F.evaluate("3.106", s=s, x=x, eta=ETA_TILDE, eta_pmax=ETA_PMAX),
            lambda s, x: _spin_pair_dE(s, x) * ETA_PMAX, {"eta": ETA_TILDE, "eta_pmax": ETA_PMAX},
        ),
        "3.7": FigureSpec(
            "3.7", "3.107-derived", "x", "T", _spin_series(), unit,
            lambda s, x: F.evaluate("3.107-derived", s=s, J=1.0, x=x, eta=ETA_TILDE, eta_pmax=ETA_PMAX),
            lambda s, x: _spin_pair_dE(s, x) * ETA_PMAX / F.evaluate("3.89", N=2, s=s, J=1.0),
            {"J": 1.0, "eta": ETA_TILDE, "eta_pmax": ETA_PMAX},
        ),
        "4.1": FigureSpec(
            "4.1", "4.24", "C", "Phi_g", tuple((f"nu={nu:g}", nu) for nu in NU_SERIES), unit,
            lambda nu, C: F.evaluate("4.24", C=C, chi=np.pi / 2, nu=nu, kappa=0.0),
            lambda nu, C: _vec(lambda c: _pm_geometric(nu, c), C), {"chi": np.pi / 2, "kappa": 0.0},
        ),
        "4.2": FigureSpec(
            "4.2", "4.30", "eta", "K", tuple((f"N={n}", n) for n in N_SERIES), lambda _: (0.0, np.pi),
            lambda N, e: F.evaluate("4.30", N=int(N), eta=e),
            lambda N, e: _fd_curvature("4.27", {"N": int(N)}, e),
        ),
        "4.3": FigureSpec(
            "4.3", "4.46-printed", "eta", "Phi_AA", tuple((f"N={n}", n) for n in N_SERIES), lambda _: (0.0, np.pi),
            lambda N, e: F.evaluate("4.46-printed", N=int(N), K=F.evaluate("4.30", N=int(N), eta=e)),
            lambda N, e: _vec(lambda x: _qubit_cycle_aa(int(N), x), e),
        ),
        "4.4": FigureSpec(
            "4.4", "4.54", "C", "K", _kappa_series(), sink,
            lambda k, C: F.evaluate("4.54", C=C, kappa=k),
            lambda k, C: _fd_curvature("4.48", {}, _pair_eta(C, k)),
        ),
        "4.5": FigureSpec(
            "4.5", "4.57", "C", "Phi_g", _kappa_series(), sink,
            lambda k, C: F.evaluate("4.57", C=C, kappa=k),
            lambda k, C: _vec(lambda e: _qubit_pair_geometric(k, e), _pair_eta(C, k)),
        ),
        "4.6": FigureSpec(
            "4.6", "4.58", "C", "Phi_AA", _kappa_series(), sink,
            lambda k, C: F.evaluate("4.58", C=C, kappa=k),
            lambda k, C: _vec(lambda e: _qubit_cycle_aa(2, e), _pair_eta(C, k)),
        ),
        "4.7": FigureSpec(
            "4.7", "4.82", "x", "K", _spin_series(), unit,
            lambda s, x: F.evaluate("4.82", s=s, x=x),
            lambda s, x: _fd_curvature("4.61", {"N": 2, "s": s}, _iconc_kappa(x)),
            {"eta_tilde": ETA_TILDE},
        ),
        "4.8": FigureSpec(
            "4.8", "4.85", "x", "Phi_g", _spin_series(), unit,
            lambda s, x: F.evaluate("4.85", s=s, x=x, eta=ETA_FIG_4_8, eta_bar=1.0),
            lambda s, x: _vec(lambda k: _spin_pair_geometric(s, k, ETA_FIG_4_8), _iconc_kappa(x)),
            {"eta": ETA_FIG_4_8, "eta_bar": 1.0},
        ),
    }


FIGURES: dict[str, FigureSpec] = _registry()


def figure_ids() -> list[str]:
    return list(FIGURES)


def figure_rows(figure_id: str, grid: int = DEFAULT_GRID, oracle: bool = False) -> list[tuple]:
    """(series, x, y[, oracle]) rows in output order."""
    try:
        spec = FIGURES[figure_id]
    except KeyError:
        raise DomainError(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURES)}") from None
    if grid < 1:
        raise DomainError("the grid must be non-empty")
    rows = []
    with np.errstate(divide="ignore", invalid="ignore"):
        for label, p in spec.series:
            lo, hi = spec.x_range(p)
            x = np.linspace(lo, hi, grid)
            y = np.broadcast_to(np.asarray(spec.y(p, x), dtype=float), x.shape)
            o = np.broadcast_to(np.asarray(spec.oracle(p, x), dtype=float), x.shape) if oracle else None
            for k in range(grid):
                rows.append((label, x[k], y[k]) + ((o[k],) if oracle else ()))
    return rows


def render_csv(rows: Sequence[tuple], oracle: bool = False) -> str:
    buf = io.StringIO(newline="")
    buf.write("series,x,y" + (",oracle" if oracle else "") + "\n")
    for row in rows:
        buf.write(",".join([row[0]] + [_fmt(float(v)) for v in row[1:]]) + "\n")
    return buf.getvalue()


def render_png(figure_id: str, rows: Sequence[tuple], path: str | Path) -> None:
    """Plot the rows of one figure to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    spec = FIGURES[figure_id]
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    for label, _ in spec.series:
        pts = [(r[1], r[2]) for r in rows if r[0] == label]
        xs, ys = zip(*pts)
        ax.plot(xs, ys, label=label)
        if len(rows[0]) > 3:
            os_ = [r[3] for r in rows if r[0] == label]
            ax.plot(xs, os_, "k:", lw=0.8)
    ax.set_xlabel(spec.x_label)
    ax.set_ylabel(spec.y_label)
    ax.set_title(f"figure {figure_id} (formula {spec.formula_id})")
    if len(spec.series) > 1:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def run_figure(job: FigureJob) -> str:
    """Write (or return) the CSV of one figure; optionally also a PNG."""
    rows = figure_rows(job.figure_id, job.grid, job.oracle)
    text = render_csv(rows, job.oracle)
    if job.out is not None:
        Path(job.out).write_text(text, encoding="utf-8", newline="\n")
    if job.png is not None:
        render_png(job.figure_id, rows, job.png)
    return text
