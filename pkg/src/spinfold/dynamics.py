"""Energy uncertainty, evolution speed, geodesic distance and time-optimal evolution.

Canonical speed is ds/dt = dE along the orbit; the alternative convention
doubles it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq, minimize_scalar

from . import formulas
from .errors import ConsistencyError, DomainError
from .evolution import EvolvedFamily, ising_qubit_family
from .geometry import time_metric
from .models import ModelSpec, diagonal_energies, hamiltonian_matrix
from .statespace import PureState

SPEED_CHECK_TOL = 1e-6
CONVENTIONS = ("canonical", "paper")


def energy_moments(psi: PureState, spec: ModelSpec) -> tuple[float, float]:
    """<H> and <H^2> of a pure state."""
    if psi.basis != spec.basis:
        raise DomainError("state and model use different bases")
    a = psi.amplitudes
    if spec.is_diagonal:
        E = diagonal_energies(spec)
        p = np.abs(a) ** 2
        return float(p @ E), float(p @ E**2)
    Ha = hamiltonian_matrix(spec) @ a
    return float(np.real(np.vdot(a, Ha))), float(np.real(np.vdot(Ha, Ha)))


def mean_energy(psi: PureState, spec: ModelSpec) -> float:
    return energy_moments(psi, spec)[0]


def energy_uncertainty(psi: PureState, spec: ModelSpec) -> float:
    """sqrt(<H^2> - <H>^2), clipped at zero."""
    mean, second = energy_moments(psi, spec)
    return float(np.sqrt(max(second - mean**2, 0.0)))


@dataclass(frozen=True)
class SpeedSample:
    point: Mapping[str, float]
    v: float
    convention: str = "canonical"


def speed(
    family: EvolvedFamily,
    point: Mapping[str, float],
    direction: str | None = None,
    convention: str = "canonical",
    h: float = 1e-5,
) -> SpeedSample:
    """Speed along physical time from the numeric metric, cross-checked against dE."""
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown speed convention {convention!r}")
    if direction is not None and direction not in family.time_velocity:
        raise DomainError(f"{direction!r} is not a time-like coordinate of the {family.name} family")
    g_tt = time_metric(family, point, h)
    v = float(np.sqrt(max(g_tt, 0.0)))
    dE = energy_uncertainty(family.state(**point), family.spec)
    if abs(v - dE) > SPEED_CHECK_TOL * max(1.0, dE):
        raise ConsistencyError(f"metric speed {v:.12g} differs from energy uncertainty {dE:.12g}")
    if convention == "paper":
        v *= 2
    return SpeedSample(family.point(**point), v, convention)


def speed_closed(formula_id: str, params: Mapping) -> formulas.TaggedValue:
    """Verbatim printed speed, tagged with its formula id and oracle verdict."""
    return formulas.evaluate_tagged(formula_id, "speed", **params)


def geodesic_distance(source, params: Mapping | None = None, interval: tuple[float, float] = (0.0, 1.0)) -> float:
    """Length of an evolution path.

    With a family, ``params`` is the starting chart point and the canonical
    speed is integrated over ``interval``.  With a formula id the printed
    distance is evaluated verbatim from ``params``.
    """
    params = dict(params or {})
    if isinstance(source, str):
        return formulas.evaluate_tagged(source, "distance", **params)
    family: EvolvedFamily = source
    t0, t1 = map(float, interval)
    if t0 == t1:
        return 0.0

    def rate(t):
        return energy_uncertainty(family.state(**family.advance(params, t)), family.spec)

    value, _ = quad(rate, min(t0, t1), max(t0, t1), epsabs=1e-13, epsrel=1e-12, limit=200)
    return float(value)


# time-optimal evolution -------------------------------------------------


@dataclass(frozen=True)
class BrachistochroneReport:
    """Optimum of the speed over the initial-state chart.

    ``T_opt`` is s_min / v_max at the numerical optimum; ``printed_T`` is the
    printed closed-form optimum and ``agrees`` records whether they match
    within 1e-8.
    """

    argmax_point: Mapping[str, float]
    v_max: float
    s_min: float
    T_opt: float
    formula_id: str
    printed_T: float
    agrees: bool
    printed_argmax: float = float("nan")
    printed_v_max: float = float("nan")
    details: Mapping[str, float] = field(default_factory=dict)


def maximize_1d(f: Callable[[float], float], lo: float, hi: float, grid: int = 181, xtol: float = 1e-10) -> float:
    """Global maximizer of a smooth 1-D function on [lo, hi].

    A grid scan brackets the best peak, golden-section search refines it, and
    a root solve on the central-difference derivative polishes the result.
    """
    xs = np.linspace(lo, hi, grid)
    ys = np.array([f(x) for x in xs])
    k = int(np.argmax(ys))
    if k == 0 or k == grid - 1:
        return float(xs[k])
    neg = lambda x: -f(x)
    res = minimize_scalar(neg, bracket=(xs[k - 1], xs[k], xs[k + 1]), method="golden", tol=xtol)
    x = float(res.x)
    h = 1e-5
    df = lambda x: (f(x + h) - f(x - h)) / (2 * h)
    a, b = max(lo, x - 1e-3), min(hi, x + 1e-3)
    if df(a) > 0 > df(b):
        x = brentq(df, a, b, xtol=1e-14, rtol=1e-15)
    return x


def _xxz_sinusoidal(params: Mapping) -> BrachistochroneReport:
    J = float(params.get("J", 1.0))
    v = lambda eta: formulas.speed_sinusoidal_special(J=J, eta=eta)
    eta = maximize_1d(v, 0.0, np.pi)
    v_max = float(v(eta))
    s_min = float(formulas.distance_sinusoidal(eta=eta))
    printed = float(formulas.time_sinusoidal(J=J))
    T = s_min / v_max
    return BrachistochroneReport(
        {"eta": eta}, v_max, s_min, T, "3.36", printed, abs(T - printed) <= 1e-8,
        details={"sin_2eta": float(np.sin(2 * eta))},
    )


def _ising_qubit(params: Mapping) -> BrachistochroneReport:
    N = int(params.get("N", 2))
    J = float(params.get("J", 1.0))
    kappa = float(params.get("kappa", 1.0))
    fam = ising_qubit_family(N, J)
    dE = lambda eta: energy_uncertainty(fam.state(eta=eta), fam.spec)
    eta = maximize_1d(dE, 0.0, np.pi / 2)
    v_max = float(dE(eta))
    s_min = float(formulas.distance_qubits_min(N=N, kappa=kappa))
    printed = float(formulas.time_qubits(N=N, J=J))
    T = s_min / v_max
    return BrachistochroneReport(
        {"eta": eta}, v_max, s_min, T, "3.67", printed, abs(T - printed) <= 1e-8,
        printed_argmax=float(formulas.argmax_qubits(N=N)),
        printed_v_max=float(formulas.vmax_qubits(N=N, J=J)),
        details={
            "sin_eta": float(np.sin(eta)),
            "printed_speed_argmax_sin2": (N - 1) / (2 * (2 * N - 3)),
        },
    )


def _ising_spin_s(params: Mapping) -> BrachistochroneReport:
    N = int(params.get("N", 2))
    s = float(params.get("s", 0.5))
    J = float(params.get("J", 1.0))
    eta = float(params.get("eta", 1.0))
    v = lambda kappa: formulas.speed_spin_s(N=N, s=s, J=J, kappa=kappa)
    kappa = maximize_1d(v, 0.0, np.pi / 2)
    v_max = float(v(kappa))
    s_min = float(formulas.distance_spin_s_min(N=N, s=s, eta=eta))
    printed = float(formulas.time_spin_s(N=N, s=s, J=J, eta=eta))
    T = s_min / v_max
    return BrachistochroneReport(
        {"kappa": kappa}, v_max, s_min, T, "3.92", printed, abs(T - printed) <= 1e-8,
        printed_argmax=float(formulas.argmax_spin_s(N=N, s=s)),
        printed_v_max=float(formulas.vmax_spin_s(N=N, s=s, J=J)),
        details={"sin_kappa": float(np.sin(kappa)), "t": eta / J},
    )


_BRACHISTOCHRONES = {
    "xxz-sinusoidal": _xxz_sinusoidal,
    "ising-qubit": _ising_qubit,
    "ising-spin-s": _ising_spin_s,
}


def brachistochrone(family_id: str, params: Mapping | None = None) -> BrachistochroneReport:
    """Time-optimal evolution for one of the fixed-Hamiltonian families.

    ``xxz-sinusoidal``: XXZ with the sinusoidal anisotropy profile, params J.
    ``ising-qubit``: params N, J and the evolution angle kappa of the distance.
    ``ising-spin-s``: params N, s, J and eta = Jt.
    """
    try:
        solver = _BRACHISTOCHRONES[family_id]
    except KeyError:
        raise DomainError(f"unknown brachistochrone family {family_id!r}") from None
    return solver(dict(params or {}))


def _entanglement_range(formula_id: str, params: Mapping) -> tuple[float, float]:
    if formula_id == "3.74":
        return 0.0, float(np.abs(np.sin(params["kappa"])))
    if formula_id in ("3.107-printed", "3.107-derived"):
        return 0.0, 1.0
    if formula_id == "tau-tilde":
        return 0.0, 1.0
    raise DomainError(f"{formula_id!r} is not an entanglement-parametrized optimal time")


def optimal_time_vs_entanglement(formula_id: str, params: Mapping, C: float) -> formulas.TaggedValue:
    """Verbatim optimal time at entanglement C.

    For the I-concurrence forms C is the ratio x = C/C_max in [0, 1].
    """
    lo, hi = _entanglement_range(formula_id, params)
    if not lo - 1e-12 <= C <= hi + 1e-12:
        raise DomainError(f"entanglement {C} outside [{lo}, {hi}] for formula {formula_id}")
    p = dict(params)
    if formula_id.startswith("3.107"):
        p["x"] = C
    else:
        p["C"] = C
    return formulas.evaluate_tagged(formula_id, "time", **p)
