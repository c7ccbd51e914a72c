"""Total, dynamic, geometric, cyclic (Aharonov-Anandan) and topological phases.

Pointwise phases live in (-pi, pi].  Path quantities unwrap the total phase
by continuity, refining the sampling wherever successive samples jump by
more than pi/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from . import formulas
from .errors import BranchError, ConsistencyError, DomainError
from .evolution import PERIODICITY_TOL, EvolvedFamily, aligned_residual, wrap_angle
from .dynamics import mean_energy
from .statespace import PureState, overlap

ORTHOGONAL_TOL = 1e-9
PATH_MIN_OVERLAP = 1e-6
MIN_SAMPLES = 256
JUMP_LIMIT = np.pi / 2
MAX_REFINE_DEPTH = 30

Path = Callable[[float], np.ndarray]


@dataclass(frozen=True)
class PhaseDecomposition:
    total: float
    dynamic: float
    geometric: float
    branch_windings: int
    unwrapped_total: float


@dataclass(frozen=True)
class CyclePhase:
    aa_phase: float
    topological_part: float
    cycle: Mapping
    dynamic: float = 0.0
    bargmann: float = float("nan")


def total_phase(initial: PureState, evolved: PureState) -> float:
    """arg <initial|evolved> in (-pi, pi]."""
    ov = overlap(initial, evolved)
    if abs(ov) <= ORTHOGONAL_TOL:
        raise BranchError("states are orthogonal; the total phase is undefined", sample=0.0)
    return wrap_angle(np.angle(ov))


def family_path(family: EvolvedFamily, point: Mapping[str, float] | None = None) -> Path:
    start = family.point(**(point or {}))
    return lambda t: family.vector(**family.advance(start, t))


def dynamic_phase(family: EvolvedFamily, t: float, point: Mapping[str, float] | None = None) -> float:
    """-<H> t, exact for a time-independent Hamiltonian."""
    return -mean_energy(family.state(**(point or {})), family.spec) * t


def dynamic_phase_closed(formula_id: str, params: Mapping) -> formulas.TaggedValue:
    return formulas.evaluate_tagged(formula_id, "dynamic-phase", **params)


def _phase_at(psi0: np.ndarray, path: Path, t: float) -> complex:
    ov = np.vdot(psi0, path(t))
    if abs(ov) < PATH_MIN_OVERLAP:
        raise BranchError(f"overlap {abs(ov):.2e} below {PATH_MIN_OVERLAP} at t={t:.12g}", sample=t)
    return ov


def unwrap_total(path: Path, t0: float, t1: float, samples: int = MIN_SAMPLES) -> tuple[float, float]:
    """(wrapped end phase, unwrapped end phase) of <psi(t0)|psi(t)> along the path."""
    if samples < MIN_SAMPLES:
        raise DomainError(f"at least {MIN_SAMPLES} samples are required")
    psi0 = path(t0)
    ts = np.linspace(t0, t1, samples + 1)
    phases = [float(np.angle(_phase_at(psi0, path, t))) for t in ts]
    acc = phases[0]

    def advance(a, pa, b, pb, depth):
        step = wrap_angle(pb - pa)
        if abs(step) <= JUMP_LIMIT:
            return step
        if depth >= MAX_REFINE_DEPTH:
            raise BranchError(f"phase jump not resolved near t={a:.12g}", sample=a)
        m = 0.5 * (a + b)
        pm = float(np.angle(_phase_at(psi0, path, m)))
        return advance(a, pa, m, pm, depth + 1) + advance(m, pm, b, pb, depth + 1)

    for k in range(samples):
        acc += advance(ts[k], phases[k], ts[k + 1], phases[k + 1], 0)
    return wrap_angle(phases[-1]), float(acc)


def path_dynamic_phase(path: Path, t0: float, t1: float, h: float = 1e-6, panels: int = 64) -> float:
    """Im of the integral of <psi|d psi/dt>, valid for any normalized path."""

    def rate(t):
        psi = path(t)
        d = (path(t + h) - path(t - h)) / (2 * h)
        return float(np.imag(np.vdot(psi, d)))

    # composite Gauss-Legendre with 16 nodes per panel
    x, w = np.polynomial.legendre.leggauss(16)
    edges = np.linspace(t0, t1, panels + 1)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        total += half * sum(wk * rate(mid + half * xk) for xk, wk in zip(x, w))
    return float(total)


def path_phases(path: Path, t0: float, t1: float, samples: int = MIN_SAMPLES, dynamic: float | None = None) -> PhaseDecomposition:
    """Decompose the phase of a general path; ``dynamic`` overrides the quadrature."""
    wrapped, unwrapped = unwrap_total(path, t0, t1, samples)
    dyn = path_dynamic_phase(path, t0, t1) if dynamic is None else float(dynamic)
    windings = int(round((unwrapped - wrapped) / (2 * np.pi)))
    return PhaseDecomposition(wrapped, dyn, unwrapped - dyn, windings, unwrapped)


def geometric_phase(
    family: EvolvedFamily,
    interval: tuple[float, float],
    point: Mapping[str, float] | None = None,
    samples: int = MIN_SAMPLES,
) -> PhaseDecomposition:
    """Phases accumulated by time evolution from ``point`` over ``interval``.

    The interval is in physical time; the state at its start is the reference.
    """
    t0, t1 = map(float, interval)
    if t0 == t1:
        return PhaseDecomposition(0.0, 0.0, 0.0, 0, 0.0)
    start = family.advance(point or {}, t0)
    path = family_path(family, start)
    return path_phases(path, 0.0, t1 - t0, samples, dynamic=dynamic_phase(family, t1 - t0, start))


def geometric_phase_closed(formula_id: str, params: Mapping) -> formulas.TaggedValue:
    return formulas.evaluate_tagged(formula_id, "geometric-phase", **params)


def _bargmann(vecs: list) -> float:
    prod = 1.0 + 0j
    for a, b in zip(vecs[:-1], vecs[1:]):
        ov = np.vdot(a, b)
        prod *= ov / abs(ov)
    return float(-np.angle(prod))


def bargmann_phase(path: Path, t0: float, t1: float, samples: int = 2048) -> float:
    """-arg of the closed Bargmann product; the geometric phase of the loop mod 2 pi.

    The O(1/n^2) discretization error is removed by Richardson extrapolation
    between ``samples`` and ``samples/2`` vertices.
    """
    ts = np.linspace(t0, t1, samples + 1)
    vecs = [path(t) for t in ts[:-1]] + [path(t0)]
    fine = _bargmann(vecs)
    coarse = _bargmann(vecs[::2])
    return wrap_angle(fine + wrap_angle(fine - coarse) / 3)


def time_cycle(family: EvolvedFamily, point: Mapping[str, float], coordinate: str, span: float) -> dict:
    """Cycle description: evolve until ``coordinate`` advances by ``span``."""
    rate = family.time_velocity.get(coordinate)
    if not rate:
        raise DomainError(f"{coordinate!r} does not advance in time for the {family.name} family")
    return {"point": family.point(**point), "duration": span / rate, "coordinate": coordinate, "span": span}


def aa_phase(family: EvolvedFamily, cycle: Mapping, samples: int = MIN_SAMPLES) -> CyclePhase:
    """Aharonov-Anandan phase of a closed evolution.

    aa_phase = wrap(arg <psi(0)|psi(T)> - dynamic); the topological part is
    the unwrapped total phase over the cycle (nan when unwrapping fails).
    """
    start = family.point(**cycle["point"])
    T = float(cycle["duration"])
    path = family_path(family, start)
    psi0, psiT = path(0.0), path(T)
    if aligned_residual(psi0, psiT) > PERIODICITY_TOL:
        raise DomainError("the evolution does not return to the initial ray")
    dyn = dynamic_phase(family, T, start)
    end = float(np.angle(np.vdot(psi0, psiT)))
    aa = wrap_angle(end - dyn)
    try:
        _, top = unwrap_total(path, 0.0, T, samples)
    except BranchError:
        top = float("nan")
    barg = bargmann_phase(path, 0.0, T)
    if abs(wrap_angle(barg - aa)) > 1e-6:
        raise ConsistencyError(f"Bargmann phase {barg:.8g} disagrees with AA phase {aa:.8g}")
    return CyclePhase(aa, top, dict(cycle), dyn, barg)


def aa_phase_closed(formula_id: str, params: Mapping) -> formulas.TaggedValue:
    return formulas.evaluate_tagged(formula_id, "aa-phase", **params)


def topological_phase(formula_id: str, params: Mapping) -> formulas.TaggedValue:
    """Verbatim printed topological phase."""
    return formulas.evaluate_tagged(formula_id, "topological", **params)


def _entanglement_range(formula_id: str, params: Mapping) -> tuple[float, float]:
    if formula_id in ("4.57", "4.58"):
        return 0.0, float(np.abs(np.sin(params["kappa"])))
    if formula_id == "4.85":
        return 0.0, 1.0
    if formula_id == "4.24":
        return 0.0, 1.0
    raise DomainError(f"{formula_id!r} is not an entanglement-parametrized phase")


def phase_vs_entanglement(formula_id: str, C: float, params: Mapping) -> formulas.TaggedValue:
    """Verbatim phase at entanglement C; for the I-concurrence form C is C/C_max."""
    lo, hi = _entanglement_range(formula_id, params)
    if not lo - 1e-12 <= C <= hi + 1e-12:
        raise DomainError(f"entanglement {C} outside [{lo}, {hi}] for formula {formula_id}")
    key = "x" if formula_id == "4.85" else "C"
    fn = formulas.get(formula_id)
    return formulas.TaggedValue(fn(**{**params, key: C}), formula_id)


def contracted_length_path(path: Path, t0: float, t1: float, dynamic: float | None = None, samples: int = 2048) -> float:
    """Integral of sqrt(dL^2 - dS^2) along a section that closes the path.

    The section multiplies the path by exp(-i f(t)) with f linear and
    f(t1) - f(t0) chosen so the end point lands on the initial phase (the
    branch nearest the dynamic phase).  dL is the Hilbert-space length of
    the section and dS the FS line element.
    """
    span = t1 - t0
    if span == 0:
        return 0.0
    psi0, psi1 = path(t0), path(t1)
    end = float(np.angle(np.vdot(psi0, psi1))) if abs(np.vdot(psi0, psi1)) > PATH_MIN_OVERLAP else 0.0
    dyn = path_dynamic_phase(path, t0, t1) if dynamic is None else dynamic
    f_end = dyn - wrap_angle(dyn - end)
    slope = f_end / span
    ts, dt = np.linspace(t0, t1, samples, endpoint=False, retstep=True)
    ts = ts + dt / 2
    h = 1e-6
    total = 0.0
    for t in ts:
        sec = lambda x: np.exp(-1j * slope * (x - t0)) * path(x)
        psi = sec(t)
        d = (sec(t + h) - sec(t - h)) / (2 * h)
        dL2 = float(np.real(np.vdot(d, d)))
        dS2 = dL2 - abs(np.vdot(psi, d)) ** 2
        gap = dL2 - dS2
        if gap < -1e-10:
            raise ConsistencyError(f"dL^2 < dS^2 at t={t:.6g}")
        total += np.sqrt(max(gap, 0.0)) * dt
    return float(total)


def contracted_length_phase(
    family: EvolvedFamily, interval: tuple[float, float], point: Mapping[str, float] | None = None, samples: int = 2048
) -> float:
    t0, t1 = map(float, interval)
    start = family.advance(point or {}, t0)
    return contracted_length_path(
        family_path(family, start), 0.0, t1 - t0, dynamic_phase(family, t1 - t0, start), samples
    )
