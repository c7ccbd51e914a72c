"""Fubini-Study metric, Berry connection, Gaussian curvature and Euler characteristic.

The canonical metric is the real part of the quantum geometric tensor,
g = Re<d psi|d psi> - beta beta with beta = Re(i <psi|d psi>), computed from
central-difference tangent vectors.  Closed forms are evaluated verbatim
through :mod:`spinfold.formulas`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from . import formulas
from .errors import ConvergenceError, DomainError
from .evolution import EvolvedFamily

CAP_EXCLUSION = 1e-3
DET_FLOOR = 1e-8
PSD_SLACK = 1e-10
EULER_EPS = 1e-3
EULER_MIN_GRID = 64
CONE_TOL = 1e-2
RICHARDSON_TOL = 1e-2


@dataclass(frozen=True)
class MetricPatch:
    """Metric components on a one- or two-coordinate chart.

    One-coordinate charts store the single component in ``g_uu``.
    """

    chart: tuple[str, ...]
    point: Mapping[str, float]
    g_uu: float
    g_uv: float = 0.0
    g_vv: float = 0.0
    source: str = "numeric"
    scale_note: float = 1.0

    @property
    def matrix(self) -> np.ndarray:
        if len(self.chart) == 1:
            return np.array([[self.g_uu]])
        return np.array([[self.g_uu, self.g_uv], [self.g_uv, self.g_vv]])

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    @property
    def is_psd(self) -> bool:
        return self.g_uu >= -PSD_SLACK and self.g_vv >= -PSD_SLACK and self.det >= -PSD_SLACK

    def scaled(self, c: float) -> "MetricPatch":
        return MetricPatch(
            self.chart, self.point, c * self.g_uu, c * self.g_uv, c * self.g_vv, self.source, c * self.scale_note
        )


@dataclass(frozen=True)
class ConnectionSample:
    point: Mapping[str, float]
    beta_u: float
    beta_v: float = 0.0


@dataclass(frozen=True)
class CurvatureSample:
    point: Mapping[str, float]
    K: float
    valid: bool


@dataclass(frozen=True)
class EulerResult:
    bulk_integral: float
    defect_sum: float
    chi: float
    chi_rounded: int
    resolution: int = 0
    richardson_delta: float = 0.0
    cone_variation: float = 0.0


# numeric quantum geometric tensor ---------------------------------------

Tangent = Mapping[str, float]


def _unit(name: str) -> dict:
    return {name: 1.0}


def _shifted(point: Mapping[str, float], tangent: Tangent, step: float) -> dict:
    out = dict(point)
    for name, rate in tangent.items():
        out[name] = out[name] + step * rate
    return out


def _derivative(family: EvolvedFamily, point: Mapping[str, float], tangent: Tangent, h: float) -> np.ndarray:
    plus = family.vector(**_shifted(point, tangent, h))
    minus = family.vector(**_shifted(point, tangent, -h))
    if not (np.all(np.isfinite(plus)) and np.all(np.isfinite(minus))):
        raise DomainError(f"family is undefined on the stencil around {dict(point)}")
    return (plus - minus) / (2 * h)


def qgt_tensor(
    family: EvolvedFamily, point: Mapping[str, float], tangents: Sequence[Tangent], h: float = 1e-5
) -> tuple[np.ndarray, np.ndarray]:
    """Metric matrix and Berry connection along arbitrary tangent directions."""
    if not 1e-7 <= h <= 1e-3:
        raise DomainError(f"finite-difference step {h} outside [1e-7, 1e-3]")
    point = family.point(**point)
    psi = family.vector(**point)
    if not np.all(np.isfinite(psi)):
        raise DomainError(f"family is undefined at {point}")
    psi = psi / np.linalg.norm(psi)
    d = [_derivative(family, point, t, h) for t in tangents]
    beta = np.array([-np.imag(np.vdot(psi, dk)) for dk in d])
    n = len(d)
    g = np.empty((n, n))
    for a in range(n):
        for b in range(a, n):
            g[a, b] = g[b, a] = np.real(np.vdot(d[a], d[b])) - beta[a] * beta[b]
    return g, beta


def default_chart(family: EvolvedFamily) -> tuple[str, str]:
    return (family.coords[0], family.coords[-1])


def qgt_numeric(
    family: EvolvedFamily,
    point: Mapping[str, float],
    h: float = 1e-5,
    chart: Sequence[str] | None = None,
) -> tuple[MetricPatch, ConnectionSample]:
    """Canonical metric and Berry connection on a coordinate chart of ``family``."""
    chart = tuple(chart) if chart is not None else default_chart(family)
    for name in chart:
        if name not in family.coords:
            raise DomainError(f"{name!r} is not a coordinate of the {family.name} family")
    g, beta = qgt_tensor(family, point, [_unit(c) for c in chart], h)
    full = family.point(**point)
    if len(chart) == 1:
        return MetricPatch(chart, full, float(g[0, 0])), ConnectionSample(full, float(beta[0]))
    return (
        MetricPatch(chart, full, float(g[0, 0]), float(g[0, 1]), float(g[1, 1])),
        ConnectionSample(full, float(beta[0]), float(beta[1])),
    )


def time_metric(family: EvolvedFamily, point: Mapping[str, float], h: float = 1e-5) -> float:
    """g_tt along physical time: the squared canonical speed."""
    g, _ = qgt_tensor(family, point, [family.time_velocity], h)
    return float(g[0, 0])


# affine coordinates -----------------------------------------------------


def fs_metric_affine(z) -> np.ndarray:
    """Hermitian FS metric d^2 ln K / dz dz* with K = 1 + sum |z|^2."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if len(z) > 8:
        raise DomainError("affine metric supports at most 8 complex coordinates")
    return formulas.fs_affine(z)


def affine_coordinates(vec: np.ndarray, pivot: int = 0) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    if abs(vec[pivot]) < 1e-12:
        raise DomainError("pivot amplitude vanishes; affine chart undefined")
    return np.delete(vec / vec[pivot], pivot)


def affine_pullback(
    family: EvolvedFamily,
    point: Mapping[str, float],
    h: float = 1e-5,
    chart: Sequence[str] | None = None,
    pivot: int = 0,
) -> MetricPatch:
    """Pull the affine FS metric back to the chart through z = amp / amp[pivot]."""
    chart = tuple(chart) if chart is not None else default_chart(family)
    full = family.point(**point)
    z = affine_coordinates(family.vector(**full), pivot)
    gz = fs_metric_affine(z)
    dz = []
    for name in chart:
        zp = affine_coordinates(family.vector(**_shifted(full, _unit(name), h)), pivot)
        zm = affine_coordinates(family.vector(**_shifted(full, _unit(name), -h)), pivot)
        dz.append((zp - zm) / (2 * h))
    # ds^2 = g_{mu nu*} dz^mu dz*^nu; gz[mu, nu] multiplies dz^mu conj(dz^nu)
    g = np.array([[np.real(np.einsum("m,mn,n->", dz[a], gz, np.conj(dz[b]))) for b in range(len(chart))] for a in range(len(chart))])
    if len(chart) == 1:
        return MetricPatch(chart, full, float(g[0, 0]), source="affine")
    return MetricPatch(chart, full, float(g[0, 0]), float(g[0, 1]), float(g[1, 1]), source="affine")


# closed-form metrics ----------------------------------------------------


def metric_closed(formula_id: str, params: Mapping, point: Mapping[str, float]) -> MetricPatch:
    """Evaluate a printed metric verbatim on its own chart."""
    f = formulas.get(formula_id, "metric")
    g_uu, g_uv, g_vv = f(**{**params, **point})
    return MetricPatch(f.chart, dict(point), float(g_uu), float(g_uv), float(g_vv), source=f"closed_form({formula_id})")


def closed_metric_fn(formula_id: str, params: Mapping) -> Callable:
    """metric(u, v) -> (E, F, G) for a printed two-coordinate metric; arrays allowed."""
    f = formulas.get(formula_id, "metric")
    if len(f.chart) != 2:
        raise DomainError(f"formula {formula_id} is not a two-coordinate metric")
    u_name, v_name = f.chart

    def metric(u, v):
        E, F, G = f(**{**params, u_name: u, v_name: v})
        shape = np.broadcast(u, v).shape
        return tuple(np.broadcast_to(np.asarray(x, dtype=float), shape) for x in (E, F, G))

    return metric


# curvature --------------------------------------------------------------


def _as_tuple_metric(metric: Callable) -> Callable:
    def wrapped(u, v):
        out = metric(u, v)
        if isinstance(out, MetricPatch):
            return out.g_uu, out.g_uv, out.g_vv
        return out

    return wrapped


def curvature_field(metric: Callable, u, v, h: float = 1e-4) -> np.ndarray:
    """Gaussian curvature of metric(u, v) -> (E, F, G) by central differences.

    Vectorized over u and v.  Uses the orthogonal-metric formula when F
    vanishes on the stencil and the Brioschi formula otherwise.  The u-step
    shrinks to u/2 near u = 0 so stencils stay on the chart.
    """
    metric = _as_tuple_metric(metric)
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    hu = np.minimum(h, np.where(u > 0, u / 2, h))
    hu = np.where(hu > 0, hu, h)
    hv = h

    def at(du, dv):
        E, F, G = metric(u + du * hu, v + dv * hv)
        return (np.asarray(E, float), np.asarray(F, float), np.asarray(G, float))

    c = at(0, 0)
    up, um = at(1, 0), at(-1, 0)
    vp, vm = at(0, 1), at(0, -1)
    d_u = [(p - m) / (2 * hu) for p, m in zip(up, um)]
    d_v = [(p - m) / (2 * hv) for p, m in zip(vp, vm)]
    dd_u = [(p - 2 * x + m) / hu**2 for p, x, m in zip(up, c, um)]
    dd_v = [(p - 2 * x + m) / hv**2 for p, x, m in zip(vp, c, vm)]
    E, F, G = c
    Eu, Fu, Gu = d_u
    Ev, Fv, Gv = d_v
    Guu = dd_u[2]
    Evv = dd_v[0]
    orthogonal = all(np.max(np.abs(x[1])) == 0 for x in (c, up, um, vp, vm))
    with np.errstate(divide="ignore", invalid="ignore"):
        if orthogonal:
            W = E * G
            Wu = Eu * G + E * Gu
            Wv = Ev * G + E * Gv
            return -(Guu + Evv - (Gu * Wu + Ev * Wv) / (2 * W)) / (2 * W)
        pp, mm = at(1, 1), at(-1, -1)
        pm, mp = at(1, -1), at(-1, 1)
        Fuv = (pp[1] - pm[1] - mp[1] + mm[1]) / (4 * hu * hv)
        m1 = np.array(
            [
                [-Evv / 2 + Fuv - Guu / 2, Eu / 2, Fu - Ev / 2],
                [Fv - Gu / 2, E, F],
                [Gv / 2, F, G],
            ]
        )
        z = np.zeros_like(E)
        m2 = np.array([[z, Ev / 2, Gu / 2], [Ev / 2, E, F], [Gu / 2, F, G]])
        det1 = np.linalg.det(np.moveaxis(m1, (0, 1), (-2, -1)))
        det2 = np.linalg.det(np.moveaxis(m2, (0, 1), (-2, -1)))
        return (det1 - det2) / (E * G - F * F) ** 2


def _in_cap(polar: float) -> bool:
    return polar < CAP_EXCLUSION or polar > np.pi - CAP_EXCLUSION


def gauss_curvature(
    metric: Callable,
    point: Mapping[str, float],
    h: float = 1e-4,
    chart: Sequence[str] = ("u", "v"),
    polar: str | None = None,
) -> CurvatureSample:
    """Curvature of a metric function at one chart point.

    ``polar`` names the chart coordinate whose ends are singular caps; points
    inside the exclusion zone are evaluated but flagged invalid.
    """
    u, v = float(point[chart[0]]), float(point[chart[1]])
    E, F, G = _as_tuple_metric(metric)(u, v)
    det = float(E * G - F * F)
    K = float(curvature_field(metric, u, v, h))
    valid = det >= DET_FLOOR and np.isfinite(K)
    if polar is not None and _in_cap(float(point[polar])):
        valid = False
    return CurvatureSample(dict(point), K, bool(valid))


# polar coordinate name for closed curvature forms that live on a sphere
_CURVATURE_POLAR = {"4.30": "eta", "4.64": "kappa"}


def curvature_closed(formula_id: str, params: Mapping, point: Mapping[str, float]) -> CurvatureSample:
    """Evaluate a printed curvature verbatim; the cap exclusion zone is flagged invalid."""
    f = formulas.get(formula_id, "curvature")
    K = float(f(**{**params, **point}))
    polar = _CURVATURE_POLAR.get(formula_id)
    valid = bool(np.isfinite(K))
    if polar is not None and polar in point and _in_cap(float(point[polar])):
        valid = False
    return CurvatureSample(dict(point), K, valid)


def curvature_rule(rule_id: str, metric: Callable, u, v, h: float = 1e-4):
    """Apply a printed curvature recipe to a metric function."""
    return formulas.get(rule_id, "curvature-rule")(metric=_as_tuple_metric(metric), u=u, v=v, h=h)


# Euler characteristic ---------------------------------------------------


def _midpoints(a: float, b: float, n: int) -> tuple[np.ndarray, float]:
    step = (b - a) / n
    return a + (np.arange(n) + 0.5) * step, step


def _cap_ratio(metric: Callable, edge: float, toward_pole: float, L: float, n: int) -> float:
    """circumference / radius of the excised cap between the pole and ``edge``."""
    us, du = _midpoints(min(edge, toward_pole), max(edge, toward_pole), 64)
    E = metric(us, np.zeros_like(us))[0]
    radius = float(np.sum(np.sqrt(np.maximum(E, 0))) * du)
    vs, dv = _midpoints(0.0, L, n)
    G = metric(np.full_like(vs, edge), vs)[2]
    circumference = float(np.sum(np.sqrt(np.maximum(G, 0))) * dv)
    return circumference / radius


def _defects(metric: Callable, L: float, n: int, eps: float) -> float:
    top = 2 * np.pi - _cap_ratio(metric, eps, 0.0, L, n)
    bottom = 2 * np.pi - _cap_ratio(metric, np.pi - eps, np.pi, L, n)
    return top + bottom


def _bulk(metric: Callable, L: float, n: int, eps: float, h: float) -> float:
    us, du = _midpoints(eps, np.pi - eps, n)
    vs, dv = _midpoints(0.0, L, n)
    U, V = np.meshgrid(us, vs, indexing="ij")
    E, F, G = metric(U, V)
    K = curvature_field(metric, U, V, h)
    return float(np.sum(K * np.sqrt(E * G - F * F)) * du * dv)


def euler_from_metric(
    metric: Callable, L: float, n: int = 256, eps: float = EULER_EPS, h: float = 1e-4, check: bool = True
) -> EulerResult:
    """Gauss-Bonnet with conical caps on polar [0, pi] x periodic [0, L].

    The bulk integral excludes caps of chart radius ``eps``; each cap adds
    the defect 2 pi - circumference/radius measured at its edge.
    """
    if n < EULER_MIN_GRID:
        raise DomainError(f"grid resolution {n} below the minimum {EULER_MIN_GRID}")
    metric = _as_tuple_metric(metric)
    defect = _defects(metric, L, n, eps)
    defect_half = _defects(metric, L, n, eps / 2)
    variation = abs(defect - defect_half)
    if check and variation > CONE_TOL:
        raise ConvergenceError(f"cone limit not converged: defect changes by {variation:.3e} between eps and eps/2")
    bulk = _bulk(metric, L, n, eps, h)
    chi = (bulk + defect) / (2 * np.pi)
    delta = 0.0
    if check:
        chi_fine = (_bulk(metric, L, 2 * n, eps, h) + defect) / (2 * np.pi)
        delta = abs(chi_fine - chi)
        if delta > RICHARDSON_TOL:
            raise ConvergenceError(f"doubling the grid changes chi by {delta:.3e}")
    return EulerResult(bulk, defect, float(chi), int(round(chi)), n, delta, variation)


def azimuthal_period(formula_id: str, params: Mapping) -> float:
    """Ray period of the periodic chart coordinate (2 pi, or pi for integer spin)."""
    if formula_id in ("4.61", "4.67"):
        s = float(params["s"])
        return np.pi if abs(s - round(s)) < 1e-12 else 2 * np.pi
    return 2 * np.pi


_EULER_FORMULAS = ("4.26", "4.27", "4.48", "4.61")


def euler_characteristic(formula_id: str, params: Mapping, n: int = 256, eps: float = EULER_EPS) -> EulerResult:
    """Euler characteristic of a printed polar-chart metric."""
    if formula_id not in _EULER_FORMULAS:
        raise DomainError(f"formula {formula_id} is not a closed polar-chart metric")
    return euler_from_metric(closed_metric_fn(formula_id, params), azimuthal_period(formula_id, params), n, eps)


def loop_connection_integral(
    family: EvolvedFamily, loop: Callable[[float], Mapping[str, float]], samples: int = 400, h: float = 1e-5
) -> float:
    """Line integral of the Berry connection around a closed chart loop ``loop(s)``, s in [0, 1)."""
    total = 0.0
    ds = 1.0 / samples
    for k in range(samples):
        s = (k + 0.5) * ds
        here = loop(s)
        ahead, behind = loop(s + 1e-6), loop(s - 1e-6)
        tangent = {name: (ahead[name] - behind[name]) / 2e-6 for name in here}
        _, beta = qgt_tensor(family, here, [tangent], h)
        total += beta[0] * ds
    return float(total)
