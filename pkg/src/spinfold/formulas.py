"""Registry of printed closed forms, evaluated verbatim.

Every entry is a plain function of keyword parameters.  Nothing here is
trusted: each entry is cross-checked against a first-principles oracle by
:mod:`spinfold.calibration`, and entries known to disagree are kept so the
disagreement stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class Formula:
    id: str
    kind: str
    fn: Callable = None
    summary: str = ""
    chart: tuple[str, ...] = ()

    def __call__(self, **params):
        return self.fn(**params)


REGISTRY: dict[str, Formula] = {}


def register(fid: str, kind: str, summary: str, chart: tuple[str, ...] = ()):
    def deco(fn):
        if fid in REGISTRY:
            raise ValueError(f"duplicate formula id {fid}")
        REGISTRY[fid] = Formula(fid, kind, fn, summary, chart)
        return fn

    return deco


def get(fid: str, kind: str | None = None) -> Formula:
    try:
        f = REGISTRY[fid]
    except KeyError:
        raise DomainError(f"unknown formula id {fid!r}") from None
    if kind is not None and f.kind != kind:
        raise DomainError(f"formula {fid!r} is a {f.kind} formula, not {kind}")
    return f


def evaluate(fid: str, **params):
    return get(fid)(**params)


def ids(kind: str | None = None) -> list[str]:
    return [k for k, f in REGISTRY.items() if kind is None or f.kind == kind]


class TaggedValue(float):
    """A float that remembers which printed formula produced it.

    ``verdict`` runs that formula's oracle comparison on first access.
    """

    formula_id: str

    def __new__(cls, value, formula_id: str):
        obj = super().__new__(cls, float(value))
        obj.formula_id = formula_id
        return obj

    @property
    def verdict(self) -> str:
        from .calibration import verdict_for

        return verdict_for(self.formula_id).verdict


def evaluate_tagged(fid: str, kind: str, **params) -> TaggedValue:
    return TaggedValue(get(fid, kind)(**params), fid)


# helpers ----------------------------------------------------------------


def xxz_weights(coeffs) -> dict:
    """Population summaries A, D, F, B of a two-qubit coefficient vector."""
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    return {
        "A": abs(c11) ** 2 + abs(c00) ** 2,
        "D": abs(c11) ** 2 - abs(c00) ** 2,
        "F": 2 * np.real(c10 * np.conj(c01)),
        "B": abs(c10 - c01) ** 2,
    }


def plus_minus_coeffs(chi: float, gamma: float = 0.0) -> np.ndarray:
    """Coefficients of the product of two antipodal Bloch states."""
    c, s = np.cos(chi / 2), np.sin(chi / 2)
    plus = np.array([c, s * np.exp(1j * gamma)])
    minus = np.array([-s, c * np.exp(1j * gamma)])
    return np.kron(plus, minus)


def short_time_slope(chi: float, nu: float) -> float:
    """dC/d(eta) at eta = 0 for the antipodal product state."""
    return 2 + (nu - 1) * np.sin(chi) ** 2


def _abs_sin(kappa):
    return np.abs(np.sin(kappa))


# chapter 2: conventions -------------------------------------------------


@register("2.11", "affine-metric", "FS metric in affine coordinates from the Bergman kernel")
def fs_affine(z):
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    K = 1 + np.vdot(z, z).real
    return np.eye(len(z)) / K - np.outer(np.conj(z), z) / K**2


@register("2.21", "line-element", "ds^2 = 2(1 - |<psi|psi + dpsi>|^2)")
def ds2_overlap_squared(overlap):
    return 2 * (1 - abs(overlap) ** 2)


@register("2.22", "line-element", "2(1 - |<psi(t)|psi(t+dt)>|^2) = dE^2 dt^2")
def ds2_time_overlap(overlap):
    return 2 * (1 - abs(overlap) ** 2)


@register("2.74", "line-element", "dS^2 = 2 - 2|<psi|psi + dpsi>|")
def ds2_overlap_modulus(overlap):
    return 2 - 2 * abs(overlap)


@register("2.76", "line-element", "dS^2 = 2 - 2|<psi(t)|psi(t+dt)>| along time")
def ds2_time_modulus(overlap):
    return 2 - 2 * abs(overlap)


@register("2.69", "distance", "S = (2 - 2|<psi1|psi2>|)^(1/2)")
def fs_chord(overlap):
    return np.sqrt(2 - 2 * abs(overlap))


@register("2.23", "speed", "v = 2 dE")
def speed_twice(delta_E):
    return 2 * delta_E


@register("3.29", "speed", "v = 2 dE for the XXZ pair")
def speed_twice_xxz(delta_E):
    return 2 * delta_E


@register("3.61", "speed", "v = 2 dE for N qubits")
def speed_twice_qubits(delta_E):
    return 2 * delta_E


@register("2.85", "speed", "ds/dt = dE")
def speed_unit(delta_E):
    return delta_E


# curvature rules act on metric functions metric(u, v) -> (E, F, G)


def _d(f, u, v, h, axis):
    if axis == 0:
        return (f(u + h, v) - f(u - h, v)) / (2 * h)
    return (f(u, v + h) - f(u, v - h)) / (2 * h)


@register("2.102", "curvature-rule", "Liouville-type formula as printed")
def curvature_rule_printed(metric, u, v, h=1e-4):
    def comps(u, v):
        E, F, G = metric(u, v)
        return np.asarray(E, float), np.asarray(F, float), np.asarray(G, float)

    def P(u, v):
        W = np.sqrt(_det(*comps(u, v)))
        Gu = _d(lambda a, b: comps(a, b)[2], u, v, h, 0)
        Fv = _d(lambda a, b: comps(a, b)[1], u, v, h, 1)
        return (Gu - Fv) / W

    def Q(u, v):
        W = np.sqrt(_det(*comps(u, v)))
        Fu = _d(lambda a, b: comps(a, b)[1], u, v, h, 0)
        Ev = _d(lambda a, b: comps(a, b)[0], u, v, h, 1)
        return (Fu - Ev) / W

    W = np.sqrt(_det(*comps(u, v)))
    return -(_d(P, u, v, h, 0) + _d(Q, u, v, h, 1)) / (2 * W)


def _det(E, F, G):
    return E * G - F * F


@register("2.103", "curvature-rule", "Christoffel form for orthogonal metrics")
def curvature_rule_christoffel(metric, u, v, h=1e-4):
    # Gamma^2_11 = -E_v / (2G), Gamma^2_12 = G_u / (2G)
    def part(u, v, which):
        E, F, G = metric(u, v)
        W = np.sqrt(E * G)
        if which == 0:
            Ev = _d(lambda a, b: metric(a, b)[0], u, v, h, 1)
            return W / E * (-Ev / (2 * G))
        Gu = _d(lambda a, b: metric(a, b)[2], u, v, h, 0)
        return W / E * (Gu / (2 * G))

    E, F, G = metric(u, v)
    W = np.sqrt(E * G)
    return (_d(lambda a, b: part(a, b, 0), u, v, h, 1) - _d(lambda a, b: part(a, b, 1), u, v, h, 0)) / W


@register("4.28", "curvature-rule", "orthogonal-metric curvature in the qubit chart")
def curvature_rule_qubit(metric, u, v, h=1e-4):
    # u = eta with g_uu = g_etaeta, v = kappa with g_vv = g_kk
    def part(u, v, which):
        E, F, G = metric(u, v)
        if which == 0:
            Ev = _d(lambda a, b: metric(a, b)[0], u, v, h, 1)
            return np.sqrt(G / E) * (-Ev / (2 * G))
        Gu = _d(lambda a, b: metric(a, b)[2], u, v, h, 0)
        return np.sqrt(G / E) * (Gu / (2 * G))

    E, F, G = metric(u, v)
    return (_d(lambda a, b: part(a, b, 0), u, v, h, 1) - _d(lambda a, b: part(a, b, 1), u, v, h, 0)) / np.sqrt(E * G)


@register("4.62", "curvature-rule", "orthogonal-metric curvature in the spin-s chart")
def curvature_rule_spin(metric, u, v, h=1e-4):
    # u = kappa, v = eta; same structure with the roles written out
    def part(u, v, which):
        E, F, G = metric(u, v)
        if which == 0:
            Gu = _d(lambda a, b: metric(a, b)[2], u, v, h, 0)
            return np.sqrt(G / E) * (-_d(lambda a, b: metric(a, b)[0], u, v, h, 1) / (2 * G))
        Gu = _d(lambda a, b: metric(a, b)[2], u, v, h, 0)
        return np.sqrt(G / E) * (Gu / (2 * G))

    E, F, G = metric(u, v)
    return (_d(lambda a, b: part(a, b, 0), u, v, h, 1) - _d(lambda a, b: part(a, b, 1), u, v, h, 0)) / np.sqrt(E * G)


# two-spin XXZ -----------------------------------------------------------


@register("3.10", "eigenvectors", "triplet/singlet eigenbasis of the XXZ pair")
def xxz_eigenvectors():
    r = 1 / np.sqrt(2)
    return np.array([[1, 0, 0, 0], [0, r, r, 0], [0, r, -r, 0], [0, 0, 0, 1]], dtype=complex)


@register("3.11-E1", "energy", "E1 = 2J + 2b")
def energy_e1(J, nu, b):
    return 2 * J + 2 * b


@register("3.11-E2", "energy", "E2 = 2J - nu J")
def energy_e2(J, nu, b):
    return 2 * J - nu * J


@register("3.11-E3", "energy", "E3 = -2J - nu J")
def energy_e3(J, nu, b):
    return -2 * J - nu * J


@register("3.11-E4", "energy", "E4 = 2J - 2b")
def energy_e4(J, nu, b):
    return 2 * J - 2 * b


@register("3.13", "state", "evolved XXZ state on the (eta, kappa) chart")
def state_xxz(coeffs, eta, kappa, nu):
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    return np.exp(0.5j * nu * eta) * np.array(
        [
            c11 * np.exp(-1j * (kappa + nu * eta)),
            c10 * np.cos(eta) - 1j * c01 * np.sin(eta),
            -1j * c10 * np.sin(eta) + c01 * np.cos(eta),
            c00 * np.exp(1j * (kappa - nu * eta)),
        ]
    )


@register("3.19", "state", "XXZ state with c11 = c00 = 0")
def state_case3(coeffs, eta, kappa, nu):
    _, c10, c01, _ = np.asarray(coeffs, dtype=complex)
    return np.exp(0.5j * nu * eta) * np.array(
        [0, c10 * np.cos(eta) - 1j * c01 * np.sin(eta), -1j * c10 * np.sin(eta) + c01 * np.cos(eta), 0]
    )


@register("3.21", "state", "XXZ state with c10 = c01 = 0")
def state_case4(coeffs, eta, kappa, nu):
    c11, _, _, c00 = np.asarray(coeffs, dtype=complex)
    return np.exp(-0.5j * nu * eta) * np.array([c11 * np.exp(-1j * kappa), 0, 0, c00 * np.exp(1j * kappa)])


@register("3.23", "state", "XXZ state for nu = +-1 with c01 = +-c10")
def state_case5(coeffs, eta, kappa, nu):
    c11, c10, _, c00 = np.asarray(coeffs, dtype=complex)
    sgn = 1.0 if nu > 0 else -1.0
    return np.exp(-sgn * 0.5j * eta) * np.array(
        [c11 * np.exp(-1j * kappa), c10, c10, sgn * c00 * np.exp(1j * kappa)]
    )


@register("3.25", "state", "XXZ state for general nu with c01 = +-c10")
def state_case6(coeffs, eta, kappa, nu, sign=1.0):
    c11, c10, _, c00 = np.asarray(coeffs, dtype=complex)
    return np.exp(0.5j * nu * eta) * np.array(
        [
            c11 * np.exp(-1j * (kappa + nu * eta)),
            c10 * np.exp(-sign * 1j * eta),
            sign * c10 * np.exp(-sign * 1j * eta),
            c00 * np.exp(1j * (kappa - nu * eta)),
        ]
    )


@register("3.30", "state", "XXZ state along time with kappa = k eta")
def state_time_path(coeffs, eta, nu, k):
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    return np.exp(0.5j * nu * eta) * np.array(
        [
            c11 * np.exp(-1j * (k + nu) * eta),
            c10 * np.cos(eta) - 1j * c01 * np.sin(eta),
            -1j * c10 * np.sin(eta) + c01 * np.cos(eta),
            c00 * np.exp(1j * (k - nu) * eta),
        ]
    )


@register("3.41", "state", "evolved antipodal product state")
def state_plus_minus(chi, gamma, eta, kappa, nu):
    c2, s2 = np.cos(chi / 2) ** 2, np.sin(chi / 2) ** 2
    return np.exp(0.5j * nu * eta) * np.array(
        [
            -0.5 * np.sin(chi) * np.exp(-1j * (kappa + nu * eta)),
            np.exp(1j * gamma) * (c2 * np.cos(eta) + 1j * s2 * np.sin(eta)),
            np.exp(1j * gamma) * (-s2 * np.cos(eta) - 1j * c2 * np.sin(eta)),
            0.5 * np.sin(chi) * np.exp(1j * (kappa - nu * eta + 2 * gamma)),
        ]
    )


@register("3.47", "state", "antipodal state claimed stationary for nu = -1, chi = pi/2")
def state_stationary(eta, varphi, gamma):
    return 0.5 * np.exp(-0.5j * eta) * np.array(
        [
            -np.exp(-1j * (varphi - eta)),
            np.exp(1j * (eta + gamma)),
            -np.exp(1j * (eta + gamma)),
            np.exp(1j * (varphi + eta + 2 * gamma)),
        ]
    )


@register("3.14", "periodicity", "p, q odd: kappa -> kappa + 2pi is exact")
def period_3_14(p, q):
    return {"shift": {"kappa": 2 * np.pi}, "phase": 0.0}


@register("3.15", "periodicity", "p, q odd: eta -> eta + q pi gives exp(-i p pi/2)")
def period_3_15(p, q):
    return {"shift": {"eta": q * np.pi}, "phase": -p * np.pi / 2}


@register("3.16", "periodicity", "p or q even: kappa -> kappa + 2pi is exact")
def period_3_16(p, q):
    return {"shift": {"kappa": 2 * np.pi}, "phase": 0.0}


@register("3.17", "periodicity", "p or q even: (eta + q pi, kappa + pi) gives exp(-i(p/2 + 1)pi)")
def period_3_17(p, q):
    return {"shift": {"eta": q * np.pi, "kappa": np.pi}, "phase": -(p / 2 + 1) * np.pi}


@register("3.18", "periodicity", "irrational nu: kappa -> kappa + 2pi is exact")
def period_3_18(nu):
    return {"shift": {"kappa": 2 * np.pi}, "phase": 0.0}


@register("3.20", "periodicity", "c11 = c00 = 0: eta -> eta + pi gives -exp(i nu pi/2)")
def period_3_20(nu):
    return {"shift": {"eta": np.pi}, "phase": np.pi + nu * np.pi / 2}


@register("3.22", "periodicity", "c10 = c01 = 0: kappa -> kappa + pi gives -1")
def period_3_22(nu):
    return {"shift": {"kappa": np.pi}, "phase": np.pi}


@register("3.24", "periodicity", "nu = +-1 coupled case: kappa -> kappa + 2pi is exact")
def period_3_24(nu):
    return {"shift": {"kappa": 2 * np.pi}, "phase": 0.0}


@register("3.26", "periodicity", "general nu coupled case: kappa -> kappa + 2pi is exact")
def period_3_26(nu, sign=1.0):
    return {"shift": {"kappa": 2 * np.pi}, "phase": 0.0}


@register("3.27", "periodicity", "general nu coupled case: (eta + pi/(nu -+ 1), kappa + pi)")
def period_3_27(nu, sign=1.0):
    d = nu - sign
    return {"shift": {"eta": np.pi / d, "kappa": np.pi}, "phase": -np.pi / (2 * d)}


@register("3.28", "metric", "XXZ metric on (eta, kappa)", ("eta", "kappa"))
def metric_xxz_ch3(coeffs, nu, **_):
    return metric_xxz(coeffs=coeffs, nu=nu)


@register("4.7", "metric", "XXZ metric on (eta, kappa) from the Bergman kernel", ("eta", "kappa"))
def metric_xxz(coeffs, nu, **_):
    w = xxz_weights(coeffs)
    A, D, F = w["A"], w["D"], w["F"]
    g_ee = (nu**2 - 1) * A + 1 - (nu * A + F) ** 2
    g_ek = D * (nu - (nu * A - F))
    g_kk = A - D**2
    return g_ee, g_ek, g_kk


@register("4.9", "metric", "XXZ metric with c11 = c00 = 0", ("eta",))
def metric_case3(coeffs, **_):
    B = xxz_weights(coeffs)["B"]
    return B * (2 - B), 0.0, 0.0


@register("3.31-printed", "speed", "XXZ speed with field and mixed term, as printed")
def speed_xxz_printed(J, nu, b, coeffs):
    w = xxz_weights(coeffs)
    A, D, F = w["A"], w["D"], w["F"]
    k = b / J
    inner = b**2 * (A - D**2) - J**2 * ((nu * A + F) * (1 + nu * A + F) + (nu**2 - 1) * A + 1) + 2 * J * b * k * nu
    return 2 * np.sqrt(inner + 0j).real if inner >= 0 else float("nan")


@register("3.33", "speed", "XXZ speed with nu = sin(2 eta)/4 profile")
def speed_sinusoidal(J, eta, coeffs, k):
    w = xxz_weights(coeffs)
    A, D, F = w["A"], w["D"], w["F"]
    s2 = np.sin(2 * eta)
    inner = 1 - (A * s2 + F) * (1 + A * s2 + F) + (s2**2 - 1) * A + 2 * A * k * s2 + J**2 * (A - D**2)
    return 2 * J * np.sqrt(np.maximum(inner, 0.0))


@register("3.34", "speed", "v = J sqrt(3 - 2 sin 2eta)")
def speed_sinusoidal_special(J, eta):
    return J * np.sqrt(3 - 2 * np.sin(2 * eta))


@register("3.35", "distance", "s = (eta/2) sqrt(3 - 2 sin 2eta)")
def distance_sinusoidal(eta):
    return eta / 2 * np.sqrt(3 - 2 * np.sin(2 * eta))


@register("3.36", "time", "T = 3 pi / (8J)")
def time_sinusoidal(J):
    return 3 * np.pi / (8 * J)


@register("3.37", "concurrence", "concurrence of the evolved XXZ state")
def concurrence_xxz(coeffs, eta, nu):
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    val = (
        2 * c11 * c00 * np.exp(-2j * eta * (nu + 1))
        + 1j * np.exp(-2j * eta) * (c10 + c01) ** 2 * np.sin(2 * eta)
        - 2 * c10 * c01
    )
    return abs(val)


@register("3.42", "concurrence", "concurrence of the evolved antipodal state")
def concurrence_plus_minus(chi, nu, eta):
    cp = np.cos(2 * nu * eta) - np.cos(2 * eta)
    s2 = np.sin(chi) ** 2
    return 0.5 * np.sqrt(cp**2 * s2**2 + (2 * np.sin(2 * eta) + cp * s2) ** 2)


@register("3.43", "concurrence", "C = |sin 2eta| for chi = 0")
def concurrence_polar(eta):
    return np.abs(np.sin(2 * eta))


@register("3.44", "concurrence", "C = |sin (nu + 1) eta| for chi = pi/2")
def concurrence_equatorial(nu, eta):
    return np.abs(np.sin((nu + 1) * eta))


@register("3.45", "time", "time to maximal entanglement pi / (4J(nu + 1))")
def time_max_entanglement(J, nu):
    return np.pi / (4 * J * (nu + 1))


@register("3.46", "concurrence", "short-time C = eta [2 + (nu - 1) sin^2 chi]")
def concurrence_short(chi, nu, eta):
    return eta * short_time_slope(chi, nu)


@register("3.48", "metric", "time-path metric in the concurrence chart", ("C",))
def metric_concurrence_path(chi, nu, k, **_):
    s2 = np.sin(chi) ** 2
    num = 2 * (nu**2 + k**2 - 1) * s2 - (nu - 1) ** 2 * s2**2 + 4
    return 0.25 * num / short_time_slope(chi, nu) ** 2, 0.0, 0.0


@register("3.49", "distance", "s = g_CC (C_f - C_i)")
def distance_concurrence_linear(chi, nu, k, C_i, C_f):
    return metric_concurrence_path(chi=chi, nu=nu, k=k)[0] * (C_f - C_i)


@register("3.50", "speed", "speed in the concurrence chart")
def speed_concurrence(chi, nu, k):
    return np.sqrt(metric_concurrence_path(chi=chi, nu=nu, k=k)[0])


@register("3.51", "metric", "concurrence metric with nu = (sqrt(1 + 2C) - 1)/2", ("C",))
def metric_concurrence_drift(C, **_):
    return 0.25 * (1 + 8 / (1 + np.sqrt(1 + 2 * C)) ** 2), 0.0, 0.0


@register("3.52", "speed", "v_C = (1/2) sqrt(1 + 8/(1 + sqrt(1 + 2C))^2)")
def speed_concurrence_drift(C):
    return 0.5 * np.sqrt(1 + 8 / (1 + np.sqrt(1 + 2 * C)) ** 2)


@register("3.53", "distance", "closed-form distance in the concurrence chart")
def distance_concurrence_drift(C):
    e1 = np.sqrt(1 + 2 * C)
    e2 = np.sqrt(C + e1 + 5)
    bracket = e2 * (e1 - 1) + 4 * np.sqrt(2) * np.arcsinh((e1 + 1) / (2 * np.sqrt(2))) + 4 * np.log(
        2 * (e2 + 2) / (e1 + 1)
    )
    return (e1 + 1) / (2 * e2) * bracket * speed_concurrence_drift(C)


@register("tau-tilde", "time", "optimal time s_C / v_C in the concurrence chart")
def time_concurrence_drift(C=0.0):
    return distance_concurrence_drift(C) / speed_concurrence_drift(C)


# N qubits, collective Ising --------------------------------------------


@register("3.58", "state", "N-qubit evolved state in the tensor basis")
def state_qubits(N, eta, phi, kappa):
    local = np.array([np.cos(eta / 2), np.sin(eta / 2) * np.exp(1j * phi)])
    vec = np.ones(1, dtype=complex)
    for _ in range(N):
        vec = np.kron(vec, local)
    down = np.array([bin(i).count("1") for i in range(2**N)])
    return vec * np.exp(-1j * kappa * (N - 2 * down) ** 2 / 4)


@register("3.58-dicke-binomial", "state", "Dicke-sector amplitudes with a bare binomial")
def state_qubits_dicke(N, eta, phi, kappa):
    p = np.arange(N + 1)
    binom = np.array([comb(N, int(k)) for k in p], dtype=float)
    return (
        binom
        * np.cos(eta / 2) ** (N - p)
        * np.sin(eta / 2) ** p
        * np.exp(1j * p * phi)
        * np.exp(-1j * kappa * (N - 2 * p) ** 2 / 4)
    )


@register("3.60", "metric", "time metric of N qubits with the (2N - 3) coefficient", ("kappa",))
def metric_qubits_time_printed(N, eta, **_):
    s2 = np.sin(eta) ** 2
    return 0.25 * N * (N - 1) * s2 * (N - 1 - (2 * N - 3) * s2), 0.0, 0.0


@register("3.69", "metric", "optimal-state metric, same coefficient as the time metric", ("kappa",))
def metric_qubits_optimal(N, eta, **_):
    return metric_qubits_time_printed(N=N, eta=eta)


@register("3.62", "speed", "N-qubit speed as printed")
def speed_qubits(N, J, eta):
    s2 = np.sin(eta) ** 2
    inner = 2 / (N * (N - 1)) * s2 * (N - 1 - (2 * N - 3) * s2)
    return J * np.sqrt(np.maximum(inner, 0.0))


@register("3.63", "argmax", "sin eta_max = sqrt((N - 1)/(2N - 3))")
def argmax_qubits(N):
    return np.sqrt((N - 1) / (2 * N - 3))


@register("3.64", "speed", "v_max = J (N - 1)/sqrt(N(N - 1)(2N - 3))")
def vmax_qubits(N, J):
    return J * (N - 1) / np.sqrt(N * (N - 1) * (2 * N - 3))


@register("3.65", "distance", "N-qubit distance kappa * speed/J")
def distance_qubits(N, eta, kappa):
    s2 = np.sin(eta) ** 2
    return kappa * np.sqrt(np.maximum(2 / (N * (N - 1)) * s2 * (N - 1 - (2 * N - 3) * s2), 0.0))


@register("3.66", "distance", "s_min = kappa sqrt(N/(2(N - 1)))")
def distance_qubits_min(N, kappa):
    return kappa * np.sqrt(N / (2 * (N - 1)))


@register("3.67", "time", "T = (N - 1)/(J sqrt(2N - 3))")
def time_qubits(N, J):
    return (N - 1) / (J * np.sqrt(2 * N - 3))


@register("3.70", "state", "two-qubit evolved state in the tensor basis")
def state_qubit_pair(eta, varphi, kappa):
    return np.array(
        [
            np.exp(-1j * kappa) * np.cos(eta / 2) ** 2,
            0.5 * np.exp(1j * varphi) * np.sin(eta),
            0.5 * np.exp(1j * varphi) * np.sin(eta),
            np.exp(1j * (2 * varphi - kappa)) * np.sin(eta / 2) ** 2,
        ]
    )


@register("3.71", "concurrence", "C = sin^2 eta |sin kappa|")
def concurrence_qubit_pair(eta, kappa):
    return np.sin(eta) ** 2 * _abs_sin(kappa)


@register("3.72-printed", "speed", "speed vs concurrence, parenthesization as printed")
def speed_qubit_pair_printed(J, kappa, C):
    sk = _abs_sin(kappa)
    return J / 2 * sk * (C * np.sqrt(np.maximum(2 * sk - C, 0.0)))


@register("3.72-derived", "speed", "speed vs concurrence by substitution into the pair speed")
def speed_qubit_pair(J, kappa, C):
    sk = _abs_sin(kappa)
    return J / (2 * sk) * np.sqrt(np.maximum(C * (2 * sk - C), 0.0))


@register("3.73", "distance", "s = kappa/(2|sin kappa|) sqrt(C(2|sin kappa| - C))")
def distance_qubit_pair(kappa, C):
    sk = _abs_sin(kappa)
    return kappa / (2 * sk) * np.sqrt(np.maximum(C * (2 * sk - C), 0.0))


@register("3.74", "time", "T = kappa/(J|sin kappa|) sqrt(C(2|sin kappa| - C))")
def time_qubit_pair(J, kappa, C):
    sk = _abs_sin(kappa)
    return kappa / (J * sk) * np.sqrt(np.maximum(C * (2 * sk - C), 0.0))


@register("3.76", "metric", "optimal-state metric vs concurrence", ("kappa",))
def metric_qubit_pair_optimal(C, kappa, **_):
    sk = _abs_sin(kappa)
    return C / (4 * sk**2) * (2 * sk - C), 0.0, 0.0


# N spin-s, pairwise Ising ----------------------------------------------


def _spin_s_tensor(N, s, weights_fn, eta):
    two_s = int(round(2 * s))
    m = s - np.arange(two_s + 1)
    vec = np.ones(1, dtype=complex)
    msum = np.zeros(1)
    msq = np.zeros(1)
    for _ in range(N):
        vec = np.kron(vec, weights_fn(m))
        msum = np.add.outer(msum, m).reshape(-1)
        msq = np.add.outer(msq, m**2).reshape(-1)
    pair = 0.5 * (msum**2 - msq)
    return vec * np.exp(-2j * eta * pair)


@register("3.81", "state", "single-site coherent amplitudes Z^(s+m) C(2s, s+m)")
def state_coherent_printed(s, kappa, varphi):
    Z = np.tan(kappa / 2) * np.exp(-1j * varphi)
    two_s = int(round(2 * s))
    m = s - np.arange(two_s + 1)
    binom = np.array([comb(two_s, int(round(s + x))) for x in m], dtype=float)
    return (1 + abs(Z) ** 2) ** (-s) * Z ** (s + m) * binom


@register("3.83", "state", "N spin-s evolved state with Z^(s+m) C(2s, s+m) amplitudes")
def state_spin_s_printed(N, s, kappa, varphi, eta):
    Z = np.tan(kappa / 2) * np.exp(-1j * varphi)
    two_s = int(round(2 * s))

    def w(m):
        binom = np.array([comb(two_s, int(round(s + x))) for x in m], dtype=float)
        return Z ** (s + m) * binom

    return (1 + abs(Z) ** 2) ** (-N * s) * _spin_s_tensor(N, s, w, eta)


@register("3.96", "state", "two spin-s evolved state with sqrt binomials")
def state_spin_s_pair(s, kappa, varphi, eta):
    Z = np.tan(kappa / 2) * np.exp(-1j * varphi)
    two_s = int(round(2 * s))

    def w(m):
        binom = np.array([comb(two_s, int(round(s + x))) for x in m], dtype=float)
        return Z ** (s + m) * np.sqrt(binom)

    return (1 + abs(Z) ** 2) ** (-2 * s) * _spin_s_tensor(2, s, w, eta)


@register("3.84", "metric", "spin-s time metric", ("eta",))
def metric_spin_s_time(N, s, kappa, **_):
    c2 = np.cos(kappa) ** 2
    return 0.5 * N * (N - 1) * s**2 * np.sin(kappa) ** 2 * (1 + (4 * s * (N - 1) - 1) * c2), 0.0, 0.0


@register("3.85", "speed", "spin-s speed")
def speed_spin_s(N, s, J, kappa):
    c2 = np.cos(kappa) ** 2
    return J * s * np.sqrt(N * (N - 1) * np.sin(kappa) ** 2 * (1 + (4 * s * (N - 1) - 1) * c2) / 2)


@register("3.87", "argmax", "stationarity condition of the spin-s speed")
def stationarity_spin_s(N, s, kappa):
    return np.sin(2 * kappa) * (2 * s * (N - 1) - (4 * s * (N - 1) - 1) * np.sin(kappa) ** 2)


@register("3.88", "argmax", "sin kappa_max = sqrt(2s(N - 1)/(4s(N - 1) - 1))")
def argmax_spin_s(N, s):
    return np.sqrt(2 * s * (N - 1) / (4 * s * (N - 1) - 1))


@register("3.89", "speed", "v_max = J s^2 (N - 1) sqrt(2N(N - 1)/(4s(N - 1) - 1))")
def vmax_spin_s(N, s, J):
    return J * s**2 * (N - 1) * np.sqrt(2 * N * (N - 1) / (4 * s * (N - 1) - 1))


@register("3.90", "distance", "spin-s distance")
def distance_spin_s(N, s, eta, kappa):
    c2 = np.cos(kappa) ** 2
    return s * np.sqrt(eta**2 * N * (N - 1) * np.sin(kappa) ** 2 * (1 + (4 * s * (N - 1) - 1) * c2) / 2)


@register("3.91", "distance", "s_min = s sqrt(eta^2 N(N - 1)/2)")
def distance_spin_s_min(N, s, eta):
    return s * np.sqrt(eta**2 * N * (N - 1) / 2)


@register("3.92", "time", "T = sqrt(eta^2 [4s(N - 1) - 1])/(2Js(N - 1))")
def time_spin_s(N, s, J, eta):
    return np.sqrt(eta**2 * (4 * s * (N - 1) - 1)) / (2 * J * s * (N - 1))


@register("3.94", "time", "T = t sqrt(4s(N - 1) - 1)/(2s(N - 1))")
def time_spin_s_t(N, s, t):
    return t / (2 * s * (N - 1)) * np.sqrt(4 * s * (N - 1) - 1)


@register("3.95", "time", "T = t for N = 2, s = 1/2")
def time_spin_half_pair(t):
    return t


@register("3.103", "concurrence", "short-time I-concurrence C = 2 eta s sin^2 kappa")
def i_concurrence_short(s, eta, kappa):
    return 2 * eta * s * np.sin(kappa) ** 2


@register("3.104", "concurrence", "C_max = 2 s eta_max")
def i_concurrence_max(s, eta_max):
    return 2 * s * eta_max


@register("3.105", "speed", "spin-s speed vs I-concurrence ratio x = C/C_max")
def speed_i_concurrence(s, J, x, eta_tilde=1.0):
    y = eta_tilde * x
    return J * s * np.sqrt(np.maximum(y * (4 * s - (4 * s - 1) * y), 0.0))


@register("3.106", "distance", "spin-s distance vs I-concurrence ratio")
def distance_i_concurrence(s, x, eta, eta_pmax):
    y = eta * x
    return s * np.sqrt(np.maximum(eta_pmax * y * (4 * s - (4 * s - 1) * y), 0.0))


def _vmax_i_concurrence(s, J):
    return 2 * J * s**2 / np.sqrt(4 * s - 1)


@register("3.107-printed", "time", "optimal time vs I-concurrence, distance times v_max as printed")
def time_i_concurrence_printed(s, J, x, eta, eta_pmax):
    y = eta * x
    dist = distance_i_concurrence(s=s, x=x, eta=eta, eta_pmax=eta_pmax)
    root = np.sqrt(np.maximum(eta_pmax * y * (4 * s - 1) * (4 * s - (4 * s - 1) * y), 0.0))
    return dist * _vmax_i_concurrence(s, J) / (2 * J * s) * root


@register("3.107-derived", "time", "optimal time vs I-concurrence as distance over v_max")
def time_i_concurrence(s, J, x, eta, eta_pmax):
    y = eta * x
    return np.sqrt(np.maximum(eta_pmax * y * (4 * s - 1) * (4 * s - (4 * s - 1) * y), 0.0)) / (2 * J * s)


# chapter 4: metrics and curvature --------------------------------------


@register("4.3", "affine", "affine coordinates of the XXZ state as printed")
def affine_xxz_printed(coeffs, eta, kappa, nu):
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    ph = np.exp(-1j * (kappa + nu * eta)) / c11
    return np.array(
        [
            ph * (c10 * np.cos(eta) - 1j * c01 * np.sin(eta)),
            ph * (-1j * c10 * np.sin(eta) + c01 * np.cos(eta)),
            c00 / c11 * np.exp(2j * kappa),
        ]
    )


@register("4.22", "metric", "antipodal-state metric on (eta, kappa)", ("eta", "kappa"))
def metric_plus_minus(chi, nu, **_):
    s2 = np.sin(chi) ** 2
    return 0.25 * (2 * (nu**2 - 1) * s2 - (nu - 1) ** 2 * s2**2 + 4), 0.0, 0.5 * s2


@register("4.23", "metric", "antipodal-state metric on (C, kappa)", ("C", "kappa"))
def metric_plus_minus_concurrence(chi, nu, **_):
    s2 = np.sin(chi) ** 2
    g_cc = ((nu - 1) * (nu + 3) * s2 + 2) / (2 * short_time_slope(chi, nu) ** 2) - 1
    return g_cc, 0.0, 0.5 * s2


@register("4.26", "metric", "initial-state sphere of N qubits", ("eta", "phi"))
def metric_initial_sphere(N, eta, **_):
    return N / 4, 0.0, N / 4 * np.sin(eta) ** 2


@register("4.27", "metric", "N-qubit metric on (eta, kappa)", ("eta", "kappa"))
def metric_qubits(N, eta, **_):
    s2 = np.sin(eta) ** 2
    return N / 4, 0.0, 0.25 * N * (N - 1) * s2 * (N - 1 - (N - 1.5) * s2)


@register("4.34", "metric", "N-qubit metric near eta = 0", ("eta", "kappa"))
def metric_qubits_cap(N, eta, **_):
    return N / 4, 0.0, 0.25 * N * (N - 1) ** 2 * eta**2


@register("4.48", "metric", "two-qubit metric on (eta, kappa)", ("eta", "kappa"))
def metric_qubit_pair(eta, **_):
    s2 = np.sin(eta) ** 2
    return 0.5, 0.0, 0.25 * s2 * (2 - s2)


@register("4.49", "metric", "two-qubit metric on (C, kappa)", ("C", "kappa"))
def metric_qubit_pair_concurrence(C, kappa, **_):
    sk = _abs_sin(kappa)
    g_kk = C / 4 * (1 / (2 * np.tan(kappa) ** 2 * (sk - C)) + (2 * sk - C) / sk**2)
    g_ck = -1 / (8 * np.tan(kappa) * (sk - C))
    g_cc = 1 / (8 * C * (sk - C))
    return g_cc, g_ck, g_kk


@register("4.50", "metric", "two-qubit metric on (C_r, kappa)", ("Cr", "kappa"))
def metric_qubit_pair_reduced(Cr, **_):
    return 1 / (8 * Cr * (1 - Cr)), 0.0, 0.25 * Cr * (2 - Cr)


@register("4.51", "metric", "kappa part of the (C, kappa) metric", ("kappa",))
def metric_qubit_pair_concurrence_kk(C, kappa, **_):
    return metric_qubit_pair_concurrence(C=C, kappa=kappa)[2], 0.0, 0.0


@register("4.52", "metric", "kappa part of the (C_r, kappa) metric", ("kappa",))
def metric_qubit_pair_reduced_kk(Cr, **_):
    return 0.25 * Cr * (2 - Cr), 0.0, 0.0


@register("4.53", "distance", "circle radius R = sqrt(C_r(2 - C_r))/2")
def radius_qubit_pair(Cr):
    return np.sqrt(Cr * (2 - Cr)) / 2


@register("4.61", "metric", "N spin-s metric on (kappa, eta)", ("kappa", "eta"))
def metric_spin_s(N, s, kappa, **_):
    return N * s / 2, 0.0, metric_spin_s_time(N=N, s=s, kappa=kappa)[0]


@register("4.67", "metric", "N spin-s metric near kappa = 0", ("kappa", "eta"))
def metric_spin_s_cap(N, s, kappa, **_):
    return N * s / 2, 0.0, 2 * N * (N - 1) ** 2 * s**3 * kappa**2


@register("4.80", "metric", "two spin-s metric on (C, eta)", ("C", "eta"))
def metric_spin_s_concurrence(s, C, eta, eta_pmax, **_):
    pref = s / (2 * eta**2 * C * (2 * s * eta - C))
    brace = C**2 / 2 + eta_pmax * C * (2 * s * eta - C) * (1 + (4 * s - 1) * (1 - eta_pmax * C / (2 * s * eta**2)))
    return pref * eta**2 / 2, -pref * eta * C / 2, pref * brace


@register("4.81", "metric", "eta part of the (C, eta) metric", ("eta",))
def metric_spin_s_concurrence_ee(s, C, eta, eta_pmax, **_):
    return metric_spin_s_concurrence(s=s, C=C, eta=eta, eta_pmax=eta_pmax)[2], 0.0, 0.0


@register("4.30", "curvature", "N-qubit curvature")
def curvature_qubits(N, eta):
    c2 = np.cos(eta) ** 2
    return 8 / N * (2 - ((2 * N - 3) * c2 + N) / ((2 * N - 3) * c2 + 1) ** 2)


@register("4.54", "curvature", "two-qubit curvature vs concurrence")
def curvature_qubit_pair(C, kappa):
    sk = _abs_sin(kappa)
    return 4 * (2 + sk * (C - 3 * sk) / (C - 2 * sk) ** 2)


@register("4.56", "curvature", "minimum two-qubit curvature as printed")
def curvature_qubit_pair_min(kappa):
    sk = _abs_sin(kappa)
    return 4 * (2 - sk * (3 * sk - 1) / (2 * sk - 1) ** 2)


@register("4.64", "curvature", "N spin-s curvature")
def curvature_spin_s(N, s, kappa):
    b = 4 * s * (N - 1) - 1
    c2 = np.cos(kappa) ** 2
    return 4 / (N * s) * (2 - (b * c2 + 2 * s * (N - 1) + 1) / (b * c2 + 1) ** 2)


@register("4.82", "curvature", "two spin-s curvature vs I-concurrence")
def curvature_spin_s_concurrence(s, x):
    a = (4 * s - 1) * (1 - x)
    return 2 / s * (2 - (a + 2 * s + 1) / (a + 1) ** 2)


@register("4.83", "curvature", "K_max = (2/s)(2 - 3/(8s))")
def curvature_spin_s_max(s):
    return 2 / s * (2 - 3 / (8 * s))


@register("4.84", "curvature", "K_min at the largest admissible concurrence")
def curvature_spin_s_min(s, eta_bar):
    a = (4 * s - 1) * (1 - eta_bar)
    return 2 / s * (2 - (a + 2 * s + 1) / (a + 1) ** 2)


@register("4.33", "euler", "bulk curvature integral 4 pi (N - 1)")
def bulk_qubits(N):
    return 4 * np.pi * (N - 1)


@register("4.35", "euler", "cap defect 4 pi (2 - N)")
def defect_qubits(N):
    return 4 * np.pi * (2 - N)


@register("4.36", "euler", "Euler characteristic 2 for the N-qubit manifold")
def euler_qubits(N):
    return 2.0


@register("4.66", "euler", "bulk curvature integral 4 s eta_max (N - 1)")
def bulk_spin_s(N, s, eta_max):
    return 4 * s * eta_max * (N - 1)


@register("4.69", "euler", "cap defect 2[2 pi - 2 s eta_max (N - 1)]")
def defect_spin_s(N, s, eta_max):
    return 2 * (2 * np.pi - 2 * s * eta_max * (N - 1))


# chapter 4: phases -----------------------------------------------------


@register("4.12", "aa-phase", "XXZ cyclic phase from the connection")
def aa_xxz(coeffs, nu, eta_m, kappa_m):
    w = xxz_weights(coeffs)
    return ((1 - w["A"]) * (nu - 1) + w["B"]) * eta_m + (1 - w["D"]) * kappa_m


@register("4.13", "aa-phase", "XXZ cyclic phase as dynamic plus topological parts")
def aa_xxz_split(coeffs, nu, eta_m, kappa_m):
    w = xxz_weights(coeffs)
    dyn = dynamic_xxz(coeffs=coeffs, nu=nu, eta=eta_m, kappa=kappa_m)
    return dyn + nu / 2 * eta_m + (1 - 2 * w["D"]) * kappa_m


@register("4.14", "topological", "XXZ topological phase (nu/2) eta_m + (1 - 2D) kappa_m")
def top_xxz(coeffs, nu, eta_m, kappa_m):
    w = xxz_weights(coeffs)
    return nu / 2 * eta_m + (1 - 2 * w["D"]) * kappa_m


@register("4.16", "overlap", "XXZ transition amplitude")
def overlap_xxz(coeffs, eta, kappa, nu):
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    w = xxz_weights(coeffs)
    a11, a00 = abs(c11) ** 2, abs(c00) ** 2
    A, B = w["A"], w["B"]
    re = a11 * np.cos(kappa + nu * eta) + (1 - A) * np.cos(eta) + a00 * np.cos(kappa - nu * eta)
    im = a00 * np.sin(kappa - nu * eta) - a11 * np.sin(kappa + nu * eta) - (1 - A - B) * np.sin(eta)
    return re + 1j * im


def _glob_xxz_ratio(coeffs, eta, kappa, nu):
    c11, _, _, c00 = np.asarray(coeffs, dtype=complex)
    w = xxz_weights(coeffs)
    a11, a00 = abs(c11) ** 2, abs(c00) ** 2
    B = w["B"]
    G = 2 * (1 - w["A"]) - B
    nm, npl = (2 - nu) / 2, (2 + nu) / 2
    num = 2 * a00 * np.sin(kappa - nu * eta / 2) - 2 * a11 * np.sin(kappa + nu * eta / 2) - G * np.sin(nm * eta) + B * np.sin(npl * eta)
    den = 2 * a11 * np.cos(kappa + nu * eta / 2) + 2 * a00 * np.cos(kappa - nu * eta / 2) + G * np.cos(nm * eta) + B * np.cos(npl * eta)
    return num, den


@register("4.17", "total-phase", "XXZ global phase as an arctangent")
def total_xxz(coeffs, eta, kappa, nu):
    num, den = _glob_xxz_ratio(coeffs, eta, kappa, nu)
    return np.arctan(num / den)


@register("4.19", "total-phase-period", "XXZ global phase is 2pi-periodic in kappa")
def total_xxz_period(coeffs, eta, kappa, nu):
    return total_xxz(coeffs=coeffs, eta=eta, kappa=kappa + 2 * np.pi, nu=nu) - total_xxz(
        coeffs=coeffs, eta=eta, kappa=kappa, nu=nu
    )


@register("4.20", "dynamic-phase", "XXZ dynamic phase as printed")
def dynamic_xxz(coeffs, nu, eta, kappa):
    w = xxz_weights(coeffs)
    return w["D"] * kappa + (nu * (w["A"] - 0.5) + w["F"]) * eta


@register("4.21", "geometric-phase", "XXZ geometric phase as printed")
def geometric_xxz(coeffs, eta, kappa, nu):
    return total_xxz(coeffs=coeffs, eta=eta, kappa=kappa, nu=nu) - dynamic_xxz(
        coeffs=coeffs, nu=nu, eta=eta, kappa=kappa
    )


@register("4.24", "geometric-phase", "antipodal-state geometric phase vs concurrence")
def geometric_plus_minus(C, chi, nu, kappa):
    s2, c2 = np.sin(chi) ** 2, np.cos(chi) ** 2
    a = short_time_slope(chi, nu)
    nm, npl = (2 - nu) / 2, (2 + nu) / 2
    num = 4 * C * a * (nu * s2 - 2 * npl * c2 + 2 * nm)
    den = s2 * (4 * a**2 * (kappa**2 - 2) + nu**2 * C**2)
    return np.arctan(num / den) + 0.5 * (nu * c2 + s2) / a * C


def _dicke_weights(N, eta):
    p = np.arange(N + 1)
    binom = np.array([comb(N, int(k)) for k in p], dtype=float)
    return p, binom * np.cos(eta / 2) ** (2 * (N - p)) * np.sin(eta / 2) ** (2 * p)


@register("4.37", "overlap", "N-qubit transition amplitude as printed")
def overlap_qubits_printed(N, eta, kappa):
    p, w = _dicke_weights(N, eta)
    return np.sum(w * np.exp(-1j * np.pi / 4 * (N - 2 * p) ** 2))


@register("4.38", "total-phase", "N-qubit total phase as an arctangent")
def total_qubits(N, eta, kappa):
    p, w = _dicke_weights(N, eta)
    ang = kappa * (N - 2 * p) ** 2 / 4
    return -np.arctan(np.sum(w * np.sin(ang)) / np.sum(w * np.cos(ang)))


@register("4.39", "dynamic-phase", "N-qubit dynamic phase")
def dynamic_qubits(N, eta, kappa):
    return -kappa * N / 4 * (N * np.cos(eta) ** 2 + np.sin(eta) ** 2)


@register("4.40", "geometric-phase", "N-qubit geometric phase")
def geometric_qubits(N, eta, kappa):
    return total_qubits(N=N, eta=eta, kappa=kappa) - dynamic_qubits(N=N, eta=eta, kappa=kappa)


def _qubit_short_coeff(N, eta):
    return 4 * (N - 1) * (N + 2) * np.cos(eta) ** 2 - (N - 3) * (N - 2) * np.sin(2 * eta) ** 2 + 4 * (3 * N - 2)


@register("4.41", "overlap", "N-qubit transition amplitude to second order")
def overlap_qubits_short(N, eta, kappa):
    mean = N / 4 * (N * np.cos(eta) ** 2 + np.sin(eta) ** 2)
    return 1 + kappa**2 * N * (N - 1) / 64 * _qubit_short_coeff(N, eta) - 1j * kappa * mean


@register("4.42", "geometric-phase", "N-qubit geometric phase to second order")
def geometric_qubits_short(N, eta, kappa):
    mean = N * np.cos(eta) ** 2 + np.sin(eta) ** 2
    den = 4 + kappa**2 * N * (N - 1) / 16 * _qubit_short_coeff(N, eta)
    return -np.arctan(kappa * N * mean / den) + kappa * N / 4 * mean


@register("4.45", "aa-phase", "N-qubit cyclic phase -(pi/2) N(N - 1) sin^2 eta")
def aa_qubits(N, eta):
    return -np.pi / 2 * N * (N - 1) * np.sin(eta) ** 2


@register("4.46-printed", "aa-phase", "N-qubit cyclic phase rewritten through the curvature")
def aa_qubits_curvature(N, K):
    return np.pi * N * (N - 1) / 2 * ((-56 + 3 * N * (16 - (N - 1) * K)) / ((2 * N - 3) * (N * K - 16)))


@register("4.47", "topological", "N-qubit topological phase -pi N^2/2")
def top_qubits(N):
    return -np.pi / 2 * N**2


@register("4.57", "geometric-phase", "two-qubit geometric phase vs concurrence")
def geometric_qubit_pair(C, kappa):
    sk = _abs_sin(kappa)
    return -np.arctan((2 * sk - C) * np.sin(kappa) / ((2 * sk - C) * np.cos(kappa) + C)) + kappa * (1 - C / (2 * sk))


@register("4.58", "aa-phase", "two-qubit cyclic phase -pi C/|sin kappa|")
def aa_qubit_pair(C, kappa):
    return -np.pi * C / _abs_sin(kappa)


@register("4.59", "topological", "two-qubit topological phase -2 pi")
def top_qubit_pair():
    return -2 * np.pi


def _spin_s_weights(N, s, kappa):
    two_s = int(round(2 * s))
    m = s - np.arange(two_s + 1)
    t2 = np.tan(kappa / 2) ** 2
    local = np.array([comb(two_s, int(round(s + x))) for x in m], dtype=float) * t2 ** (s + m)
    w = np.ones(1)
    msum = np.zeros(1)
    msq = np.zeros(1)
    for _ in range(N):
        w = np.kron(w, local)
        msum = np.add.outer(msum, m).reshape(-1)
        msq = np.add.outer(msq, m**2).reshape(-1)
    return w, 0.5 * (msum**2 - msq), (1 + t2) ** (-2 * N * s)


@register("4.71", "overlap", "N spin-s transition amplitude")
def overlap_spin_s(N, s, eta, kappa):
    w, pair, norm = _spin_s_weights(N, s, kappa)
    return norm * np.sum(w * np.exp(-2j * eta * pair))


@register("4.72", "total-phase", "N spin-s global phase as an arctangent")
def total_spin_s(N, s, eta, kappa):
    w, pair, _ = _spin_s_weights(N, s, kappa)
    return -np.arctan(np.sum(np.sin(2 * eta * pair) * w) / np.sum(np.cos(2 * eta * pair) * w))


@register("4.73", "total-phase-period", "N spin-s global phase is 2pi-periodic in eta")
def total_spin_s_period(N, s, eta, kappa):
    return total_spin_s(N=N, s=s, eta=eta + 2 * np.pi, kappa=kappa) - total_spin_s(N=N, s=s, eta=eta, kappa=kappa)


@register("4.74", "dynamic-phase", "N spin-s dynamic phase")
def dynamic_spin_s(N, s, eta, kappa):
    return -eta * s**2 * N * (N - 1) * np.cos(kappa) ** 2


@register("4.75", "geometric-phase", "N spin-s geometric phase")
def geometric_spin_s(N, s, eta, kappa):
    return total_spin_s(N=N, s=s, eta=eta, kappa=kappa) + eta * N * (N - 1) * s**2 * np.cos(kappa) ** 2


def _spin_short_coeff(N, s, kappa):
    return s * (N - 1) * (2 * s * N * np.cos(kappa) ** 4 + np.sin(2 * kappa) ** 2) + np.sin(kappa) ** 4


@register("4.76", "overlap", "N spin-s transition amplitude to second order")
def overlap_spin_s_short(N, s, eta, kappa):
    q = s**2 * N * (N - 1)
    return 1 - eta**2 * q / 4 * _spin_short_coeff(N, s, kappa) - 1j * eta * q * np.cos(kappa) ** 2


@register("4.77", "geometric-phase", "N spin-s geometric phase to second order")
def geometric_spin_s_short(N, s, eta, kappa):
    q = s**2 * N * (N - 1)
    den = 4 - eta**2 * q * _spin_short_coeff(N, s, kappa)
    return -np.arctan(4 * eta * q * np.cos(kappa) ** 2 / den) + eta * q * np.cos(kappa) ** 2


@register("4.79", "aa-phase", "N spin-s cyclic phase eta_max N(N - 1) s^2 cos^2 kappa")
def aa_spin_s(N, s, kappa, eta_max):
    return eta_max * N * (N - 1) * s**2 * np.cos(kappa) ** 2


@register("4.85", "geometric-phase", "two spin-s geometric phase vs I-concurrence ratio")
def geometric_spin_s_concurrence(s, x, eta, eta_bar=1.0):
    u = 1 - eta_bar * x
    den = 2 - eta**2 * s**2 * (2 * s - 1) * ((2 * s - 1) * eta_bar**2 * x**2 - 4 * s * eta_bar * x + 4 * s**2)
    return 2 * eta * s**2 * u - np.arctan(4 * eta * s**2 * u / den)
