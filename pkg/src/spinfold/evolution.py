"""Exact time evolution and the closed-form evolved families."""

from __future__ import annotations

from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .errors import DomainError
from .models import (
    ModelSpec,
    Variant,
    collective_ising_spec,
    diagonal_energies,
    pairwise_ising_spec,
    site_coherent_amplitudes,
    spectral_data,
    xxz_spec,
)
from .statespace import BasisDescriptor, PureState

ALIGN_MIN_OVERLAP = 1e-6
PERIODICITY_TOL = 1e-9


def wrap_angle(x):
    """Map angles to (-pi, pi]."""
    y = np.mod(np.asarray(x, dtype=float) + np.pi, 2 * np.pi) - np.pi
    y = np.where(y == -np.pi, np.pi, y)
    return float(y) if np.ndim(y) == 0 else y


def evolve_exact(psi0: PureState, spec: ModelSpec, t: float) -> PureState:
    """Apply exp(-iHt) through the exact spectral decomposition."""
    if psi0.basis != spec.basis:
        raise DomainError("initial state and model use different bases")
    if spec.is_diagonal:
        phases = np.exp(-1j * diagonal_energies(spec) * t)
        return PureState(spec.basis, psi0.amplitudes * phases)
    data = spectral_data(spec)
    V = data.eigenvectors
    coeffs = V.conj().T @ psi0.amplitudes
    return PureState(spec.basis, V @ (np.exp(-1j * data.energies * t) * coeffs))


def aligned_residual(a: PureState | np.ndarray, b: PureState | np.ndarray) -> float:
    """Distance between two states after removing one global phase.

    Returns inf when the overlap is too small for the phase to be defined.
    """
    va = a.amplitudes if isinstance(a, PureState) else np.asarray(a)
    vb = b.amplitudes if isinstance(b, PureState) else np.asarray(b)
    ov = np.vdot(va, vb)
    if abs(ov) < ALIGN_MIN_OVERLAP:
        return float("inf")
    return float(np.linalg.norm(vb - np.exp(1j * np.angle(ov)) * va))


# closed forms -----------------------------------------------------------

_QUBIT_PAIR = BasisDescriptor(2, 0.5)


def xxz_vector(coeffs, eta, kappa, nu) -> np.ndarray:
    c11, c10, c01, c00 = np.asarray(coeffs, dtype=complex)
    ce, se = np.cos(eta), np.sin(eta)
    return np.exp(0.5j * nu * eta) * np.array(
        [
            c11 * np.exp(-1j * (kappa + nu * eta)),
            c10 * ce - 1j * c01 * se,
            -1j * c10 * se + c01 * ce,
            c00 * np.exp(1j * (kappa - nu * eta)),
        ]
    )


def xxz_closed(c11, c10, c01, c00, eta, kappa, nu) -> PureState:
    """Two-spin XXZ state at chart point (eta = 2Jt, kappa = 2bt)."""
    return PureState(_QUBIT_PAIR, xxz_vector((c11, c10, c01, c00), eta, kappa, nu))


def xxz_time(J: float, b: float, eta: float, kappa: float) -> float:
    """Recover t from the chart; (eta, kappa) must describe a single time."""
    t = eta / (2 * J)
    if not np.isclose(kappa, 2 * b * t, rtol=1e-12, atol=1e-12):
        raise DomainError(
            f"chart point (eta={eta}, kappa={kappa}) is not reachable with J={J}, b={b}"
        )
    return t


def _coherent_product(basis: BasisDescriptor, polar, azimuthal) -> np.ndarray:
    if np.ndim(polar) == 0 and np.ndim(azimuthal) == 0:
        return _cached_product(basis.n_sites, basis.spin, float(polar), float(azimuthal))
    return _build_product(basis.n_sites, basis.spin, polar, azimuthal)


def _build_product(n_sites, spin, polar, azimuthal) -> np.ndarray:
    local = site_coherent_amplitudes(spin, polar, azimuthal)
    amps = np.ones(1, dtype=complex)
    for _ in range(n_sites):
        amps = np.kron(amps, local)
    return amps


@lru_cache(maxsize=4096)
def _cached_product(n_sites, spin, polar, azimuthal) -> np.ndarray:
    # paths revisit the same initial state many times; the product is read-only
    amps = _build_product(n_sites, spin, polar, azimuthal)
    amps.setflags(write=False)
    return amps


@lru_cache(maxsize=128)
def _collective_square(N: int) -> np.ndarray:
    total = BasisDescriptor(N, 0.5).m_table.sum(axis=1)  # (N - 2p)/2
    return total**2


@lru_cache(maxsize=128)
def _pair_sum(N: int, s) -> np.ndarray:
    m = BasisDescriptor(N, s).m_table
    return 0.5 * (m.sum(axis=1) ** 2 - np.sum(m**2, axis=1))


def ising_qubit_vector(N: int, eta, phi, kappa) -> np.ndarray:
    basis = BasisDescriptor(N, 0.5)
    return _coherent_product(basis, eta, phi) * np.exp(-1j * kappa * _collective_square(N))


def ising_qubit_closed(N: int, eta, phi, kappa) -> PureState:
    """N qubits, collective Ising: coherent state with Dicke-sector phases."""
    return PureState(BasisDescriptor(N, 0.5), ising_qubit_vector(N, eta, phi, kappa))


def ising_spin_s_vector(N: int, s, kappa, phi, eta) -> np.ndarray:
    basis = BasisDescriptor(N, s)
    return _coherent_product(basis, kappa, phi) * np.exp(-2j * eta * _pair_sum(N, basis.spin))


def ising_spin_s_closed(N: int, s, kappa, phi, eta) -> PureState:
    """N spin-s sites, pairwise Ising: coherent state with pair phases."""
    return PureState(BasisDescriptor(N, s), ising_spin_s_vector(N, s, kappa, phi, eta))


# families ---------------------------------------------------------------


@dataclass(frozen=True)
class EvolvedFamily:
    """A state-valued function of named chart coordinates.

    ``time_velocity`` gives d(coordinate)/dt along physical time evolution;
    coordinates absent from it are initial-state parameters.
    """

    name: str
    spec: ModelSpec | None
    coords: tuple[str, ...]
    vector_fn: Callable[..., np.ndarray] = field(repr=False)
    time_velocity: Mapping[str, float] = field(default_factory=dict)
    defaults: Mapping[str, float] = field(default_factory=dict)

    def point(self, **coords) -> dict:
        unknown = set(coords) - set(self.coords)
        if unknown:
            raise DomainError(f"unknown chart coordinates {sorted(unknown)}")
        full = {**self.defaults, **coords}
        missing = set(self.coords) - set(full)
        if missing:
            raise DomainError(f"missing chart coordinates {sorted(missing)}")
        return full

    def vector(self, **coords) -> np.ndarray:
        return self.vector_fn(**self.point(**coords))

    def state(self, **coords) -> PureState:
        basis = self.spec.basis if self.spec is not None else None
        vec = self.vector(**coords)
        if basis is None:
            basis = BasisDescriptor(1, (len(vec) - 1) / 2)
        return PureState(basis, vec)

    def advance(self, point: Mapping[str, float], t: float) -> dict:
        """Chart point reached after evolving for time t from ``point``."""
        moved = dict(self.point(**point))
        for name, rate in self.time_velocity.items():
            moved[name] = moved[name] + rate * t
        return moved

    def with_defaults(self, **defaults) -> "EvolvedFamily":
        return EvolvedFamily(
            self.name, self.spec, self.coords, self.vector_fn, self.time_velocity,
            {**self.defaults, **defaults},
        )


def xxz_family(coeffs, J: float = 1.0, nu: float = 0.0, b: float = 0.0) -> EvolvedFamily:
    coeffs = np.asarray(coeffs, dtype=complex)
    coeffs = coeffs / np.linalg.norm(coeffs)
    spec = xxz_spec(J, nu, b)
    return EvolvedFamily(
        "xxz",
        spec,
        ("eta", "kappa"),
        lambda eta, kappa: xxz_vector(coeffs, eta, kappa, nu),
        {"eta": 2 * J, "kappa": 2 * b},
        {"eta": 0.0, "kappa": 0.0},
    )


def ising_qubit_family(N: int, J: float = 1.0) -> EvolvedFamily:
    spec = collective_ising_spec(N, J)
    return EvolvedFamily(
        "ising-qubit",
        spec,
        ("eta", "phi", "kappa"),
        lambda eta, phi, kappa: ising_qubit_vector(N, eta, phi, kappa),
        {"kappa": J},
        {"phi": 0.0, "kappa": 0.0},
    )


def ising_spin_s_family(N: int, s, J: float = 1.0) -> EvolvedFamily:
    spec = pairwise_ising_spec(N, s, J)
    return EvolvedFamily(
        "ising-spin-s",
        spec,
        ("kappa", "phi", "eta"),
        lambda kappa, phi, eta: ising_spin_s_vector(N, s, kappa, phi, eta),
        {"eta": J},
        {"phi": 0.0, "eta": 0.0},
    )


def build_family(model: str, **params) -> EvolvedFamily:
    """Family lookup by CLI model name."""
    if model == Variant.XXZ.value:
        coeffs = params.get("coeffs", (0.5, 0.5, 0.5, 0.5))
        return xxz_family(coeffs, params.get("J", 1.0), params.get("nu", 0.0), params.get("b", 0.0))
    if model == Variant.COLLECTIVE_ISING.value:
        return ising_qubit_family(int(params.get("N", 2)), params.get("J", 1.0))
    if model == Variant.PAIRWISE_ISING.value:
        return ising_spin_s_family(int(params.get("N", 2)), params.get("s", 0.5), params.get("J", 1.0))
    raise DomainError(f"unknown model {model!r}")


@dataclass(frozen=True)
class PeriodicityResult:
    periodic: bool
    phase: float
    residual: float


def check_periodicity(
    family: EvolvedFamily,
    point: Mapping[str, float],
    shift: Mapping[str, float],
    claimed_phase: float | str | None = None,
) -> PeriodicityResult:
    """Test psi(x + shift) = exp(i alpha) psi(x) for the best-fit alpha."""
    here = family.vector(**point)
    there_point = dict(family.point(**point))
    for name, delta in shift.items():
        there_point[name] += delta
    there = family.vector(**there_point)
    ov = np.vdot(here, there)
    if abs(ov) < ALIGN_MIN_OVERLAP:
        return PeriodicityResult(False, float("nan"), float("inf"))
    alpha = float(np.angle(ov))
    residual = float(np.linalg.norm(there - np.exp(1j * alpha) * here))
    ok = residual < PERIODICITY_TOL
    if ok and claimed_phase not in (None, "any"):
        ok = abs(wrap_angle(alpha - float(claimed_phase))) < PERIODICITY_TOL
    return PeriodicityResult(ok, alpha, residual)
