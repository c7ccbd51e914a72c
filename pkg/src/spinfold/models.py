"""The three Hamiltonian families and their coherent initial states.

Units: hbar = 1, energies in the same units as the coupling J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb

import numpy as np

from .errors import ConsistencyError, DomainError
from .statespace import BasisDescriptor, PureState, as_spin

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
# digit 0 is spin up, so sigma_z = diag(+1, -1) in digit order
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)


class Variant(str, Enum):
    XXZ = "xxz"
    COLLECTIVE_ISING = "ising-qubit"
    PAIRWISE_ISING = "ising-spin-s"


@dataclass(frozen=True)
class ModelSpec:
    variant: Variant
    J: float
    basis: BasisDescriptor
    nu: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if self.J == 0 or not np.isfinite(self.J):
            raise DomainError("J must be a nonzero finite real")
        if self.variant is Variant.XXZ and (
            self.basis.n_sites != 2 or self.basis.spin != as_spin(0.5)
        ):
            raise DomainError("the XXZ model is defined for two spin-1/2 sites")
        if self.variant is Variant.COLLECTIVE_ISING and self.basis.spin != as_spin(0.5):
            raise DomainError("the collective Ising model is defined for spin 1/2")

    @property
    def is_diagonal(self) -> bool:
        return self.variant is not Variant.XXZ


def xxz_spec(J: float, nu: float, b: float) -> ModelSpec:
    return ModelSpec(Variant.XXZ, J, BasisDescriptor(2, 0.5), nu=nu, b=b)


def collective_ising_spec(N: int, J: float) -> ModelSpec:
    return ModelSpec(Variant.COLLECTIVE_ISING, J, BasisDescriptor(N, 0.5))


def pairwise_ising_spec(N: int, s, J: float) -> ModelSpec:
    return ModelSpec(Variant.PAIRWISE_ISING, J, BasisDescriptor(N, s))


@dataclass(frozen=True)
class SpectralData:
    energies: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)


def xxz_matrix(J: float, nu: float, b: float) -> np.ndarray:
    h_exchange = J * (np.kron(SIGMA_X, SIGMA_X) + np.kron(SIGMA_Y, SIGMA_Y))
    h_zz = nu * J * np.kron(SIGMA_Z, SIGMA_Z)
    h_field = b * (np.kron(SIGMA_Z, IDENTITY) + np.kron(IDENTITY, SIGMA_Z))
    return h_exchange + h_zz + h_field


def build_xxz(J: float, nu: float, b: float) -> tuple[np.ndarray, SpectralData]:
    """Hamiltonian matrix and exact eigensystem of the two-spin XXZ model.

    The eigenvectors are the fixed triplet/singlet set; the energies are read
    off the assembled matrix and the residual is checked.
    """
    H = xxz_matrix(J, nu, b)
    r = 1 / np.sqrt(2)
    vecs = np.array(
        [
            [1, 0, 0, 0],
            [0, r, r, 0],
            [0, r, -r, 0],
            [0, 0, 0, 1],
        ],
        dtype=complex,
    ).T
    energies = np.array(
        [nu * J + 2 * b, 2 * J - nu * J, -2 * J - nu * J, nu * J - 2 * b], dtype=float
    )
    residual = np.linalg.norm(H @ vecs - vecs * energies, axis=0).max()
    if residual > 1e-10:
        raise ConsistencyError(f"XXZ eigen-residual {residual:.2e}")
    return H, SpectralData(energies, vecs)


def diagonal_energy(ms, spec: ModelSpec) -> float:
    """Energy of one product basis state for the diagonal (Ising) variants."""
    if not spec.is_diagonal:
        raise DomainError("the XXZ Hamiltonian is not diagonal in the tensor basis")
    ms = np.asarray(ms, dtype=float)
    total = ms.sum()
    if spec.variant is Variant.COLLECTIVE_ISING:
        return float(spec.J * total**2)
    return float(spec.J * (total**2 - np.sum(ms**2)))


def diagonal_energies(spec: ModelSpec) -> np.ndarray:
    """Vector of diagonal energies over the whole tensor basis."""
    if not spec.is_diagonal:
        raise DomainError("the XXZ Hamiltonian is not diagonal in the tensor basis")
    m = spec.basis.m_table
    total = m.sum(axis=1)
    if spec.variant is Variant.COLLECTIVE_ISING:
        return spec.J * total**2
    return spec.J * (total**2 - np.sum(m**2, axis=1))


def hamiltonian_matrix(spec: ModelSpec) -> np.ndarray:
    if spec.variant is Variant.XXZ:
        return xxz_matrix(spec.J, spec.nu, spec.b)
    return np.diag(diagonal_energies(spec)).astype(complex)


def spectral_data(spec: ModelSpec) -> SpectralData:
    if spec.variant is Variant.XXZ:
        return build_xxz(spec.J, spec.nu, spec.b)[1]
    energies = diagonal_energies(spec)
    return SpectralData(energies, np.eye(spec.basis.dimension, dtype=complex))


def site_coherent_amplitudes(s, polar: float, azimuthal: float) -> np.ndarray:
    """Single-site SU(2) coherent state in digit order (m = s first).

    Amplitude on m is sqrt(C(2s, s-m)) cos^(s+m)(polar/2) sin^(s-m)(polar/2)
    exp(i (s-m) azimuthal), so polar = 0 is the fully polarized |s, s>.
    """
    two_s = int(2 * as_spin(s))
    k = np.arange(two_s + 1)  # k = s - m
    c, sn = np.cos(polar / 2), np.sin(polar / 2)
    binom = np.array([comb(two_s, int(j)) for j in k], dtype=float)
    return np.sqrt(binom) * c ** (two_s - k) * sn**k * np.exp(1j * k * azimuthal)


def coherent_state(basis: BasisDescriptor, polar: float, azimuthal: float) -> PureState:
    """Tensor power of the single-site coherent state."""
    if not 0 <= polar <= np.pi:
        raise DomainError(f"polar angle {polar!r} outside [0, pi]")
    local = site_coherent_amplitudes(basis.spin, polar, azimuthal)
    return PureState.product(basis, [local] * basis.n_sites)
