"""Pure states on N-site tensor bases.

Basis convention: site 1 is the most significant digit of the flat index and,
within a site, the magnetic number runs downward from ``m = s`` (digit 0) to
``m = -s``.  For two qubits this gives the order |11>, |10>, |01>, |00> with
"1" meaning spin up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import DomainError, ResourceError

MAX_DIMENSION = 4096
NORM_TOL = 1e-12
RENORM_LIMIT = 1e-8


def as_spin(s) -> Fraction:
    """Coerce ``s`` to an exact half-integer, rejecting anything else."""
    spin = Fraction(s).limit_denominator(2)
    if spin <= 0 or (2 * spin).denominator != 1 or abs(float(spin) - float(s)) > 1e-12:
        raise DomainError(f"spin must be a positive half-integer, got {s!r}")
    return spin


@dataclass(frozen=True)
class BasisDescriptor:
    n_sites: int
    spin: Fraction

    def __init__(self, n_sites: int, spin=Fraction(1, 2)):
        if int(n_sites) != n_sites or n_sites < 1:
            raise DomainError(f"n_sites must be a positive integer, got {n_sites!r}")
        object.__setattr__(self, "n_sites", int(n_sites))
        object.__setattr__(self, "spin", as_spin(spin))
        if self.dimension < 2:
            raise DomainError("total dimension must be at least 2")
        if self.dimension > MAX_DIMENSION:
            raise ResourceError(
                f"dimension {self.dimension} exceeds the cap of {MAX_DIMENSION}"
            )

    @property
    def local_dim(self) -> int:
        return int(2 * self.spin) + 1

    @property
    def dimension(self) -> int:
        return self.local_dim**self.n_sites

    @property
    def s(self) -> float:
        return float(self.spin)

    @cached_property
    def local_m(self) -> np.ndarray:
        """Magnetic numbers of one site in digit order (m = s first)."""
        return self.s - np.arange(self.local_dim, dtype=float)

    @cached_property
    def m_table(self) -> np.ndarray:
        """Array of shape (D, N): the magnetic number of every site in every basis state."""
        digits = np.indices((self.local_dim,) * self.n_sites).reshape(self.n_sites, -1).T
        return self.local_m[digits]


def check_dimension(n_sites: int, spin) -> BasisDescriptor:
    """Build a basis, raising ResourceError above the dimension cap."""
    return BasisDescriptor(n_sites, spin)


def flat_index(ms, basis: BasisDescriptor) -> int:
    """Row-major index of the product state with per-site magnetic numbers ``ms``."""
    if len(ms) != basis.n_sites:
        raise DomainError(f"expected {basis.n_sites} magnetic numbers, got {len(ms)}")
    index = 0
    for m in ms:
        digit = basis.s - float(m)
        if abs(digit - round(digit)) > 1e-9 or not 0 <= round(digit) < basis.local_dim:
            raise DomainError(f"magnetic number {m!r} outside -s..s for s={basis.spin}")
        index = index * basis.local_dim + int(round(digit))
    return index


def magnetic_numbers(index: int, basis: BasisDescriptor) -> tuple[float, ...]:
    """Inverse of :func:`flat_index`."""
    if not 0 <= index < basis.dimension:
        raise DomainError(f"index {index} outside 0..{basis.dimension - 1}")
    digits = []
    for _ in range(basis.n_sites):
        index, digit = divmod(index, basis.local_dim)
        digits.append(digit)
    return tuple(basis.s - d for d in reversed(digits))


class PureState:
    """Normalized amplitude vector over a tensor basis.  Immutable."""

    __slots__ = ("basis", "_amps")

    def __init__(self, basis: BasisDescriptor, amplitudes, *, normalize: bool = False):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (basis.dimension,):
            raise DomainError(
                f"expected {basis.dimension} amplitudes, got {amps.shape[0]}"
            )
        norm = np.linalg.norm(amps)
        if normalize:
            if norm == 0:
                raise DomainError("cannot normalize the zero vector")
            amps = amps / norm
        else:
            deviation = abs(norm**2 - 1.0)
            if deviation > RENORM_LIMIT:
                raise DomainError(f"state norm deviates from 1 by {deviation:.3e}")
            if deviation > NORM_TOL:
                amps = amps / norm
        amps.setflags(write=False)
        self.basis = basis
        self._amps = amps

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    def __repr__(self):
        return f"PureState(N={self.basis.n_sites}, s={self.basis.spin}, D={self.basis.dimension})"

    @classmethod
    def basis_state(cls, basis: BasisDescriptor, ms) -> "PureState":
        amps = np.zeros(basis.dimension, dtype=complex)
        amps[flat_index(ms, basis)] = 1.0
        return cls(basis, amps)

    @classmethod
    def product(cls, basis: BasisDescriptor, site_states) -> "PureState":
        """Tensor product of per-site amplitude vectors (site 1 first)."""
        if len(site_states) != basis.n_sites:
            raise DomainError("one local state per site is required")
        amps = np.ones(1, dtype=complex)
        for local in site_states:
            local = np.asarray(local, dtype=complex)
            if local.shape != (basis.local_dim,):
                raise DomainError("local state has the wrong dimension")
            amps = np.kron(amps, local)
        return cls(basis, amps, normalize=True)


class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix."""

    __slots__ = ("_rho",)

    def __init__(self, entries):
        rho = np.array(entries, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise DomainError("density matrix must be square")
        if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
            raise DomainError("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1.0) > 1e-12:
            raise DomainError("density matrix trace differs from 1")
        if np.linalg.eigvalsh(rho).min() < -1e-10:
            raise DomainError("density matrix has a negative eigenvalue")
        rho.setflags(write=False)
        self._rho = rho

    @property
    def entries(self) -> np.ndarray:
        return self._rho

    @property
    def dimension(self) -> int:
        return self._rho.shape[0]


def _same_basis(a: PureState, b: PureState):
    if a.basis != b.basis:
        raise DomainError("states live on different bases")


def overlap(a: PureState, b: PureState) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    _same_basis(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def partial_trace(psi: PureState, keep_site: int) -> DensityMatrix:
    """Reduced density matrix of one site (sites are numbered from 1)."""
    basis = psi.basis
    if basis.n_sites < 2:
        raise DomainError("partial trace needs at least two sites")
    if int(keep_site) != keep_site or not 1 <= keep_site <= basis.n_sites:
        raise DomainError(f"site index {keep_site!r} outside 1..{basis.n_sites}")
    d = basis.local_dim
    tensor = psi.amplitudes.reshape((d,) * basis.n_sites)
    tensor = np.moveaxis(tensor, keep_site - 1, 0).reshape(d, -1)
    rho = tensor @ tensor.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho / np.trace(rho).real)


def purity(rho: DensityMatrix) -> float:
    """Tr rho^2."""
    r = rho.entries
    return float(np.real(np.vdot(r, r)))
