"""Concurrence of two qubits and I-concurrence of two qudits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import formulas
from .errors import DomainError
from .models import SIGMA_Y
from .statespace import BasisDescriptor, DensityMatrix, PureState, partial_trace, purity

_QUBIT_PAIR = BasisDescriptor(2, 0.5)
CONCURRENCE_KINDS = ("wootters_qubit", "i_concurrence")


@dataclass(frozen=True)
class ConcurrenceValue:
    value: float
    kind: str
    bipartition: int = 1

    def __float__(self) -> float:
        return self.value


def concurrence_pure_2qubit(psi: PureState) -> ConcurrenceValue:
    """2|c11 c00 - c10 c01| for a pure two-qubit state."""
    if psi.basis != _QUBIT_PAIR:
        raise DomainError("concurrence_pure_2qubit needs two spin-1/2 sites")
    c11, c10, c01, c00 = psi.amplitudes
    return ConcurrenceValue(float(min(2 * abs(c11 * c00 - c10 * c01), 1.0)), "wootters_qubit")


def concurrence_closed(formula_id: str, params: Mapping) -> formulas.TaggedValue:
    """Verbatim printed concurrence, tagged with its oracle verdict."""
    return formulas.evaluate_tagged(formula_id, "concurrence", **params)


def i_concurrence(psi: PureState, keep_site: int = 1) -> ConcurrenceValue:
    """sqrt(2(1 - Tr rho_k^2)) of the reduced state of one site."""
    if psi.basis.n_sites != 2:
        raise DomainError("I-concurrence is defined here for two sites")
    rho = partial_trace(psi, keep_site)
    d = psi.basis.local_dim
    bound = np.sqrt(2 * (d - 1) / d)
    value = float(np.sqrt(max(2 * (1 - purity(rho)), 0.0)))
    return ConcurrenceValue(min(value, bound), "i_concurrence", keep_site)


def i_concurrence_short_time(s, eta, kappa) -> formulas.TaggedValue:
    """Leading small-eta I-concurrence 2 eta s sin^2 kappa."""
    return formulas.evaluate_tagged("3.103", "concurrence", s=float(s), eta=eta, kappa=kappa)


def wootters_concurrence(rho: DensityMatrix) -> float:
    """Mixed-state two-qubit concurrence from the spin-flip spectrum."""
    if rho.dimension != 4:
        raise DomainError("Wootters concurrence needs a 4x4 density matrix")
    r = rho.entries
    flip = np.kron(SIGMA_Y, SIGMA_Y)
    rt = flip @ r.conj() @ flip
    ev = np.sqrt(np.clip(np.sort(np.real(np.linalg.eigvals(r @ rt)))[::-1], 0.0, None))
    return float(max(0.0, ev[0] - ev[1] - ev[2] - ev[3]))
