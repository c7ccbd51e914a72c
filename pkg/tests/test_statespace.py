from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfold.errors import DomainError, ResourceError
from spinfold.evolution import ising_qubit_closed
from spinfold.models import coherent_state
from spinfold.statespace import (
    BasisDescriptor,
    DensityMatrix,
    PureState,
    flat_index,
    magnetic_numbers,
    overlap,
    partial_trace,
    purity,
)

QUBITS = BasisDescriptor(2, 0.5)


def test_flat_index_examples():
    assert flat_index((0.5, 0.5), QUBITS) == 0
    assert flat_index((-0.5, -0.5), QUBITS) == 3
    assert flat_index((0,), BasisDescriptor(1, 1)) == 1


def test_two_qubit_order_is_up_up_first():
    order = [magnetic_numbers(i, QUBITS) for i in range(4)]
    assert order == [(0.5, 0.5), (0.5, -0.5), (-0.5, 0.5), (-0.5, -0.5)]


def test_flat_index_rejects_bad_m():
    with pytest.raises(DomainError):
        flat_index((1.5, 0.5), QUBITS)
    with pytest.raises(DomainError):
        flat_index((0.5,), QUBITS)


@pytest.mark.parametrize("n, s", [(1, 0.5), (3, 1), (2, 1.5), (4, 0.5), (2, 2), (5, 1)])
def test_flat_index_inverse_exhaustive(n, s):
    basis = BasisDescriptor(n, s)
    assert basis.dimension <= 1000
    for i in range(basis.dimension):
        assert flat_index(magnetic_numbers(i, basis), basis) == i


def test_dimension_cap():
    with pytest.raises(ResourceError):
        BasisDescriptor(13, 0.5)
    assert BasisDescriptor(12, 0.5).dimension == 4096


def test_normalization_rules():
    PureState(QUBITS, [1, 0, 0, 1e-7])  # renormalized silently
    with pytest.raises(DomainError):
        PureState(QUBITS, [1, 1, 0, 0])


def test_overlap_examples():
    up = PureState.basis_state(QUBITS, (0.5, 0.5))
    down = PureState.basis_state(QUBITS, (-0.5, -0.5))
    assert overlap(up, up) == pytest.approx(1.0)
    assert overlap(up, down) == 0
    with pytest.raises(DomainError):
        overlap(up, PureState.basis_state(BasisDescriptor(1, 1), (0,)))


@pytest.mark.parametrize("eta", [0.0, 0.7, np.pi / 2, 2.9])
def test_overlap_with_tilted_qubit(eta):
    one = BasisDescriptor(1, 0.5)
    up = PureState.basis_state(one, (0.5,))
    assert abs(overlap(up, coherent_state(one, eta, 0.0))) == pytest.approx(np.cos(eta / 2), abs=1e-14)


def test_partial_trace_examples():
    bell = PureState(QUBITS, np.array([1, 0, 0, 1]) / np.sqrt(2))
    rho = partial_trace(bell, 1)
    assert np.allclose(rho.entries, np.eye(2) / 2)
    assert purity(rho) == pytest.approx(0.5)
    product = coherent_state(QUBITS, np.pi / 2, 0.0)
    assert purity(partial_trace(product, 2)) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DomainError):
        partial_trace(bell, 3)


def test_partial_trace_of_evolved_pair_at_maximal_entanglement():
    psi = ising_qubit_closed(2, np.pi / 2, 0.0, np.pi / 2)
    assert purity(partial_trace(psi, 1)) == pytest.approx(0.5, abs=1e-12)


def test_purity_bounds():
    assert purity(DensityMatrix(np.eye(3) / 3)) == pytest.approx(1 / 3)
    with pytest.raises(DomainError):
        DensityMatrix(np.diag([1.5, -0.5]))


angles = st.floats(0.0, np.pi)
phis = st.floats(0.0, 2 * np.pi)


@given(st.integers(0, 2**31 - 1))
def test_bessel_inequality(seed):
    rng = np.random.default_rng(seed)
    basis = BasisDescriptor(2, 1)
    vs = rng.normal(size=(3, 9)) + 1j * rng.normal(size=(3, 9))
    a, b, c = (PureState(basis, v, normalize=True) for v in vs)
    perp = c.amplitudes - overlap(b, c) * b.amplitudes
    b_perp = PureState(basis, perp, normalize=True)
    total = abs(overlap(a, b)) ** 2 + abs(overlap(a, b_perp)) ** 2
    assert total <= 1 + 1e-12


@given(st.lists(st.tuples(angles, phis), min_size=2, max_size=4), st.sampled_from([0.5, 1, 1.5]))
def test_product_state_has_unit_purity(sites, s):
    from spinfold.models import site_coherent_amplitudes

    basis = BasisDescriptor(len(sites), s)
    psi = PureState.product(basis, [site_coherent_amplitudes(s, th, ph) for th, ph in sites])
    for k in range(1, len(sites) + 1):
        assert purity(partial_trace(psi, k)) == pytest.approx(1.0, abs=1e-12)
