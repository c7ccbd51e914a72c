from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfold import formulas as F
from spinfold.entanglement import (
    concurrence_closed,
    concurrence_pure_2qubit,
    i_concurrence,
    i_concurrence_short_time,
    wootters_concurrence,
)
from spinfold.errors import DomainError
from spinfold.evolution import ising_qubit_closed, ising_spin_s_closed, xxz_family
from spinfold.models import coherent_state
from spinfold.statespace import BasisDescriptor, DensityMatrix, PureState

QUBITS = BasisDescriptor(2, 0.5)
BELL = PureState(QUBITS, np.array([1, 0, 0, 1]) / np.sqrt(2))


def _su2(rng):
    a = rng.normal(size=4)
    a /= np.linalg.norm(a)
    return np.array([[a[0] + 1j * a[1], a[2] + 1j * a[3]], [-a[2] + 1j * a[3], a[0] - 1j * a[1]]])


def test_reference_states():
    assert concurrence_pure_2qubit(BELL).value == pytest.approx(1.0)
    assert concurrence_pure_2qubit(coherent_state(QUBITS, 0.7, 0.3)).value == pytest.approx(0.0, abs=1e-15)
    assert i_concurrence(BELL).value == pytest.approx(1.0)
    with pytest.raises(DomainError):
        concurrence_pure_2qubit(PureState.basis_state(BasisDescriptor(2, 1), (1, 1)))


def test_evolved_pair_against_closed_form_on_grid():
    worst = 0.0
    for eta in np.linspace(0, np.pi, 20):
        for kappa in np.linspace(0, 2 * np.pi, 20):
            psi = PureState(QUBITS, F.evaluate("3.70", eta=eta, varphi=0.4, kappa=kappa))
            oracle = concurrence_pure_2qubit(psi).value
            worst = max(worst, abs(oracle - np.sin(eta) ** 2 * abs(np.sin(kappa))))
            worst = max(worst, abs(oracle - concurrence_closed("3.71", {"eta": eta, "kappa": kappa})))
    assert worst < 1e-10


def test_printed_xxz_concurrence_values():
    assert concurrence_closed("3.43", {"eta": np.pi / 4}) == pytest.approx(1.0)
    for eta in (0.2, 0.9, 2.0):
        assert F.evaluate("3.44", nu=1.0, eta=eta) == pytest.approx(abs(np.sin(2 * eta)))
        assert F.evaluate("3.46", chi=0.0, nu=0.3, eta=eta) == pytest.approx(2 * eta)


@pytest.mark.parametrize("eta", [0.1, 0.6, 1.3, 2.2])
def test_antipodal_anchor_points(eta):
    fam = xxz_family(F.plus_minus_coeffs(0.0), 1.0, 0.7, 0.0)
    oracle = concurrence_pure_2qubit(fam.state(eta=eta, kappa=0.0)).value
    assert F.evaluate("3.42", chi=0.0, nu=0.7, eta=eta) == pytest.approx(oracle, abs=1e-10)
    assert F.evaluate("3.43", eta=eta) == pytest.approx(oracle, abs=1e-10)
    fam = xxz_family(F.plus_minus_coeffs(np.pi / 2), 1.0, 1.0, 0.0)
    oracle = concurrence_pure_2qubit(fam.state(eta=eta, kappa=0.0)).value
    assert F.evaluate("3.42", chi=np.pi / 2, nu=1.0, eta=eta) == pytest.approx(oracle, abs=1e-10)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.0])
def test_equatorial_form_reaches_one(nu):
    eta = np.pi / (2 * (nu + 1))
    assert F.evaluate("3.44", nu=nu, eta=eta) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("s", [0.5, 1.0, 1.5])
def test_i_concurrence_examples(s):
    assert i_concurrence(ising_spin_s_closed(2, s, 1.0, 0.3, 0.0)).value == pytest.approx(0.0, abs=1e-7)
    assert i_concurrence_short_time(s, 0.3, 0.0) == 0.0
    assert i_concurrence_short_time(s, 0.3, np.pi / 2) == pytest.approx(2 * 0.3 * s)
    assert F.evaluate("3.104", s=s, eta_max=0.3) == pytest.approx(2 * 0.3 * s)


def test_small_time_spin_half_pair():
    eta = 1e-4
    value = i_concurrence(ising_spin_s_closed(2, 0.5, np.pi / 2, 0.0, eta)).value
    assert value == pytest.approx(eta, rel=1e-6)


@pytest.mark.parametrize("eta, tol", [(1e-2, 2e-2), (1e-3, 2e-3), (1e-4, 2e-4)])
def test_short_time_ratio_tends_to_one(eta, tol):
    exact = i_concurrence(ising_spin_s_closed(2, 1.0, 1.0, 0.0, eta)).value
    assert abs(exact / i_concurrence_short_time(1.0, eta, 1.0) - 1) < tol


def test_i_concurrence_needs_two_sites():
    with pytest.raises(DomainError):
        i_concurrence(coherent_state(BasisDescriptor(3, 0.5), 1.0, 0.0))


seeds = st.integers(0, 2**31 - 1)


@given(seeds, st.floats(0, 3), st.floats(0, 6), st.floats(0, 6))
def test_xxz_concurrence_ignores_field_angle(seed, eta, k1, k2):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    fam = xxz_family(c / np.linalg.norm(c), 1.0, rng.uniform(-2, 2), 0.5)
    a = concurrence_pure_2qubit(fam.state(eta=eta, kappa=k1)).value
    b = concurrence_pure_2qubit(fam.state(eta=eta, kappa=k2)).value
    assert abs(a - b) < 1e-10


@given(seeds, st.sampled_from([0.5, 1.0, 1.5, 2.0]))
def test_i_concurrence_site_symmetry(seed, s):
    rng = np.random.default_rng(seed)
    basis = BasisDescriptor(2, s)
    psi = PureState(basis, rng.normal(size=basis.dimension) + 1j * rng.normal(size=basis.dimension), normalize=True)
    assert abs(i_concurrence(psi, 1).value - i_concurrence(psi, 2).value) < 1e-10


@given(seeds)
def test_concurrence_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    psi = PureState(QUBITS, rng.normal(size=4) + 1j * rng.normal(size=4), normalize=True)
    moved = PureState(QUBITS, np.kron(_su2(rng), _su2(rng)) @ psi.amplitudes)
    assert abs(concurrence_pure_2qubit(psi).value - concurrence_pure_2qubit(moved).value) < 1e-10


@given(seeds)
def test_mixed_state_recipe_reduces_to_pure_formula(seed):
    rng = np.random.default_rng(seed)
    psi = PureState(QUBITS, rng.normal(size=4) + 1j * rng.normal(size=4), normalize=True)
    rho = DensityMatrix(np.outer(psi.amplitudes, psi.amplitudes.conj()))
    assert abs(wootters_concurrence(rho) - concurrence_pure_2qubit(psi).value) < 1e-7


def test_pair_equals_wootters_and_i_concurrence():
    psi = ising_qubit_closed(2, 1.1, 0.2, 0.9)
    assert i_concurrence(psi).value == pytest.approx(concurrence_pure_2qubit(psi).value, abs=1e-12)
