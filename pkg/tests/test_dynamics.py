from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfold import formulas as F
from spinfold.calibration import verdict_for
from spinfold.dynamics import (
    brachistochrone,
    energy_uncertainty,
    geodesic_distance,
    optimal_time_vs_entanglement,
    speed,
    speed_closed,
)
from spinfold.errors import DomainError
from spinfold.evolution import ising_qubit_family, ising_spin_s_family, xxz_family
from spinfold.geometry import time_metric
from spinfold.models import coherent_state, pairwise_ising_spec, xxz_spec
from spinfold.statespace import BasisDescriptor, PureState

QUBITS = BasisDescriptor(2, 0.5)


def test_eigenstate_has_no_uncertainty():
    spec = xxz_spec(1.0, 0.3, 0.5)
    v2 = PureState(QUBITS, np.array([0, 1, 1, 0]) / np.sqrt(2))
    assert energy_uncertainty(v2, spec) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("varphi, gamma", [(0.0, 0.0), (1.1, 2.3)])
def test_stationary_printed_state(varphi, gamma):
    psi = PureState(QUBITS, F.evaluate("3.47", eta=0.0, varphi=varphi, gamma=gamma))
    assert energy_uncertainty(psi, xxz_spec(1.0, -1.0, 0.0)) == pytest.approx(0.0, abs=1e-12)


def test_pairwise_pair_uncertainty():
    psi = coherent_state(QUBITS, np.pi / 2, 0.0)
    assert energy_uncertainty(psi, pairwise_ising_spec(2, 0.5, 1.4)) == pytest.approx(0.7)


def test_speed_examples():
    fam = ising_qubit_family(2, 1.3)
    v = speed(fam, {"eta": np.pi / 2, "kappa": 0.2}, "kappa")
    assert v.v == pytest.approx(0.65, abs=1e-8)
    assert speed(fam, {"eta": np.pi / 2}, convention="paper").v == pytest.approx(1.3, abs=1e-8)
    assert speed(ising_spin_s_family(3, 1.0), {"kappa": 0.0, "eta": 0.4}).v == pytest.approx(0.0, abs=1e-8)
    eig = xxz_family(np.array([1, 0, 0, 0]), 1.0, 0.4, 0.3)
    assert speed(eig, {"eta": 0.2, "kappa": 0.1}).v == pytest.approx(0.0, abs=1e-8)
    with pytest.raises(DomainError):
        speed(fam, {"eta": 1.0}, "eta")
    with pytest.raises(DomainError):
        speed(fam, {"eta": 1.0}, convention="other")


def test_printed_speed_values():
    assert speed_closed("3.52", {"C": 0.0}) == pytest.approx(np.sqrt(3) / 2, abs=1e-12)
    assert speed_closed("3.34", {"J": 1.0, "eta": 3 * np.pi / 4}) == pytest.approx(np.sqrt(5), abs=1e-12)
    assert speed_closed("3.85", {"N": 2, "s": 0.5, "J": 1.0, "kappa": np.pi / 2}) == pytest.approx(0.5)


def test_distance_examples():
    fam = ising_qubit_family(3)
    assert geodesic_distance(fam, {"eta": 1.0}, (0.4, 0.4)) == 0.0
    assert abs(geodesic_distance("3.53", {"C": 0.0}) - 3.42) < 0.01
    for N, s, eta in [(2, 0.5, 0.7), (3, 1.0, 1.2), (4, 1.5, 0.3)]:
        assert geodesic_distance("3.91", {"N": N, "s": s, "eta": eta}) == pytest.approx(s * np.sqrt(eta**2 * N * (N - 1) / 2))


def test_sinusoidal_brachistochrone():
    for J in (1.0, 2.5):
        rep = brachistochrone("xxz-sinusoidal", {"J": J})
        assert rep.T_opt == pytest.approx(3 * np.pi / (8 * J), abs=1e-9)
        assert rep.T_opt == pytest.approx(rep.s_min / rep.v_max, abs=1e-10)


def test_qubit_pair_printed_time():
    assert F.evaluate("3.67", N=2, J=1.0) == 1.0
    rep = brachistochrone("ising-qubit", {"N": 2, "J": 1.0})
    assert rep.printed_T == 1.0


@pytest.mark.parametrize("t", [0.3, 0.7, 1.9])
def test_spin_half_pair_optimal_time_is_elapsed_time(t):
    rep = brachistochrone("ising-spin-s", {"N": 2, "s": 0.5, "J": 1.0, "eta": t})
    assert rep.printed_T == pytest.approx(t, abs=1e-12)
    assert rep.T_opt == pytest.approx(t, abs=1e-9)


def test_unknown_brachistochrone_family():
    with pytest.raises(DomainError):
        brachistochrone("nope")


def test_entanglement_parametrized_times():
    assert optimal_time_vs_entanglement("3.74", {"J": 1.0, "kappa": 1.0}, 0.0) == 0.0
    assert abs(optimal_time_vs_entanglement("tau-tilde", {}, 0.0) - 3.95) < 0.01
    for fid in ("3.107-printed", "3.107-derived"):
        assert optimal_time_vs_entanglement(fid, {"s": 1.0, "J": 1.0, "eta": 0.5, "eta_pmax": 0.5}, 0.0) == 0.0
    with pytest.raises(DomainError):
        optimal_time_vs_entanglement("3.74", {"J": 1.0, "kappa": 0.3}, 0.9)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_qubit_argmax_matches_printed(N):
    rep = brachistochrone("ising-qubit", {"N": N})
    assert rep.details["sin_eta"] ** 2 == pytest.approx(rep.printed_argmax**2, abs=1e-8)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("s", [0.5, 1.0, 1.5])
def test_spin_argmax_matches_printed(N, s):
    rep = brachistochrone("ising-spin-s", {"N": N, "s": s})
    assert rep.details["sin_kappa"] ** 2 == pytest.approx(rep.printed_argmax**2, abs=1e-8)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_spin_half_max_speed_against_qubit_form(N):
    spin_form = F.evaluate("3.89", N=N, s=0.5, J=1.0)
    numeric = brachistochrone("ising-qubit", {"N": N}).v_max
    assert spin_form == pytest.approx(numeric, rel=1e-8)
    if abs(spin_form - F.evaluate("3.64", N=N, J=1.0)) > 1e-10:
        assert verdict_for("3.64").kind != "consistent"


def _families():
    c = np.array([0.4, 0.3 + 0.5j, -0.2, 0.6])
    return [
        (xxz_family(c / np.linalg.norm(c), 1.1, 0.6, 0.4), lambda r: {"eta": r.uniform(0, 3), "kappa": r.uniform(0, 3)}),
        (ising_qubit_family(3, 0.9), lambda r: {"eta": r.uniform(0.1, 3), "phi": r.uniform(0, 6), "kappa": r.uniform(0, 6)}),
        (ising_spin_s_family(2, 1.0, 1.2), lambda r: {"kappa": r.uniform(0.1, 3), "phi": r.uniform(0, 6), "eta": r.uniform(0, 6)}),
    ]


@given(st.integers(0, 2**31 - 1), st.sampled_from([0, 1, 2]))
def test_time_metric_equals_energy_uncertainty(seed, which):
    fam, draw = _families()[which]
    p = draw(np.random.default_rng(seed))
    dE = energy_uncertainty(fam.state(**p), fam.spec)
    assert abs(np.sqrt(max(time_metric(fam, p), 0.0)) - dE) < 1e-6


@pytest.mark.parametrize("which", [0, 1, 2])
def test_distance_is_linear_in_time(which):
    fam, draw = _families()[which]
    p = draw(np.random.default_rng(3))
    ts = np.linspace(0.1, 2.0, 10)
    d = np.array([geodesic_distance(fam, p, (0.0, t)) for t in ts])
    slope = d[-1] / ts[-1]
    assert np.max(np.abs(d - slope * ts)) < 1e-9
