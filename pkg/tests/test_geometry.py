from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfold import formulas as F
from spinfold.calibration import fit_metric_scale
from spinfold.errors import DomainError
from spinfold.evolution import EvolvedFamily, ising_qubit_family, ising_spin_s_family, xxz_family
from spinfold.geometry import (
    affine_pullback,
    closed_metric_fn,
    curvature_closed,
    curvature_field,
    euler_characteristic,
    euler_from_metric,
    fs_metric_affine,
    gauss_curvature,
    loop_connection_integral,
    metric_closed,
    qgt_numeric,
)


def sphere(r):
    return lambda u, v: (r * r + 0 * u, 0 * u, (r * np.sin(u)) ** 2 + 0 * v)


def test_constant_family_has_zero_metric():
    fam = EvolvedFamily("const", None, ("u", "v"), lambda u, v: np.array([1.0, 0.0]), {}, {})
    patch, conn = qgt_numeric(fam, {"u": 0.3, "v": 0.1})
    assert (patch.g_uu, patch.g_uv, patch.g_vv) == (0, 0, 0)
    assert conn.beta_u == 0


@pytest.mark.parametrize("eta", [0.4, 1.2, 2.5])
def test_bloch_sphere_metric(eta):
    patch, _ = qgt_numeric(ising_qubit_family(1), {"eta": eta, "phi": 0.3}, chart=("eta", "phi"))
    assert patch.g_uu == pytest.approx(0.25, abs=1e-9)
    assert patch.g_vv == pytest.approx(0.25 * np.sin(eta) ** 2, abs=1e-9)
    assert patch.g_uv == pytest.approx(0.0, abs=1e-9)


def test_collective_pair_time_metric():
    patch, _ = qgt_numeric(ising_qubit_family(2), {"eta": np.pi / 2, "kappa": 0.7}, chart=("kappa",))
    assert patch.g_uu == pytest.approx(0.25, abs=1e-9)


def test_step_size_domain():
    with pytest.raises(DomainError):
        qgt_numeric(ising_qubit_family(2), {"eta": 1.0}, h=1e-2)


def test_affine_metric_examples():
    assert fs_metric_affine([0])[0, 0] == pytest.approx(1.0)
    assert fs_metric_affine([1])[0, 0] == pytest.approx(0.25)
    with pytest.raises(DomainError):
        fs_metric_affine(np.zeros(9))


def test_affine_pullback_matches_qgt_on_xxz_grid():
    c = np.array([0.3, 0.5 + 0.2j, -0.4, 0.6])
    fam = xxz_family(c / np.linalg.norm(c), 1.0, 0.7, 0.2)
    ratios = []
    for eta in np.linspace(0.2, 2.8, 5):
        for kappa in np.linspace(0.1, 2.5, 5):
            a = affine_pullback(fam, {"eta": eta, "kappa": kappa}).matrix
            q = qgt_numeric(fam, {"eta": eta, "kappa": kappa})[0].matrix
            ratios.append(np.sum(a * q) / np.sum(q * q))
            assert np.allclose(a, ratios[-1] * q, atol=1e-8)
    assert np.ptp(ratios) < 1e-6


def test_printed_metric_examples():
    m = metric_closed("4.27", {"N": 2}, {"eta": np.pi / 2, "kappa": 0.0})
    assert (m.g_uu, m.g_vv) == pytest.approx((0.5, 0.25))
    assert m.source == "closed_form(4.27)"
    m = metric_closed("4.50", {}, {"Cr": 0.5, "kappa": 0.0})
    assert (m.g_uu, m.g_vv) == pytest.approx((0.5, 3 / 16))
    for N, s in [(2, 0.5), (3, 1.0), (4, 1.5)]:
        m = metric_closed("4.61", {"N": N, "s": s}, {"kappa": np.pi / 2, "eta": 0.2})
        assert m.g_vv == pytest.approx(0.5 * N * (N - 1) * s * s)
    with pytest.raises(DomainError):
        metric_closed("9.99", {}, {})


def test_printed_qubit_metric_agrees_with_qgt_at_equator():
    patch, _ = qgt_numeric(ising_qubit_family(2), {"eta": np.pi / 2, "kappa": 0.4})
    assert patch.g_uu == pytest.approx(0.5, abs=1e-9)
    assert patch.g_vv == pytest.approx(0.25, abs=1e-9)


def test_curvature_examples():
    for N in (2, 3, 5):
        r = np.sqrt(N) / 2
        assert gauss_curvature(sphere(r), {"u": 1.0, "v": 0.2}).K == pytest.approx(4 / N, rel=1e-6)
    flat = lambda u, v: (1 + 0 * u, 0 * u, 1 + 0 * u)
    assert gauss_curvature(flat, {"u": 0.5, "v": 0.5}).K == pytest.approx(0.0, abs=1e-9)
    closed_fd = gauss_curvature(closed_metric_fn("4.27", {"N": 2}), {"eta": 1.0, "kappa": 0.2}, chart=("eta", "kappa")).K
    assert closed_fd == pytest.approx(F.evaluate("4.30", N=2, eta=1.0), rel=1e-4)


def test_printed_curvature_values():
    top = curvature_closed("4.30", {"N": 2}, {"eta": 0.0})
    assert top.K == 5.0
    assert not top.valid
    assert curvature_closed("4.30", {"N": 2}, {"eta": np.pi / 2}).K == pytest.approx(0.0, abs=1e-15)
    assert F.evaluate("4.83", s=0.5) == 5.0


def test_degenerate_metric_is_invalid():
    bad = lambda u, v: (1 + 0 * u, 0 * u, 0 * u)
    assert not gauss_curvature(bad, {"u": 0.5, "v": 0.5}).valid
    assert not gauss_curvature(sphere(1.0), {"u": 5e-4, "v": 0.1}, chart=("u", "v"), polar="u").valid


@pytest.mark.parametrize("N", [2, 3, 4])
def test_qubit_manifold_is_a_sphere(N):
    res = euler_characteristic("4.27", {"N": N})
    assert res.chi_rounded == 2
    assert abs(res.chi - 2) < 0.05


@pytest.mark.parametrize("N, s", [(2, 1.0), (3, 0.5)])
def test_spin_manifold_is_a_sphere(N, s):
    res = euler_characteristic("4.61", {"N": N, "s": s})
    assert res.chi_rounded == 2
    assert abs(res.chi - 2) < 0.05


def test_round_sphere_has_no_defect():
    res = euler_from_metric(sphere(0.7), 2 * np.pi)
    assert abs(res.defect_sum) < 1e-5
    assert res.bulk_integral / (2 * np.pi) == pytest.approx(2.0, abs=1e-3)


def test_euler_grid_minimum():
    with pytest.raises(DomainError):
        euler_characteristic("4.27", {"N": 2}, n=32)


@pytest.mark.parametrize("fid", ["4.22", "4.27", "4.48", "4.61"])
def test_single_metric_constant_per_family(fid):
    scale = fit_metric_scale(fid)
    assert scale.single_constant
    assert scale.max_relative_deviation < 1e-3


def test_xxz_metric_constant_is_reported():
    scale = fit_metric_scale("4.7")
    assert np.isfinite(scale.c) and np.isfinite(scale.max_relative_deviation)


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
def test_sphere_curvature_is_inverse_square_radius(r):
    for u in (0.4, 1.3, 2.5):
        assert gauss_curvature(sphere(r), {"u": u, "v": 0.0}).K == pytest.approx(1 / r**2, rel=1e-5)


@given(st.floats(0.1, 10), st.floats(0.3, 2.8), st.floats(0, 6))
def test_curvature_scale_covariance(c, u, v):
    base = closed_metric_fn("4.27", {"N": 3})
    scaled = lambda a, b: tuple(c * x for x in base(a, b))
    k1 = curvature_field(base, u, v)
    k2 = curvature_field(scaled, u, v)
    assert float(k2) == pytest.approx(float(k1) / c, rel=1e-6, abs=1e-9)


@given(st.floats(0.1, 3.0), st.floats(0.05, 3.0), st.floats(0, 6.2))
def test_qgt_is_positive_semidefinite(kappa, eta, phi):
    fam = ising_spin_s_family(2, 1.0)
    patch, _ = qgt_numeric(fam, {"kappa": kappa, "eta": eta, "phi": phi})
    assert patch.is_psd


@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
def test_loop_connection_is_gauge_invariant(a1, a2, a3):
    base = ising_qubit_family(3)
    alpha = lambda eta, kappa: a1 * eta + a2 * eta * kappa + a3 * kappa**2
    gauged = EvolvedFamily(
        "gauged", base.spec, base.coords,
        lambda eta, phi, kappa: np.exp(1j * alpha(eta, kappa)) * base.vector_fn(eta, phi, kappa),
        base.time_velocity, base.defaults,
    )
    loop = lambda s: {"eta": 1.0 + 0.2 * np.cos(2 * np.pi * s), "phi": 0.0, "kappa": 0.5 + 0.2 * np.sin(2 * np.pi * s)}
    i0 = loop_connection_integral(base, loop, samples=200)
    i1 = loop_connection_integral(gauged, loop, samples=200)
    assert abs(i1 - i0) < 1e-6
