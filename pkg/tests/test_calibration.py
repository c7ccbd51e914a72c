from __future__ import annotations

import numpy as np
import pytest

from spinfold import formulas as F
from spinfold.acceptance import KNOWN_CONFLICTS
from spinfold.calibration import (
    Comparison,
    fit_metric_scale,
    judge,
    render_ledger,
    run_calibration,
    verdict_for,
    write_ledger,
)
from spinfold.errors import DomainError


@pytest.fixture(scope="module")
def entries():
    return run_calibration()


def test_judge_consistent():
    verdict, dev, scale = judge(Comparison([1.0, 2.0], [1.0, 2.0 + 1e-10], "x"))
    assert verdict == "consistent" and dev == pytest.approx(1e-10) and scale == 1.0


def test_judge_scale_factor():
    verdict, _, scale = judge(Comparison([2.0, 4.0, -6.0], [1.0, 2.0, -3.0], "x"))
    assert verdict == "scale-factor(2)"
    assert scale == pytest.approx(2.0)
    verdict, _, _ = judge(Comparison([2.0, 4.0], [1.0, 2.0], "x", allow_scale=False))
    assert verdict == "inconsistent"


def test_judge_inconsistent_and_nonfinite():
    assert judge(Comparison([1.0, 5.0], [1.0, 2.0], "x"))[0] == "inconsistent"
    verdict, dev, _ = judge(Comparison([np.nan], [1.0], "x"))
    assert verdict == "inconsistent" and dev == float("inf")


def test_judge_modular_modes():
    assert judge(Comparison([np.pi - 1e-12], [-np.pi + 1e-12], "x", mode="mod2pi"))[0] == "consistent"
    assert judge(Comparison([0.3 + np.pi], [0.3], "x", mode="modpi"))[0] == "consistent"
    assert judge(Comparison([0.3 + np.pi], [0.3], "x", mode="mod2pi"))[0] == "inconsistent"


def test_judge_asymptotic():
    ps = np.array([1e-1, 1e-2, 1e-3])
    oracle = np.column_stack([ps, ps])
    good = np.column_stack([ps, ps + ps**2])
    bad = np.column_stack([ps, 1.1 * ps])
    assert judge(Comparison(good, oracle, "x", mode="asymptotic", order=1))[0] == "consistent"
    assert judge(Comparison(bad, oracle, "x", mode="asymptotic", order=1))[0] == "inconsistent"


def test_every_id_has_a_verdict(entries):
    assert [e.formula_id for e in entries] == list(F.REGISTRY)
    for e in entries:
        assert e.kind in ("consistent", "scale-factor", "inconsistent")
        assert e.oracle


@pytest.mark.parametrize("fid", KNOWN_CONFLICTS)
def test_known_conflicts_are_surfaced(fid):
    e = verdict_for(fid)
    assert e.kind != "consistent"
    assert e.max_deviation > 0


def test_reference_verdicts():
    assert verdict_for("3.60").kind == "inconsistent"
    assert verdict_for("3.43").verdict == "consistent"
    assert verdict_for("3.43").max_deviation < 1e-10


def test_qubit_metric_family_uses_one_constant():
    # the printed qubit metric equals the canonical one exactly, so c = 1
    scale = fit_metric_scale("4.27")
    assert scale.single_constant
    assert scale.c == pytest.approx(1.0, abs=1e-8)
    assert verdict_for("4.27").kind in ("consistent", "scale-factor")


def test_unknown_id():
    with pytest.raises(DomainError):
        verdict_for("1.1")
    with pytest.raises(DomainError):
        fit_metric_scale("3.43")


def test_ledger_format(entries, tmp_path):
    text = render_ledger(entries[:3])
    assert "| formula id | oracle | max deviation | verdict |" in text
    assert text.count("\n| ") >= 3
    path = tmp_path / "ledger.md"
    write_ledger(path, entries)
    body = path.read_text(encoding="utf-8")
    for e in entries:
        assert f"| {e.formula_id} |" in body
    assert "## Metric scale constants" in body
    assert "\r" not in body
