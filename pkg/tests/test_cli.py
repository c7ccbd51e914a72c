from __future__ import annotations

import io
import subprocess
import sys
from dataclasses import replace

import pytest

from spinfold import formulas as F
from spinfold.cli import main, parse_point, read_config


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def pairs(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line and "," not in line)


def test_figure_to_stdout_and_files(tmp_path):
    code, text = run("figure", "4.6", "--grid", "4", "--oracle")
    assert code == 0
    assert text.startswith("series,x,y,oracle\n") and len(text.splitlines()) == 13
    out, png = tmp_path / "a.csv", tmp_path / "a.png"
    code, text = run("figure", "4.2", "--grid", "3", "--out", str(out), "--png", str(png))
    assert code == 0 and text == ""
    assert out.read_text().count("\n") == 13 and png.exists()


def test_usage_errors(capsys):
    assert run("figure", "9.9")[0] == 2
    assert run("figure", "4.2", "--bogus")[0] == 2
    assert run("metric", "--model", "heisenberg")[0] == 2
    assert run("metric")[0] == 2
    assert run("metric", "--model", "xxz", "--point", "zeta=1")[0] == 2
    assert run("metric", "--model", "xxz", "--point", "eta")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("concurrence", "--model", "ising-qubit", "--N", "3")[0] == 2
    assert "error" in capsys.readouterr().err


def test_help_exits_zero():
    assert run("--help")[0] == 0


def test_calibrate(tmp_path):
    path = tmp_path / "dev.md"
    code, text = run("calibrate", "--out", str(path))
    assert code == 0
    assert f"{len(F.REGISTRY)} verdicts" in text
    assert "| 3.60 |" in path.read_text()


def test_evolve():
    code, text = run("evolve", "--model", "xxz", "--coeffs", "0.5,0.5+0.5j,0.5,0", "--nu", "0.7", "--b", "0.3", "--t", "0.8")
    assert code == 0
    p = pairs(text)
    assert float(p["residual"]) < 1e-10
    assert float(p["eta"]) == pytest.approx(1.6) and float(p["kappa"]) == pytest.approx(0.48)
    assert "index,re,im" in text


def test_metric_and_curvature():
    p = pairs(run("metric", "--model", "ising-qubit", "--N", "2", "--point", "eta=pi/2")[1])
    assert float(p["g_uu"]) == pytest.approx(0.5, abs=1e-8)
    assert float(p["g_vv"]) == pytest.approx(0.25, abs=1e-8)
    p = pairs(run("curvature", "--model", "ising-qubit", "--N", "2", "--point", "eta=1.0")[1])
    assert float(p["K"]) == pytest.approx(F.evaluate("4.30", N=2, eta=1.0), rel=1e-3)
    assert p["valid"] == "true"


def test_phase_commands():
    p = pairs(run("phase", "--model", "ising-qubit", "--N", "2", "--point", "eta=pi/2", "--t", "1.0")[1])
    assert float(p["dynamic"]) == pytest.approx(-0.5)
    assert float(p["geometric"]) + float(p["dynamic"]) == pytest.approx(float(p["unwrapped_total"]))
    p = pairs(run("phase", "--model", "ising-qubit", "--N", "2", "--point", "eta=pi/2", "--cycle", str(2 * 3.141592653589793))[1])
    assert abs(abs(float(p["aa_phase"])) - 3.141592653589793) < 1e-6


def test_concurrence_and_brachistochrone():
    p = pairs(run("concurrence", "--model", "ising-qubit", "--N", "2", "--point", "eta=pi/2,kappa=pi/2")[1])
    assert float(p["value"]) == pytest.approx(1.0)
    p = pairs(run("brachistochrone", "--model", "xxz")[1])
    assert float(p["T_opt"]) == pytest.approx(3 * 3.141592653589793 / 8)
    assert p["agrees"] == "true"
    p2 = pairs(run("brachistochrone", "--model", "ising-spin-s", "--s", "1", "--convention", "paper")[1])
    p1 = pairs(run("brachistochrone", "--model", "ising-spin-s", "--s", "1")[1])
    assert float(p2["v_max"]) == pytest.approx(2 * float(p1["v_max"]))


def test_config_file_and_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep\nmodel = ising-qubit\nN = 3\npoint = eta=pi/2\n")
    p_file = pairs(run("metric", "--config", str(cfg))[1])
    p_flag = pairs(run("metric", "--config", str(cfg), "--N", "2")[1])
    assert float(p_flag["g_uu"]) == pytest.approx(0.5, abs=1e-8)
    assert float(p_file["g_uu"]) == pytest.approx(0.75, abs=1e-8)
    assert read_config(cfg)["N"] == "3"
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert run("metric", "--config", str(bad))[0] == 2
    assert run("metric", "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_point_parser():
    assert parse_point("eta=pi/2, kappa=0.5") == {"eta": pytest.approx(1.5707963267948966), "kappa": 0.5}
    assert parse_point("") == {}


def test_report_writes_figures(tmp_path):
    code, text = run("report", "--figures-dir", str(tmp_path))
    assert code == 0, text
    assert "10/10 criteria passed" in text
    assert len(list(tmp_path.glob("figure_*.csv"))) == 16
    assert len(list(tmp_path.glob("figure_*.png"))) == 16


def test_report_fails_when_a_printed_constant_is_perturbed(monkeypatch):
    original = F.REGISTRY["3.67"]
    perturbed = replace(original, fn=lambda **kw: 1.01 * original.fn(**kw))
    monkeypatch.setitem(F.REGISTRY, "3.67", perturbed)
    code, text = run("report")
    assert code == 1
    row = next(line for line in text.splitlines() if line.startswith(" 2 "))
    assert "FAIL" in row


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spinfold", "figure", "4.2", "--grid", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "series,x,y"
    proc = subprocess.run([sys.executable, "-m", "spinfold", "figure", "--nope"], capture_output=True, text=True)
    assert proc.returncode == 2
