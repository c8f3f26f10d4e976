"""Rendering (text/LaTeX/JSON), JSON round-trip, CLI contract and goldens."""

import json
import pathlib
import random
import subprocess
import sys

import pytest

from qpoly.cli import main
from qpoly.connection import BetaPolynomial
from qpoly.families import CosPolynomial, ZPolynomial, q_hermite
from qpoly.field import IntPoly, RationalFunction as RF
from qpoly.render import (
    latex_beta,
    latex_qbinom,
    latex_rational,
    latex_zpoly,
    parse_polynomial_json,
    render_polynomial_json,
)
from qpoly.verify import VerificationReport, CheckResult

GOLDEN = pathlib.Path(__file__).parent / "golden"


# ---------------------------------------------------------------------------
# LaTeX notation rules
# ---------------------------------------------------------------------------

def test_latex_negative_half_power():
    assert latex_rational(RF.s_power(-45)) == "q^{-45/2}"


def test_latex_beta_square():
    b1 = BetaPolynomial.gen(1)
    assert latex_beta(b1 * b1) == r"[\lambda]_{q}^{2}"
    assert latex_beta(BetaPolynomial.gen(3)) == r"[\lambda]_{q^{3}}"


def test_latex_qbinom():
    assert latex_qbinom(3, 1) == r"\Big[{3 \atop 1}\Big]_{q}"


def test_latex_fraction_form():
    f = (RF.one() - RF.q()) / ((RF.one() + RF.q()) * 2)
    assert latex_rational(f) == r"\frac{-q + 1}{2\,q + 2}"


def test_latex_zpoly_hermite1():
    assert latex_zpoly(q_hermite(1)) == r"2\,q^{-1/2}\,z"


# ---------------------------------------------------------------------------
# JSON schema and round trip
# ---------------------------------------------------------------------------

def test_json_hermite1_entry():
    doc = json.loads(render_polynomial_json(q_hermite(1), "hermite", 1, total_check=True))
    assert doc["family"] == "hermite" and doc["n"] == 1
    assert doc["total_check"] == "pass"
    assert doc["coefficients"] == [
        {"basis": "z", "degree_or_m": 1, "num": "2", "den": "q^{1/2}"}
    ]


def _random_rf(rng):
    def poly():
        return IntPoly({(rng.randint(0, 3), rng.randint(0, 1)): rng.randint(-5, 5)
                        for _ in range(rng.randint(1, 3))})
    num = poly()
    den = poly()
    while den.is_zero():
        den = poly()
    return RF(num, den)


@pytest.mark.parametrize("cls,basis", [(ZPolynomial, "z"), (CosPolynomial, "cos")])
def test_json_round_trip_randomized(cls, basis):
    rng = random.Random(hash(basis) & 0xFFFF)
    for _ in range(40):
        poly = cls({rng.randint(0, 6): _random_rf(rng) for _ in range(rng.randint(0, 4))})
        rendered = render_polynomial_json(poly, "any", 3, k=2, total_check=True)
        parsed, meta = parse_polynomial_json(rendered)
        assert parsed == poly
        assert meta["n"] == 3 and meta["k"] == 2
        # bit-exact: re-rendering the parsed object reproduces the string
        assert render_polynomial_json(parsed, "any", 3, k=2, total_check=True) == rendered


# ---------------------------------------------------------------------------
# CLI: exit codes, goldens, stability
# ---------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_eval_hermite_golden(capsys):
    code, out = run_cli(capsys, "eval", "hermite", "--n", "5")
    assert code == 0
    assert out == (GOLDEN / "eval_hermite_n5.txt").read_text()
    code2, out2 = run_cli(capsys, "eval", "hermite", "--n", "5")
    assert out2 == out  # byte-stable across runs


def test_cli_eval_laguerre_golden(capsys):
    code, out = run_cli(capsys, "eval", "laguerre", "--n", "3", "--k", "3")
    assert code == 0
    assert out == (GOLDEN / "eval_laguerre_n3_k3.txt").read_text()


def test_cli_connect_gegenbauer_golden(capsys):
    chunks = []
    for n in range(6):
        code, out = run_cli(capsys, "connect", "gegenbauer", "--n", str(n))
        assert code == 0
        chunks.append(f"== n={n}\n" + out)
    assert "".join(chunks) == (GOLDEN / "connect_gegenbauer_n0_5.txt").read_text()


def test_cli_connect_hermite_rows(capsys):
    code, out = run_cli(capsys, "connect", "hermite", "--n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len([l for l in lines if "|" in l]) == 7
    assert lines[-1].endswith("pass")


def test_cli_connect_laguerre_rows(capsys):
    code, out = run_cli(capsys, "connect", "laguerre", "--n", "3", "--k", "3",
                        "--aux", "0,0,0")
    assert code == 0
    lines = out.strip().splitlines()
    assert len([l for l in lines if "|" in l]) == 18
    assert lines[-1].endswith("pass")


def test_cli_eval_classical(capsys):
    code, out = run_cli(capsys, "eval", "classical-hermite", "--n", "0")
    assert code == 0 and out.strip() == "1"
    code, out = run_cli(capsys, "eval", "classical-gegenbauer", "--n", "2")
    assert code == 0 and "cos(2*theta)" in out


def test_cli_eval_json_total_check(capsys):
    code, out = run_cli(capsys, "eval", "gegenbauer", "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["total_check"] == "pass"
    parsed, _ = parse_polynomial_json(out)
    from qpoly.families import q_gegenbauer_direct
    assert parsed == q_gegenbauer_direct(3)


def test_cli_q_sample(capsys):
    code, out = run_cli(capsys, "eval", "hermite", "--n", "4", "--q-sample", "7/10")
    assert code == 0
    assert "relative diff" in out


def test_cli_usage_errors():
    for argv in (["eval", "laguerre", "--n", "3"],          # missing --k
                 ["eval", "hermite", "--n", "-2"],          # negative degree
                 ["eval", "hermite", "--n", "2", "--k", "1"],   # stray --k
                 ["eval", "nosuch", "--n", "1"],            # bad family
                 ["connect", "laguerre", "--n", "1"],       # missing --k
                 ["connect", "hermite", "--n", "2", "--aux", "1"],  # stray --aux
                 ["connect", "laguerre", "--n", "2", "--k", "1", "--aux", "a,b"],
                 ["eval", "hermite", "--n", "1", "--q-sample", "x"],
                 ["eval", "hermite", "--n", "1", "--q-sample", "1"],
                 ["verify", "--suite", "bogus"],
                 ["verify", "--max-n", "-1"]):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2


def test_cli_connect_latex_and_json(capsys):
    code, out = run_cli(capsys, "connect", "laguerre", "--n", "2", "--k", "2",
                        "--format", "latex")
    assert code == 0 and out.count("% ") >= 6 and r"\," in out
    code, out = run_cli(capsys, "connect", "laguerre", "--n", "3", "--k", "3",
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["total_check"] == "pass" and len(doc["terms"]) == 18
    code, out = run_cli(capsys, "connect", "gegenbauer", "--n", "4",
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["total_check"] == "pass" and len(doc["terms"]) == 5
    code, out = run_cli(capsys, "connect", "gegenbauer", "--n", "2",
                        "--format", "latex")
    assert code == 0 and r"[\lambda]_{q^{2}}" in out


def test_cli_eval_classical_laguerre(capsys):
    code, out = run_cli(capsys, "eval", "classical-laguerre", "--n", "3", "--k", "1")
    assert code == 0 and out.strip() == "-z + 3"
    code, out = run_cli(capsys, "connect", "hermite", "--n", "0")
    assert code == 0 and "total: 1" in out


def test_cli_verify_pass(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out = run_cli(capsys, "verify", "--suite", "qexp", "--max-n", "6",
                        "--report", str(report_path))
    assert code == 0
    assert "suite qexp: PASS" in out
    doc = json.loads(report_path.read_text())
    assert doc["passed"] is True and doc["checks"]


def test_cli_verify_failure_exit_code(capsys, monkeypatch):
    failing = VerificationReport("stub", [CheckResult("x", "y", False, 0.1, "boom")])
    monkeypatch.setattr("qpoly.cli.run_suite", lambda *a, **k: failing)
    code, out = run_cli(capsys, "verify", "--suite", "qexp")
    assert code == 1
    assert "FAIL" in out


def test_cli_verify_json(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "limits", "--max-n", "3",
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "limits"
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qpoly.cli", "eval", "hermite", "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2*q^{-1/2}*z"


def test_order_env_override(capsys, monkeypatch):
    monkeypatch.setenv("QPOLY_ORDER", "15")
    code, out = run_cli(capsys, "eval", "hermite", "--n", "2")
    assert code == 0
