import json

import pytest

from weylbundles.cli import main
from weylbundles.config import config_from_dict, load_config, poly_from_roots, preset
from weylbundles.poly import UniPoly, frac


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines() if line]
    return code, records, captured.err


# -- configuration ------------------------------------------------------

def test_poly_from_roots_normalization():
    assert poly_from_roots([["0", 2], ["1", 1]]) == UniPoly({2: 1, 3: -1})
    assert poly_from_roots([["0", 1], ["1", 1]]) == UniPoly({1: 1, 2: -1})


def test_presets():
    sphere = preset("sphere")
    assert sphere.p == UniPoly({1: 1, 2: -1})
    assert sphere.q == 4 and sphere.zetas == (frac(1),)

    lens = preset("lens(1,1,2)")
    assert lens.p == sphere.p and lens.q_plus == 2

    lens2 = preset("lens(2,1,2)")
    assert lens2.p == UniPoly({2: 1, 3: -1})
    assert lens2.ambient_algebra().k == 2

    lens22 = preset("lens(2,2,2)")
    assert lens22.zetas == (frac(1), frac(4))
    assert lens22.q == 16 and lens22.q_plus == 4

    kle = preset("kleinian-demo")
    assert kle.p == UniPoly({2: 2, 3: -3, 4: 1})
    assert kle.zetas == (frac(1), frac(2))

    with pytest.raises(ValueError):
        preset("torus")


def test_config_from_dict_and_file(tmp_path):
    data = {
        "p": {"roots": [["0", 1], ["1", 1]]},
        "q_plus": "2", "q_minus": "2", "r": "0", "zeta": "1",
    }
    cfg = config_from_dict(data)
    assert cfg.p == preset("sphere").p and cfg.zetas == (frac(1),)

    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({
        "p": {"coeffs": ["0", "0", "2", "-3", "1"]},
        "q_plus": "3", "q_minus": "1", "zetas": ["1", "2"],
    }))
    cfg = load_config(str(path))
    assert cfg.p == preset("kleinian-demo").p
    assert cfg.zetas == (frac(1), frac(2))

    with pytest.raises(ValueError):
        config_from_dict({"p": {}, "q_plus": "2", "q_minus": "2"})


# -- commands ------------------------------------------------------------

def test_normalize_gwa(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "normalize", "y*x")
    assert code == 0
    assert records[0]["algebra"] == "gwa"
    assert records[0]["result"] == "(z - z^2)"


def test_normalize_ambient(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "normalize", "xp*xm")
    assert code == 0
    assert records[0]["algebra"] == "ambient"
    assert records[0]["result"] == "(1 - zp*zm)"


def test_normalize_mixed_generators_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "normalize", "x*zp")
    assert code == 2 and "generators" in err


def test_mul(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "mul", "z", "x")
    assert code == 0
    assert records[0]["result"] == "x*(1/4*z)"


def test_connection_command(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "connection", "--n", "2")
    assert code == 0
    rec = records[0]
    assert rec["evaluates_to_one"] and rec["recursions_agree"]
    assert len(rec["pairs"]) == 4


def test_idempotent_command(capsys):
    code, records, _ = run_cli(capsys, "--preset", "lens(2,1,2)", "idempotent", "--n", "1")
    assert code == 0
    rec = records[0]
    assert rec["size"] == 2 and rec["squares_to_itself"]


def test_chern_command_defaults_to_preset_roots(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "chern", "--n", "2")
    assert code == 0
    assert records[0] == {
        "check": "chern", "params": {"n": 2, "zeta": "1"},
        "expected": "-2", "got": "-2", "pass": True,
    }


def test_chern_command_all_roots(capsys):
    code, records, _ = run_cli(capsys, "--preset", "kleinian-demo", "chern", "--n", "-1")
    assert code == 0
    assert [r["params"]["zeta"] for r in records] == ["1", "2"]
    assert all(r["got"] == "1" for r in records)


def test_chern_rejects_non_root(capsys):
    code, _, err = run_cli(capsys, "--preset", "sphere", "chern", "--n", "1",
                           "--zeta", "7")
    assert code == 2 and "root" in err


def test_trace_check_command(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "trace-check",
                               "--bound", "2", "--pairs", "10")
    assert code == 0
    assert records[-1]["check"] == "trace-axioms" and records[-1]["pass"]


def test_grading_check_veronese(capsys):
    code, records, _ = run_cli(capsys, "--preset", "lens(2,1,2)", "grading-check",
                               "--degree", "1", "--bound", "4", "--veronese", "2")
    assert code == 0
    rec = records[0]
    assert rec["found"] and rec["verified"]


def test_grading_check_none_within_bound(capsys):
    code, records, _ = run_cli(capsys, "--preset", "lens(2,1,2)", "grading-check",
                               "--degree", "1", "--bound", "8")
    assert code == 0
    rec = records[0]
    assert rec["found"] is False and "none within bound 8" in rec["note"]


def test_grading_check_quotient(capsys):
    code, records, _ = run_cli(capsys, "--preset", "lens(2,1,2)", "grading-check",
                               "--degree", "1", "--bound", "6", "--quotient", "2")
    assert code == 0
    assert records[0]["found"] is False


def test_rep_check(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "rep-check",
                               "--zeta", "1", "--dim", "12")
    assert code == 0
    trunc = records[-1]
    assert trunc["check"] == "truncated-rep" and trunc["pass"]
    assert trunc["params"]["q"] == "1/4"


def test_text_mode(capsys):
    code = main(["--preset", "sphere", "--text", "chern", "--n", "1"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("PASS")


def test_verify_all_exits_zero(capsys):
    code, records, _ = run_cli(capsys, "--preset", "sphere", "verify-all")
    assert code == 0
    summaries = [r for r in records if "criterion" in r]
    assert len(summaries) == 10 and all(r["pass"] for r in summaries)
    assert records[-1] == {"command": "verify-all", "pass": True}


def test_unknown_preset_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "--preset", "nope", "normalize", "z")
    assert code == 2 and "unknown preset" in err


def test_parse_error_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "normalize", "x^-1")
    assert code == 2 and "exponent" in err
