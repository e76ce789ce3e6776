import json

from qmod.cli import main


def _run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def _run_json(capsys, *argv):
    rc, out, err = _run(capsys, *argv, "--format", "json")
    return rc, json.loads(out), err


def test_no_arguments_is_a_usage_error(capsys):
    rc, _, _ = _run(capsys)
    assert rc == 2


def test_expected_dim_json_payload(capsys):
    rc, payload, _ = _run_json(
        capsys, "expected-dim", "--g", "15", "--r", "6", "--d", "22", "--k", "4")
    assert rc == 0
    assert payload == {"g": 15, "r": 6, "d": 22, "k": 4, "q": -9}


def test_harris_tu_table_output(capsys):
    rc, out, _ = _run(capsys, "harris-tu", "--e", "6", "--k", "4")
    assert rc == 0
    assert out.strip() == "35"


def test_quad_class_json_payload(capsys):
    rc, payload, _ = _run_json(
        capsys, "quad-class", "--g", "11", "--n", "4", "--k", "4")
    assert rc == 0
    assert payload["alpha"] == "294"
    assert payload["unscaled"]["lambda"] == "47/7"
    assert payload["class"]["g"] == 11


def test_certificate_default_multipliers_pass(capsys):
    rc, payload, _ = _run_json(capsys, "certificate")
    assert rc == 0
    assert payload["passed"] is True
    assert payload["lambda_residual"] == "0"


def test_certificate_off_line_multiplier_fails(capsys):
    rc, payload, _ = _run_json(capsys, "certificate", "--z", "1/5")
    assert rc == 1
    assert payload["passed"] is False


def test_certificate_solve_recovers_defaults(capsys):
    rc, payload, _ = _run_json(capsys, "certificate", "--solve")
    assert rc == 0
    assert payload["multipliers"]["x"] == "25/297"
    assert payload["multipliers"]["y"] == "2/297"


def test_composite_prime_is_rejected(capsys):
    rc, _, err = _run(capsys, "rho", "--g", "15", "--r", "6", "--d", "20",
                      "--prime", "16")
    assert rc == 2
    assert "prime" in err


def test_prime_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("QMOD_PRIME", "2147483647")
    rc, payload, _ = _run_json(capsys, "verify", "05-certificate")
    assert rc == 0
    assert payload["prime"] == 2147483647


def test_garbage_prime_environment_is_rejected(capsys, monkeypatch):
    monkeypatch.setenv("QMOD_PRIME", "twelve")
    rc, _, err = _run(capsys, "rho", "--g", "15", "--r", "6", "--d", "20")
    assert rc == 2
    assert "QMOD_PRIME" in err


def test_explicit_prime_beats_environment(capsys, monkeypatch):
    monkeypatch.setenv("QMOD_PRIME", "twelve")
    rc, _, _ = _run(capsys, "rho", "--g", "15", "--r", "6", "--d", "20",
                    "--prime", "65537")
    assert rc == 0


def test_zero_repeat_is_rejected(capsys):
    rc, _, err = _run(capsys, "genus4", "--repeat", "0")
    assert rc == 2
    assert "repeat" in err


def test_verify_unknown_check_is_a_usage_error(capsys):
    rc, _, err = _run(capsys, "verify", "frobnicate")
    assert rc == 2
    assert "unknown check" in err


def test_verify_subset_passes(capsys):
    rc, payload, _ = _run_json(capsys, "verify", "02-harris-tu", "05-certificate")
    assert rc == 0
    names = [r["check"] for r in payload["results"]]
    assert names == ["02-harris-tu", "05-certificate"]
    assert all(r["pass"] for r in payload["results"])


def test_secant_requires_both_parameters(capsys):
    rc, _, err = _run(capsys, "secant", "--r", "4", "--t1", "2")
    assert rc == 2
    assert "--t2" in err


def test_secant_explicit_chord(capsys):
    rc, payload, _ = _run_json(capsys, "secant", "--r", "4", "--t1", "2",
                               "--t2", "9")
    assert rc == 0
    assert payload["codims"] == [1]


def test_small_prime_sampling_is_a_configuration_error(capsys):
    rc, _, err = _run(capsys, "genus5-net", "--prime", "101")
    assert rc == 2
    assert "error" in err


def test_json_output_is_deterministic(capsys):
    first = _run_json(capsys, "quad-class", "--g", "11", "--n", "4", "--k", "4")
    second = _run_json(capsys, "quad-class", "--g", "11", "--n", "4", "--k", "4")
    assert first == second


def test_rnc_i2_matches_expected_dimension(capsys):
    rc, payload, _ = _run_json(capsys, "rnc-i2", "--r", "5")
    assert rc == 0
    assert payload["dim"] == payload["expected"] == 10


def test_rank3_family_dimension(capsys):
    rc, payload, _ = _run_json(capsys, "rank3-family", "--r", "5", "--x", "1")
    assert rc == 0
    assert payload["dim"] == payload["expected"] == 3


def test_blowup_verify_seed_one_passes(capsys):
    rc, payload, _ = _run_json(capsys, "blowup-verify", "--seed", "1")
    assert rc == 0
    assert payload["passed"] is True


def test_enumerate_cases_count(capsys):
    rc, payload, _ = _run_json(capsys, "enumerate-cases", "--g-max", "16")
    assert rc == 0
    assert payload["count"] == 11
    assert [11, 4, 4] in payload["cases"]
