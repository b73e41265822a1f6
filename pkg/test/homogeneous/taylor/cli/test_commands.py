#  Copyright 2026 homogeneous-taylor contributors.
import dataclasses
import json

import pytest

from homogeneous.taylor.cli import (
    EXIT_DOMAIN,
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    commands,
    main,
    normalize_argv,
    parse_vector,
)
from homogeneous.taylor.utils import SpecError


@pytest.fixture
def correlated_portfolio(tmp_path):
    path = tmp_path / "portfolio.json"
    path.write_text(json.dumps({"R": [[1.0, 0.5], [0.5, 1.0]], "exposures": [1.0, 1.0]}))
    return str(path)


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_normalize_argv_glues_negative_vectors():
    assert normalize_argv(["taylor", "--b", "-1,0", "--a", "1,0"]) == ["taylor", "--b=-1,0", "--a", "1,0"]
    assert normalize_argv(["risk", "--target", "-.5,2"]) == ["risk", "--target=-.5,2"]
    assert normalize_argv(["verify", "--trials", "-v"]) == ["verify", "--trials", "-v"]


def test_parse_vector():
    assert parse_vector("3,4", "--a") == [3.0, 4.0]
    assert parse_vector("-1, 0.5", "--b") == [-1.0, 0.5]
    with pytest.raises(SpecError):
        parse_vector("3,x", "--a")
    with pytest.raises(SpecError):
        parse_vector("", "--a")


def test_taylor_euclidean(capsys):
    code, report = run_json(capsys, ["taylor", "--family", "euclidean", "--a", "3,4", "--b", "1,0", "--order", "1"])
    assert code == EXIT_OK
    assert report["taylor_standard"] == pytest.approx(0.6, abs=1e-12)
    assert report["taylor_collapsed"] == pytest.approx(0.6, abs=1e-12)
    assert report["mode"] == "theorem"


def test_taylor_monomial_is_exact(capsys):
    code, report = run_json(
        capsys, ["taylor", "--family", "monomial", "--alpha", "2,1", "--a", "1,1", "--b", "2,1", "--order", "3"]
    )
    assert code == EXIT_OK
    assert abs(report["remainder"]) <= 1e-12


def test_taylor_segment_through_origin(capsys):
    assert main(["taylor", "--family", "euclidean", "--a", "1,0", "--b", "-1,0", "--order", "1"]) == EXIT_DOMAIN
    assert "error" in capsys.readouterr().err


def test_taylor_order_defaults_to_degree(capsys):
    code, report = run_json(capsys, ["taylor", "--family", "pnorm", "--p", "3", "--power", "3", "--a", "1,2", "--b", "2,1"])
    assert code == EXIT_OK
    assert report["order"] == 3


def test_taylor_quadratic_root_and_spec_file(capsys, tmp_path):
    argv = ["taylor", "--family", "quadratic_root", "--R", "[[2, 0.5], [0.5, 1]]", "--power", "2", "--a", "1,1"]
    code, from_flags = run_json(capsys, argv + ["--b", "-1,2"])
    assert code == EXIT_OK
    spec = tmp_path / "spec.json"
    inner = {"family": "quadratic_root", "R": [[2, 0.5], [0.5, 1]]}
    spec.write_text(json.dumps({"family": "power", "power": 2, "inner": inner}))
    code, from_file = run_json(capsys, ["taylor", "--spec", str(spec), "--a", "1,1", "--b", "-1,2"])
    assert code == EXIT_OK
    assert from_file == from_flags


def test_taylor_human_output(capsys):
    assert main(["taylor", "--family", "euclidean", "--a", "3,4", "--b", "1,0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "taylor_collapsed" in out
    assert "0.6" in out
    assert "PASS" in out


@pytest.mark.parametrize(
    "argv,code",
    [
        (["taylor", "--family", "euclidean", "--a", "3,4", "--b", "1,0", "--order", "2"], EXIT_USAGE),
        (["taylor", "--family", "euclidean", "--a", "3,4", "--b", "1,0,2"], EXIT_USAGE),
        (["taylor", "--family", "monomial", "--a", "1,1", "--b", "2,1"], EXIT_USAGE),
        (["taylor", "--family", "pnorm", "--p", "0.5", "--a", "1,1", "--b", "2,1"], EXIT_USAGE),
        (["taylor", "--family", "quadratic_root", "--R", "[[1, 2], [2, 1]]", "--a", "1,1", "--b", "2,1"], EXIT_DOMAIN),
        (["taylor", "--family", "monomial", "--alpha", "1.5,1", "--a", "1,1", "--b", "2,1"], EXIT_USAGE),
        (["taylor", "--a", "1,1", "--b", "2,1"], EXIT_USAGE),
        (["taylor", "--family", "euclidean", "--a", "3,x", "--b", "1,0"], EXIT_USAGE),
        (["nonsense"], EXIT_USAGE),
    ],
)
def test_taylor_error_codes(argv, code):
    assert main(argv) == code


def test_taylor_json_is_byte_identical(capsys):
    argv = ["taylor", "--family", "pnorm", "--p", "2.5", "--power", "2", "--a", "1,2", "--b", "2,1", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_taylor_failed_check(monkeypatch, capsys):
    original = commands.build_report

    def widened_gap(*args, **kwargs):
        return dataclasses.replace(original(*args, **kwargs), identity_gap=1.0)

    monkeypatch.setattr(commands, "build_report", widened_gap)
    assert main(["taylor", "--family", "euclidean", "--a", "3,4", "--b", "1,0"]) == EXIT_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_taylor_rejects_non_positive_tolerance():
    assert main(["taylor", "--family", "euclidean", "--a", "3,4", "--b", "1,0", "--tol", "0"]) == EXIT_USAGE


def test_verify_binomial(capsys):
    code, results = run_json(capsys, ["verify", "--suite", "binomial", "--max-m", "12"])
    assert code == EXIT_OK
    assert results[0]["trials"] == 91
    assert results[0]["passed"]


def test_verify_selected_suites(capsys):
    code, results = run_json(capsys, ["verify", "--suite", "euler", "--suite", "risk", "--trials", "2", "--seed", "5"])
    assert code == EXIT_OK
    assert [result["name"] for result in results] == ["euler", "risk"]


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "homogeneity", "--trials", "3", "--seed", "9", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_verify_rejects_zero_trials():
    assert main(["verify", "--suite", "all", "--trials", "0"]) == EXIT_USAGE


def test_verify_reads_trials_from_config(capsys, tmp_path):
    config = tmp_path / "homtaylor.toml"
    config.write_text("[homtaylor]\ntrials = 2\n")
    code, results = run_json(capsys, ["verify", "--suite", "polynomial", "--config", str(config)])
    assert code == EXIT_OK
    assert results[0]["trials"] == 2 * 3


def test_identity_table(capsys):
    assert main(["identity", "--max-m", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["m", "q=0", "q=1", "q=2", "q=3"]
    assert lines[2].split() == ["0", "1"]
    assert lines[5].split() == ["3", "0", "0", "0", "1"]


def test_identity_json(capsys):
    code, payload = run_json(capsys, ["identity", "--max-m", "12"])
    assert code == EXIT_OK
    assert payload["kronecker"]
    assert len(payload["table"]) == 13


def test_identity_guard():
    assert main(["identity", "--max-m", "25"]) == EXIT_USAGE


def test_risk_report(capsys, correlated_portfolio):
    code, payload = run_json(capsys, ["risk", "--portfolio", correlated_portfolio])
    assert code == EXIT_OK
    assert payload["capital"] == pytest.approx(1.7320508, abs=1e-7)
    assert payload["allocations"] == pytest.approx([0.8660254, 0.8660254], abs=1e-7)


def test_risk_with_target(capsys, correlated_portfolio):
    code, payload = run_json(capsys, ["risk", "--portfolio", correlated_portfolio, "--target", "2,0"])
    assert code == EXIT_OK
    assert payload["quadratic_identity"]["gap"] <= 1e-10
    assert payload["quadratic_identity"]["rhs"] == pytest.approx(4.0)


def test_risk_human_output(capsys, correlated_portfolio):
    assert main(["risk", "--portfolio", correlated_portfolio]) == EXIT_OK
    out = capsys.readouterr().out
    assert "capital: 1.73205081" in out
    assert "risk 1" in out


def test_risk_error_codes(tmp_path):
    malformed = tmp_path / "bad.json"
    malformed.write_text("{not json")
    assert main(["risk", "--portfolio", str(malformed)]) == EXIT_USAGE
    indefinite = tmp_path / "indefinite.json"
    indefinite.write_text(json.dumps({"R": [[1.0, 2.0], [2.0, 1.0]], "exposures": [1.0, 1.0]}))
    assert main(["risk", "--portfolio", str(indefinite)]) == EXIT_DOMAIN
    assert main(["risk", "--portfolio", str(tmp_path / "missing.json")]) == EXIT_USAGE
