"""Tests for the zetaforms command line."""

import importlib
import json
import math

import pytest

from src.cli import build_parser, run
from src.recurrence import ThetaDiscrepancy

cli = importlib.import_module("src.cli.main")

SMALL_POLYLOG = {
    "a": 3,
    "n": 2,
    "omega": 1,
    "Omega": 1,
    "kappa": 3,
    "mode": "polylog",
    "z0": -2,
    "q": 2,
}


@pytest.fixture(autouse=True)
def quiet(test_env_vars):
    yield


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_delta_json(capsys):
    assert run(["delta", "--a", "2", "--n", "4", "--json"]) == 0
    payload = _json(capsys)
    assert payload["value"] == "24"
    assert payload["factors"] == {"2": 3, "3": 1}


def test_delta_plain_text(capsys):
    assert run(["delta", "--a", "1", "--n", "6", "--text"]) == 0
    assert "60" in capsys.readouterr().out


def test_constants_defaults(capsys):
    assert run(["constants"]) == 0
    assert "20.93" in capsys.readouterr().out


def test_constants_polylog_with_feasibility(capsys):
    assert run(["constants", "--mode", "polylog", "--a", "10000", "--json"]) == 0
    payload = _json(capsys)
    assert payload["feasible"] is True
    assert payload["asymptotic"]["logchi_coef"] == pytest.approx(9.0807, abs=0.01)


def test_unknown_flag_is_usage_error(capsys):
    assert run(["delta", "--a", "2", "--n", "4", "--frobnicate"]) == 1
    assert run(["no-such-command"]) == 1


def test_invalid_arguments_are_usage_errors(capsys):
    assert run(["delta", "--a", "0", "--n", "4"]) == 1


def test_invalid_params_file(write_toml):
    path = write_toml({"a": 2, "n": 2, "omega": 1, "Omega": 3})
    assert run(["integrality", "--params", str(path), "--k-max", "3"]) == 1


def test_missing_files_are_io_errors(write_toml, tmp_path):
    params = write_toml(SMALL_POLYLOG)
    missing = tmp_path / "missing.json"
    assert run(["verify", "--table", str(missing), "--params", str(params), "--p", "0", "--k", "5"]) == 2
    assert run(["theta", "--params", str(tmp_path / "nope.toml"), "--k-max", "2"]) == 2


def test_malformed_inputs_are_io_errors(write_toml, tmp_path):
    bad_toml = tmp_path / "bad.toml"
    bad_toml.write_text("[params\na = 1\n", encoding="utf-8")
    assert run(["theta", "--params", str(bad_toml), "--k-max", "2"]) == 2

    params = write_toml(SMALL_POLYLOG)
    bad_json = tmp_path / "table.json"
    bad_json.write_text("{not json", encoding="utf-8")
    assert run(["verify", "--table", str(bad_json), "--params", str(params), "--p", "0", "--k", "5"]) == 2


def test_table_shape_mismatch(write_toml, tmp_path):
    params = write_toml(SMALL_POLYLOG)
    table = tmp_path / "table.json"
    table.write_text(json.dumps({"a": 1, "n": 1, "c": [["1", "0"]]}), encoding="utf-8")
    assert run(["rank", "--table", str(table), "--params", str(params)]) == 1


def test_theta_discrepancies_exit_three(write_toml, monkeypatch, capsys):
    params = write_toml({"a": 2, "n": 2, "omega": 1, "Omega": 1})
    monkeypatch.setattr(
        cli, "compare_theta", lambda params, k_max: [ThetaDiscrepancy((2, 0, 1, 1, 1), 1, 2)]
    )
    assert run(["check-theta", "--params", str(params), "--k-max", "2", "--json"]) == 3
    assert _json(capsys)["discrepancies"][0]["index"] == [2, 0, 1, 1, 1]


def test_check_theta_clean(write_toml, capsys):
    params = write_toml({"a": 2, "n": 2, "omega": 1, "Omega": 1})
    assert run(["check-theta", "--params", str(params), "--k-max", "4"]) == 0


def test_theta_writes_output(write_toml, tmp_path, capsys):
    params = write_toml({"a": 2, "n": 1, "omega": 1, "Omega": 1})
    out = tmp_path / "theta.json"
    assert run(["theta", "--params", str(params), "--k-max", "2", "--out", str(out)]) == 0
    entries = json.loads(out.read_text())["entries"]
    assert entries["1,1,0,1,0"] == "1"


def test_integrality_json(write_toml, capsys):
    params = write_toml({"a": 2, "n": 3, "omega": 1, "Omega": 1})
    assert run(["integrality", "--params", str(params), "--k-max", "5", "--json"]) == 0
    assert _json(capsys)["violations"] == 0


def test_construct_verify_rank_round_trip(write_toml, tmp_path, capsys):
    params = write_toml(SMALL_POLYLOG)
    table = tmp_path / "out" / "table.json"
    assert run(["construct", "--params", str(params), "--out", str(table), "--json"]) == 0
    built = _json(capsys)
    assert built["seed"] == 20240101
    assert built["equivalences"]["D1"] == built["equivalences"]["D2"]
    assert json.loads(table.read_text())["c"] == built["table"]["c"]

    assert run(
        ["verify", "--table", str(table), "--params", str(params), "--p", "0", "--k", "5",
         "--digits", "30", "--json"]
    ) == 0
    record = _json(capsys)
    assert record["contains_zero"] is True
    assert record["precision"] == 30

    assert run(["verify", "--table", str(table), "--params", str(params), "--p", "0", "--k", "9"]) == 1

    assert run(["rank", "--table", str(table), "--params", str(params), "--selection", "x"]) == 1


def test_construct_is_deterministic(write_toml, capsys):
    params = write_toml({"a": 3, "n": 2, "omega": 1, "Omega": 2})
    outputs = []
    for _ in range(2):
        assert run(["construct", "--params", str(params), "--json"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_parser_lists_every_subcommand():
    help_text = build_parser().format_help()
    for name in ("delta", "theta", "check-theta", "integrality", "construct", "verify", "rank",
                 "constants", "sweep"):
        assert name in help_text


def test_delta_defaults_to_json(capsys):
    assert run(["delta", "--a", "2", "--n", "4"]) == 0
    payload = _json(capsys)
    assert payload == {"a": 2, "n": 4, "factors": {"2": 3, "3": 1}, "value": "24"}


def test_delta_oracle_cross_check(capsys):
    assert run(["delta", "--a", "3", "--n", "6", "--oracle"]) == 0
    payload = _json(capsys)
    assert payload["oracle_match"] is True
    assert payload["oracle"] == payload["value"]


def test_delta_oracle_mismatch_exits_three(monkeypatch, capsys):
    monkeypatch.setattr(cli, "delta_bruteforce", lambda a, n: 1)
    assert run(["delta", "--a", "2", "--n", "4", "--oracle"]) == 3
    assert _json(capsys)["oracle_match"] is False


def test_delta_oracle_outside_guard_is_usage_error(capsys):
    assert run(["delta", "--a", "7", "--n", "10", "--oracle"]) == 1


def test_output_flags_are_exclusive(capsys):
    assert run(["delta", "--a", "2", "--n", "4", "--json", "--text"]) == 1


@pytest.mark.parametrize("flag, method", [("--closed", "closed"), ("--oracle", "oracle")])
def test_theta_short_flags(write_toml, tmp_path, capsys, flag, method):
    params = write_toml({"a": 2, "n": 1, "omega": 1, "Omega": 1})
    out = tmp_path / "theta.json"
    assert run(["theta", "--params", str(params), "--k", "2", flag, "--out", str(out)]) == 0
    written = json.loads(out.read_text())
    assert written["method"] == method
    assert written["k_max"] == 2
    assert written["entries"]["1,1,0,1,0"] == "1"
    assert _json(capsys) == written


def test_theta_method_flags_conflict(write_toml, capsys):
    params = write_toml({"a": 2, "n": 1, "omega": 1, "Omega": 1})
    assert run(["theta", "--params", str(params), "--k", "2", "--closed", "--oracle"]) == 1


def test_integrality_violations_exit_three(write_toml, monkeypatch, capsys):
    denominators = importlib.import_module("src.recurrence.denominators")
    prime = 10**9 + 7
    monkeypatch.setattr(denominators, "factorial", lambda m: prime * math.factorial(m))
    params = write_toml({"a": 2, "n": 3, "omega": 1, "Omega": 1})
    assert run(["integrality", "--params", str(params), "--k", "4"]) == 3
    payload = _json(capsys)
    assert payload["violations"] == len(payload["violation_entries"]) > 0
