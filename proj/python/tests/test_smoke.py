import json
import os
import pathlib

import pytest

import l0kit

SCENARIOS = pathlib.Path(os.environ.get("L0KIT_SCENARIO_DIR",
                                        pathlib.Path(__file__).resolve().parents[2] / "scenarios"))


def test_contraction_closed_form():
    rep = l0kit.run(SCENARIOS / "contraction_scalar.json")
    assert rep["schema_version"] == l0kit.SCHEMA_VERSION
    assert rep["exit_code"] == l0kit.EXIT_OK
    assert rep["point"][0][0] == pytest.approx(2.0, abs=1e-8)
    assert rep["point"][1][0] == pytest.approx(10.0, abs=1e-8)


def test_dict_scenario_and_seed():
    sc = l0kit.load(SCENARIOS / "rotation_square.json")
    a = l0kit.run(sc, seed=3)
    b = l0kit.run(sc, seed=3)
    assert a["seed"] == 3
    assert a["point"] == b["point"]
    assert all(r < e for r, e in zip(a["residual"], a["bound"]))


def test_oracle_agrees():
    rep = l0kit.oracle(SCENARIOS / "contraction_scalar.json")
    assert rep["exit_code"] == 0
    assert rep["agree"] is True


def test_net_and_bad_epsilon():
    rep = l0kit.net(SCENARIOS / "net_square.json", samples=500)
    assert rep["exit_code"] == 0
    assert rep["verify"]["violations"] == 0
    assert l0kit.net(SCENARIOS / "net_square.json", eps=0.0)["exit_code"] == l0kit.EXIT_BAD_INPUT


def test_unsupported_and_failures():
    assert l0kit.run(SCENARIOS / "ball_unsupported.json")["exit_code"] == l0kit.EXIT_UNSUPPORTED
    rep = l0kit.run(SCENARIOS / "not_self_map.json")
    assert rep["exit_code"] == l0kit.EXIT_FAILED
    assert rep["error"]["code"] == "NotSelfMap"


def test_schema_errors_raise():
    with pytest.raises(l0kit.Error) as info:
        l0kit.run({"schema_version": 2})
    assert info.value.code == "BadValue"
    assert info.value.exit_code == l0kit.EXIT_BAD_INPUT
    with pytest.raises(l0kit.Error):
        l0kit.run(SCENARIOS / "malformed.json")


def test_builtin_suites_round_trip():
    suite = l0kit.builtin_suite()
    assert len(suite) == 12
    assert len(l0kit.builtin_contraction_suite()) == 4
    assert len(l0kit.builtin_splitting_suite()) == 6
    rep = l0kit.run(suite[0])
    assert rep["exit_code"] == 0
    # reals survive a text round trip unchanged
    assert json.loads(json.dumps(rep))["point"] == rep["point"]
