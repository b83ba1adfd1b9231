import io
import json
import logging

import pytest

from synchro_hub.cli.interface import _parse_flags, run
from synchro_hub.core.sync import greedy_sync_word
from synchro_hub.core.testas import parse_testas, serialize_testas
from tests.conftest import IDENTITY2, SAMPLE6, SAMPLE_PARTIAL_RAW, PARTIAL5, cerny


@pytest.fixture
def files(in_tmp):
    paths = {
        "sample6": SAMPLE6,
        "identity2": IDENTITY2,
        "partial5": PARTIAL5,
        "raw": SAMPLE_PARTIAL_RAW,
        "cerny4": serialize_testas(cerny(4)),
        "monoid3": "3 3 1 1 0 2 0 0 0 2 2",
        "cycle2": "2 2 1 1 0 0",
        "split": "2 2 0 0 1 1",
        "bad": "2 2 1 x 1 0",
    }
    for name, text in paths.items():
        (in_tmp / f"{name}.txt").write_text(text + "\n", encoding="utf-8")
    return {name: f"{name}.txt" for name in paths}


def test_parse_flags():
    cmd, pos, args = _parse_flags(["minword", "--oracle", "a.txt", "--cap", "5"])
    assert (cmd, pos) == ("minword", ["a.txt"])
    assert args == {"oracle": "", "cap": "5"}


def test_check(files):
    res = run(["check", files["sample6"]])
    assert (res.exit_code, res.report) == (0, "synchronizing")
    res = run(["check", files["identity2"]])
    assert (res.exit_code, res.report) == (1, "not synchronizing")


def test_check_partial_uses_exact_search(files):
    assert run(["check", files["partial5"]]).exit_code == 0


def test_minword_cerny4(files):
    res = run(["minword", files["cerny4"]])
    assert res.exit_code == 0
    assert "length: 9" in res.report
    assert len(res.report.splitlines()[0]) == 9
    assert "nodes expanded:" in res.report


def test_minword_json_and_oracle(files):
    res = run(["minword", files["cerny4"], "--oracle", "--json"])
    payload = json.loads(res.report)
    assert payload["length"] == 9
    assert payload["stats"]["expanded"] > 0


def test_word_is_thin_adapter(files):
    res = run(["word", files["sample6"], "--algo", "C", "--json"])
    expected = greedy_sync_word(parse_testas(SAMPLE6), "C")
    assert json.loads(res.report)["letters"] == list(expected)


def test_word_comparison_table(files):
    res = run(["word", files["cerny4"], "--algo", "all"])
    assert res.exit_code == 0
    for code in "ABC":
        assert f"[{code}]" in res.report


def test_word_not_synchronizing(files):
    assert run(["word", files["identity2"]]).exit_code == 1


def test_semigroup(files):
    res = run(["semigroup", files["monoid3"]])
    assert res.report.splitlines()[0] == "27 3"
    assert len(res.report.splitlines()) == 28
    assert run(["semigroup", files["monoid3"], "--cap", "5"]).exit_code == 2


def test_gcd(files):
    assert run(["gcd", files["cycle2"]]).report == "2"
    assert run(["gcd", files["sample6"]]).report == "1"


def test_info(files):
    res = run(["info", files["split"], "--json"])
    payload = json.loads(res.report)
    assert payload["strongly_connected"] is False
    assert payload["sinks"] == []
    assert payload["edges"] == 4
    partial = json.loads(run(["info", files["partial5"], "--json"]).report)
    assert (partial["missing"], partial["edges"]) == (3, 7)
    table = run(["info", files["sample6"]]).report
    assert "НОД длин циклов" in table


def test_roadcolor(files):
    res = run(["roadcolor", files["sample6"], "--seed", "2"])
    assert res.exit_code == 0
    testas, word = res.report.splitlines()
    recolored = parse_testas(testas)
    assert recolored.word_mask((1 << 6) - 1, [ord(c) - 97 for c in word]).bit_count() == 1
    assert run(["roadcolor", files["cycle2"]]).exit_code == 1


def test_ksync(files):
    res = run(["ksync", files["cycle2"]])
    assert res.exit_code == 0
    assert res.report.splitlines()[0] == "k: 2"
    res = run(["ksync", files["split"]])
    assert res.exit_code == 1
    assert "стоковой" in res.report


def test_layout(files, in_tmp):
    res = run(["layout", files["sample6"], "--out", "graph.svg", "--width", "640"])
    assert res.exit_code == 0
    svg = (in_tmp / "graph.svg").read_text(encoding="utf-8")
    assert svg.startswith("<?xml")
    assert 'width="640.00"' in svg


def test_lenient_flag(files):
    assert run(["check", files["raw"]]).exit_code == 2
    assert run(["info", files["raw"], "--lenient"]).exit_code == 0


def test_json_input(files, in_tmp):
    (in_tmp / "aut.json").write_text(
        json.dumps({"n": 2, "d": 1, "table": [[1], [1]]}), encoding="utf-8"
    )
    assert run(["check", "aut.json"]).exit_code == 0


def test_stdin(files, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(SAMPLE6))
    assert run(["check", "-"]).report == "synchronizing"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate", "a.txt"],
        ["check"],
        ["check", "missing.txt"],
        ["semigroup", "bad.txt"],
        ["semigroup", "sample6.txt", "--cap", "many"],
        ["word", "sample6.txt", "--algo", "Z"],
    ],
)
def test_usage_errors(files, argv):
    res = run(argv)
    assert res.exit_code == 2
    assert res.report.startswith("Ошибка") or res.report.startswith("Команды")


def test_actions_are_logged(files, caplog):
    with caplog.at_level(logging.INFO, logger="synchro_hub.decorators"):
        run(["minword", files["cerny4"]])
        run(["word", files["identity2"]])
    assert "MINWORD source='cerny4.txt' n=4 d=2" in caplog.text
    assert "result=OK length=9" in caplog.text
    assert "result=ERROR error_type=NotSynchronizingError" in caplog.text


def test_survey(in_tmp):
    res = run(["survey", "--n", "3", "--d", "2", "--samples", "1000", "--json"])
    assert res.exit_code == 0
    payload = json.loads(res.report)
    assert payload["exhaustive"] is True
    assert (payload["checked"], payload["longest"], payload["cerny_bound"]) == (729, 4, 4)
    assert set(payload["greedy"]) == {"A", "B", "C"}

    text = run(["survey", "--n", "3", "--d", "2", "--samples", "50"]).report
    assert "случайная выборка" in text
    assert "[C]" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["survey", "--n", "3"],
        ["survey", "aut.txt", "--n", "3", "--d", "2"],
        ["survey", "--n", "40", "--d", "2"],
        ["survey", "--n", "3", "--d", "x"],
    ],
)
def test_survey_usage_errors(in_tmp, argv):
    assert run(argv).exit_code == 2
