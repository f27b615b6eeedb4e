import json

import pytest

from gradedquot.catalog import build
from gradedquot.cli import FAILED, OK, USAGE, main
from gradedquot.fixtures import Fixture, save_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "sl2")
    assert code == OK
    info = json.loads(out)
    assert info["dim"] == 3 and info["grading"] == {"-1": 1, "0": 1, "1": 1}


def test_der(capsys):
    code, out, _ = run(capsys, "der", "sl3_q", "--graded")
    info = json.loads(out)
    assert code == OK and info["dim"] == 8 and info["inner_dim"] == 8
    assert info["graded"]["0"] == 4


def test_der_on_ideal(capsys):
    code, out, _ = run(capsys, "der", "gl2_f5", "--ideal", "sl2")
    assert code == OK and json.loads(out)["domain_dim"] == 3


def test_qm(capsys):
    code, out, _ = run(capsys, "qm", "so5_q")
    assert code == OK and json.loads(out)["dim"] == 10
    code, out, _ = run(capsys, "qm", "sl2_f5")
    assert code == FAILED and json.loads(out)["status"] == "inconclusive"


def test_suite_exit_codes(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "suite", "grequiv", "--seed", "4", "--out", str(out_file))
    assert code == OK and "suite grequiv" in out
    report = json.loads(out_file.read_text())
    assert report["seed"] == 4 and report["success"] is True


def test_suite_report_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "suite", "finitary-snd", "--seed", "9", "--out", str(a))
    run(capsys, "suite", "finitary-snd", "--seed", "9", "--out", str(b))
    strip = lambda p: [{k: v for k, v in c.items() if k != "duration"} for c in json.loads(p.read_text())["checks"]]  # noqa: E731
    assert strip(a) == strip(b)


def test_seed_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ALG_SEED", "13")
    out_file = tmp_path / "r.json"
    run(capsys, "suite", "inner-ideals", "--out", str(out_file))
    assert json.loads(out_file.read_text())["seed"] == 13


def test_usage_errors(capsys):
    assert run(capsys, "suite", "nosuch")[0] == USAGE
    assert run(capsys, "validate", "does_not_exist")[0] == USAGE
    assert run(capsys)[0] == USAGE
    assert run(capsys, "finitary", "sl", "--check", "grading")[0] == USAGE
    assert run(capsys, "validate", "sl2", "--fixtures")[0] == USAGE


def test_fixture_directory_flag(capsys, tmp_path):
    fx = build("abelian2_f3")
    save_fixture(Fixture("local", fx.algebra, fx.grading), tmp_path / "local.json")
    assert run(capsys, "--fixtures", str(tmp_path), "validate", "local")[0] == OK
    assert run(capsys, "validate", "local", "--fixtures", str(tmp_path))[0] == OK
    (tmp_path / "broken.json").write_text("{}")
    code, _, err = run(capsys, "--fixtures", str(tmp_path), "validate", "broken")
    assert code == USAGE and "missing key" in err


@pytest.mark.parametrize("family,check,size,code", [
    ("sl", "grading", 4, OK), ("sp", "l0gen", 2, OK), ("o", "l0gen", 3, OK), ("o", "l0gen", 2, FAILED),
    ("sp", "snd", 6, OK), ("sl", "qm", 12, OK), ("o", "qm", 4, OK),
])
def test_finitary(capsys, family, check, size, code):
    argv = ["finitary", family, "--check", check, "--size", str(size)]
    if check == "snd":
        argv += ["--samples", "30"]
    assert run(capsys, *argv)[0] == code


def test_finitary_slack(capsys):
    assert run(capsys, "finitary", "o", "--check", "l0gen", "--size", "2", "--slack", "1")[0] == OK
