import json

import pytest

from opde.cli import main
from opde.serialize import pde_to_json
from opde.families import AppellParams, appell_pde

APPELL11 = json.dumps(pde_to_json(appell_pde(AppellParams(1, 1))))


@pytest.fixture()
def appell_file(tmp_path):
    path = tmp_path / "appell.json"
    path.write_text(APPELL11)
    return str(path)


def test_check_ok(appell_file, capsys):
    assert main(["check", "--pde", appell_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["admissible"] is True
    assert report["potentially_self_adjoint"] is True
    assert report["varpi"][0] == "-3"
    assert [1, 1, "1"] in report["discriminant"]


def test_check_not_admissible(tmp_path, capsys):
    data = {"a": "1", "b1": "0", "c1": "1", "b2": "0", "c2": "1", "b3": "0",
            "c3": "0", "d3": "0", "e": "-2", "f1": "0", "f2": "0"}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert main(["check", "--pde", str(path)]) == 2
    assert json.loads(capsys.readouterr().out)["offending_index"] == 2


def test_check_not_self_adjoint(tmp_path, capsys):
    data = {"a": "0", "b1": "1", "c1": "0", "b2": "0", "c2": "1", "b3": "0",
            "c3": "0", "d3": "1", "e": "-1", "f1": "1", "f2": "0"}
    path = tmp_path / "nsa.json"
    path.write_text(json.dumps(data))
    assert main(["check", "--pde", str(path)]) == 3
    assert json.loads(capsys.readouterr().out)["potentially_self_adjoint"] is False


def test_check_malformed_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    assert main(["check", "--pde", str(path)]) == 1
    err = capsys.readouterr().err
    assert "line 1" in err and "column" in err


def test_classify(appell_file, capsys):
    assert main(["classify", "--pde", appell_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [c["case"] for c in report["cases"]] == ["vi", "ix", "x"]
    assert report["cases"][0]["phi10"] == report["cases"][2]["phi10"]


def test_build_json_contract(capsys):
    assert main(["build", "--alpha", "1", "--beta", "1", "-N", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vectors"][1] == [
        [[1, 0, "1"], [0, 0, "-1/3"]],
        [[0, 1, "1"], [0, 0, "-1/3"]],
    ]
    m1 = payload["matrices"]["1"]
    assert m1["C1"][0][0] == "1/18"
    assert "W1" in m1 and "V1" in payload["matrices"]["2"]


def test_build_boundary_degree_zero(capsys):
    assert main(["build", "--alpha", "2", "--beta", "3", "-N", "0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["vectors"]) == 1
    assert set(payload["matrices"].keys()) == {"0"}
    assert payload["matrices"]["0"]["B1"] == [["2/6"]] or \
        payload["matrices"]["0"]["B1"] == [["1/3"]]


def test_build_latex(capsys):
    assert main(["build", "--alpha", "1", "--beta", "1", "-N", "1",
                 "--format", "latex"]) == 0
    out = capsys.readouterr().out
    assert "\\begin{pmatrix}" in out and "\\frac{1}{18}" in out


def test_build_nonmonic_families(capsys):
    for family in ("appell-F", "koornwinder"):
        assert main(["build", "--alpha", "1", "--beta", "1", "-N", "1",
                     "--family", family]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["family"] == family
    assert payload["vectors"][1][0] == [[1, 0, "3"], [0, 0, "-1"]]  # 3x - 1


def test_rodrigues_command(capsys):
    assert main(["rodrigues", "--alpha", "1", "--beta", "1", "-N", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    by_index = {(d["n"], d["m"]): d["poly"] for d in payload["rodrigues"]}
    assert by_index[(0, 0)] == [[0, 0, "1"]]
    assert by_index[(1, 0)] == [[1, 0, "-2"], [0, 1, "-1"], [0, 0, "1"]]


def test_rodrigues_command_with_weight_file(tmp_path, capsys):
    pde_path = tmp_path / "eq.json"
    pde_path.write_text(json.dumps(pde_to_json(appell_pde(AppellParams(2, 1)))))
    weight_path = tmp_path / "w.json"
    weight_path.write_text(json.dumps({"u": "1", "v": "0", "factors": []}))
    assert main(["rodrigues", "--pde", str(pde_path), "--weight", str(weight_path),
                 "-N", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    by_index = {(d["n"], d["m"]): d["poly"] for d in payload["rodrigues"]}
    assert by_index[(0, 0)] == [[0, 0, "1"]]
    assert len(by_index) == 3


def test_verify_ok(capsys):
    assert main(["verify", "--alpha", "1", "--beta", "1", "-N", "2"]) == 0
    out = capsys.readouterr().out
    assert "PASS golden-agreement" in out
    assert "FAIL" not in out


def test_verify_corrupt_exits_4(capsys):
    assert main(["verify", "--alpha", "1", "--beta", "1", "-N", "2",
                 "--corrupt", "ttrr-b1"]) == 4
    out = capsys.readouterr().out
    assert "FAIL ttrr-identity" in out
    assert "n=1 axis=1" in out


def test_verify_trivial_degree_zero(capsys):
    assert main(["verify", "--alpha", "2", "--beta", "3", "-N", "0"]) == 0


def test_degree_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("OPDE_MAX_DEGREE", "2")
    assert main(["build", "--alpha", "1", "--beta", "1", "-N", "6"]) == 0
    captured = capsys.readouterr()
    assert "clamped" in captured.err
    assert json.loads(captured.out)["N"] == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["build", "--alpha", "1", "--beta", "1", "-N", "1",
                 "--out", str(target)]) == 0
    assert json.loads(target.read_text())["N"] == 1


def test_conflicting_inputs(appell_file, capsys):
    assert main(["check", "--pde", appell_file, "--alpha", "1", "--beta", "1"]) == 1


def test_usage_error_missing_input(capsys):
    assert main(["classify"]) == 1
