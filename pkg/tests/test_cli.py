import json

import pytest
from click.testing import CliRunner

import main
from config import settings
from main import cli
from src.linalg.matrix import Matrix
from src.models import point_to_json
from src.quiver.repvar import CMPoint
from src.utils.storage import write_json


@pytest.fixture
def runner(tmp_cache):
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, ["--no-cache", *args])


def test_gen_then_omega(runner, tmp_path):
    point_file = tmp_path / "point.json"
    result = invoke(runner, "gen", "--n", "2", "--spectrum", "0,1", "--out", str(point_file))
    assert result.exit_code == 0, result.output
    assert json.loads(point_file.read_text())["kind"] == "cm"

    model_file = tmp_path / "model.json"
    result = invoke(runner, "omega", str(point_file), "--degree", "4", "--out", str(model_file))
    assert result.exit_code == 0, result.output
    model = json.loads(model_file.read_text())
    assert model["codim_profile"] == [1, 2, 2, 2, 2]
    assert model["dims"]["K"] == 29


def test_gen_nakajima(runner, tmp_path):
    out = tmp_path / "nak.json"
    result = invoke(runner, "gen", "--m", "2", "--dims", "1,1", "--tau", "1,1", "--out", str(out))
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["kind"] == "framed"


@pytest.mark.parametrize("dims", ["1,2", "2,1"])
def test_gen_nakajima_non_constant_dims(runner, tmp_path, dims):
    out = tmp_path / "nak.json"
    result = invoke(runner, "gen", "--m", "2", "--dims", dims, "--tau", "1,1", "--out", str(out))
    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text())
    assert data["kind"] == "framed"
    assert data["dims"] == [int(k) for k in dims.split(",")]


def test_gen_with_seed(runner, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert invoke(runner, "gen", "--n", "2", "--seed", "3", "--out", str(a)).exit_code == 0
    assert invoke(runner, "gen", "--n", "2", "--seed", "3", "--out", str(b)).exit_code == 0
    assert a.read_text() == b.read_text()
    assert json.loads(a.read_text())["kind"] == "cm"


def test_cached_ideal_model_tracks_default_degree(runner, tmp_path, mocker):
    point_file = tmp_path / "point.json"
    invoke(runner, "gen", "--n", "2", "--spectrum", "0,1", "--out", str(point_file))
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    result = runner.invoke(cli, ["omega", str(point_file), "--out", str(first)])
    assert result.exit_code == 0, result.output
    assert json.loads(first.read_text())["d"] == 4

    mocker.patch.object(settings, "default_degree", 5)
    result = runner.invoke(cli, ["omega", str(point_file), "--out", str(second)])
    assert result.exit_code == 0, result.output
    assert json.loads(second.read_text())["d"] == 5


@pytest.mark.parametrize("args", [
    ["gen", "--n", "2", "--spectrum", "1,1"],
    ["gen", "--spectrum", "0,1"],
    ["gen", "--m", "2", "--tau", "1,-1"],
    ["roots", "--alpha", "0,0"],
    ["regular", "--m", "2", "--tau", "1"],
    ["theta-verify", "--m", "1", "--n", "1", "--tau", "a"],
])
def test_bad_input_exits_2(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_roots(runner):
    result = invoke(runner, "roots", "--m", "1", "--alpha", "1,3")
    assert result.exit_code == 0
    assert "positive root: yes, q = -2" in result.output


def test_regular(runner):
    result = invoke(runner, "regular", "--m", "2", "--tau", "1,-1")
    assert "regular: no" in result.output
    result = invoke(runner, "regular", "--m", "2", "--tau", "2,1")
    assert "regular: yes" in result.output


def test_iso(runner, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    invoke(runner, "gen", "--n", "2", "--spectrum", "0,1", "--out", str(a))
    invoke(runner, "gen", "--n", "2", "--spectrum", "0,2", "--out", str(b))
    assert "isomorphic: no" in invoke(runner, "iso", str(a), str(b)).output
    assert "isomorphic: yes" in invoke(runner, "iso", str(a), str(a)).output


def test_validate(runner, tmp_path, point_a):
    good = write_json(tmp_path / "good.json", point_to_json(point_a))
    result = invoke(runner, "validate", str(good))
    assert result.exit_code == 0
    assert "All residuals are zero" in result.output

    bad_point = CMPoint(1, Matrix.zeros(1, 1), Matrix.zeros(1, 1), Matrix.column([1]), Matrix.row([1]))
    bad = write_json(tmp_path / "bad.json", point_to_json(bad_point))
    assert invoke(runner, "validate", str(bad)).exit_code == 3


def test_omega_rejects_framed_points(runner, tmp_path, nakajima_m2):
    path = write_json(tmp_path / "nak.json", point_to_json(nakajima_m2))
    assert invoke(runner, "omega", str(path)).exit_code == 2


def test_xi_default_fixture(runner, tmp_path):
    out = tmp_path / "xi.json"
    result = invoke(runner, "xi", "--out", str(out))
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["codim_profile"] == [1, 2, 2, 2, 2]


def test_theta_verify(runner, tmp_path):
    out = tmp_path / "theta.json"
    result = invoke(runner, "theta-verify", "--m", "2", "--n", "1", "--tau", "1,1", "--len", "3", "--out", str(out))
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert report["tau"] == ["1", "1"]


def test_theta_verify_flipped_fails(runner):
    result = invoke(runner, "theta-verify", "--m", "2", "--n", "2", "--tau", "1,1",
                    "--len", "3", "--convention", "flipped")
    assert result.exit_code == 3
    assert "FAIL" in result.output


def test_fingerprint_json(runner, tmp_path, point_a):
    path = write_json(tmp_path / "a.json", point_to_json(point_a))
    result = invoke(runner, "fingerprint", str(path), "--len", "2", "--format", "json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["len"] == 2
    assert data["values"] == {"1": "-2", "x": "-1", "y": "0", "xx": "-1", "xy": "1", "yx": "-1", "yy": "2"}


def test_verify_all_pass(runner, mocker):
    mocker.patch("main._acceptance_checks", return_value=[("trivial", lambda: True)])
    result = invoke(runner, "verify-all")
    assert result.exit_code == 0
    assert "All checks passed" in result.output


def test_verify_all_failure(runner, mocker):
    mocker.patch.object(main, "_acceptance_checks", return_value=[
        ("passes", lambda: True),
        ("fails", lambda: False),
    ])
    result = invoke(runner, "verify-all")
    assert result.exit_code == 3
    assert "1 check(s) failed" in result.output


def test_acceptance_battery_rows():
    checks = dict(main._acceptance_checks())
    assert len(checks) == 16
    for name in ["ideal model structure, d=6", "injectivity on C_2", "Xi distinctness", "PBW counts",
                 "normal form confluence", "path algebra isomorphism", "root enumeration", "m=1 coherence"]:
        assert name in checks
    assert checks["ideal model at n=1"]()
    assert checks["roots and regularity"]()
    assert checks["root enumeration"]()
