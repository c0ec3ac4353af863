import json

import pytest

from src.correspondence.corresp import omega
from src.models import (
    IdealModelModel,
    NCElementModel,
    RunConfig,
    ThetaReportModel,
    point_from_json,
    point_to_json,
)
from src.algebra.ncalg import commutator_xy
from src.algebra.sra import verify_theta
from src.utils.errors import InputError


def test_cm_point_json(point_a):
    data = point_to_json(point_a)
    assert data["kind"] == "cm"
    # survives a trip through text
    assert point_from_json(json.loads(json.dumps(data))) == point_a


def test_framed_rep_json(nakajima_m2):
    data = point_to_json(nakajima_m2)
    assert data["kind"] == "framed"
    assert set(data["lam"]) == {"inf", "0", "1"}
    assert point_from_json(data) == nakajima_m2


def test_module_json(module_n2):
    data = point_to_json(module_n2)
    assert data["kind"] == "hmodule"
    assert point_from_json(data) == module_n2


def test_wreath_module_json(wreath_module):
    data = point_to_json(wreath_module)
    assert "tau" in data["c"]
    back = point_from_json(data)
    assert back.m == 2
    assert back.x == wreath_module.x
    assert back.y == wreath_module.y
    assert back.tau == wreath_module.tau
    assert back.generators == wreath_module.generators


def test_missing_kind_defaults_to_cm(point_a):
    data = point_to_json(point_a)
    del data["kind"]
    assert point_from_json(data) == point_a


def test_bad_point_files(point_a):
    with pytest.raises(InputError):
        point_from_json({"kind": "sphere"})
    data = point_to_json(point_a)
    del data["X"]
    with pytest.raises(InputError):
        point_from_json(data)
    with pytest.raises(InputError):
        point_to_json("not a point")


def test_ideal_model_dump(point_n1):
    model = omega(point_n1, 2)
    dumped = IdealModelModel.from_domain(model)
    assert dumped.dims == {"J": 1, "K": 6, "K/J": 5}
    back = dumped.to_domain()
    assert back.codim_profile == model.codim_profile
    assert back.J_basis == model.J_basis
    assert back.fingerprint == model.fingerprint


def test_nc_element_model():
    element = commutator_xy()
    assert NCElementModel.from_domain(element).to_domain() == element


def test_theta_report_model():
    report = ThetaReportModel.from_domain(verify_theta(1, 1, [1], 2))
    assert report.passed
    assert report.tau == ["1"]


def test_run_config():
    config = RunConfig(command="theta-verify", m=2, n=1, tau=["1", "-3/2"], length=3)
    assert config.convention == "standard"
    with pytest.raises(InputError):
        RunConfig(command="theta-verify", tau=["a"])
