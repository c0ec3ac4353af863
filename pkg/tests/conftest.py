"""Shared fixtures."""

import pytest

from config import settings
from src.correspondence.cherednik import solve_fixture
from src.linalg.matrix import Matrix
from src.quiver.repvar import CMPoint, generate_cm, generate_nakajima


@pytest.fixture
def point_a() -> CMPoint:
    """X = diag(0, 1), Y = [[0, 1], [-1, 0]], v = (1, -1)^T, w = (-1, 1)."""
    return CMPoint(
        n=2,
        X=Matrix.diag([0, 1]),
        Y=Matrix.from_rows([[0, 1], [-1, 0]]),
        v=Matrix.column([1, -1]),
        w=Matrix.row([-1, 1]),
    )


@pytest.fixture
def point_n1() -> CMPoint:
    return generate_cm(1, [0])


@pytest.fixture
def module_n2():
    return solve_fixture(2, params={"p": 0, "q": 1, "r": 0, "t": 0})


@pytest.fixture
def wreath_module():
    return solve_fixture(1, m=2)


@pytest.fixture
def nakajima_m2():
    return generate_nakajima(2, [1, 1], [1, 1])


@pytest.fixture
def tmp_cache(tmp_path, mocker):
    """Point the disk cache at a temporary directory."""
    mocker.patch.object(settings, "cache_dir", tmp_path / "cache")
    return tmp_path / "cache"
