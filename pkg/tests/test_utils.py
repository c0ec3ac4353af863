import logging
import sys

import pytest

from config import Settings
from src.utils import errors
from src.utils.cache import CacheManager
from src.utils.logger import LOGGER_NAME, set_level, setup_logger
from src.utils.storage import dumps, read_json, write_json


class TestStorage:
    def test_write_then_read(self, tmp_path):
        path = write_json(tmp_path / "out" / "point.json", {"b": [1, 2], "a": "x"})
        assert read_json(path) == {"a": "x", "b": [1, 2]}
        assert [p.name for p in path.parent.iterdir()] == ["point.json"]

    def test_canonical_text(self):
        assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'

    def test_missing_file(self, tmp_path):
        with pytest.raises(errors.InputError, match="not found"):
            read_json(tmp_path / "missing.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(errors.InputError, match="invalid JSON"):
            read_json(path)


class TestCacheManager:
    def test_set_and_get(self, tmp_cache):
        cache = CacheManager(enabled=True)
        assert cache.get("omega", {"n": 2}) is None
        cache.set("omega", {"n": 2}, {"profile": [1, 2]})
        assert cache.get("omega", {"n": 2}) == {"profile": [1, 2]}
        assert cache.get("theta", {"n": 2}) is None

    def test_key_ignores_payload_order(self, tmp_cache):
        cache = CacheManager(enabled=True)
        assert cache._generate_key("x", {"a": 1, "b": 2}) == cache._generate_key("x", {"b": 2, "a": 1})

    def test_disabled(self, tmp_cache):
        cache = CacheManager(enabled=False)
        cache.set("omega", {"n": 1}, [1])
        assert cache.get("omega", {"n": 1}) is None

    def test_clear(self, tmp_cache):
        cache = CacheManager(enabled=True)
        cache.set("omega", {"n": 1}, [1])
        cache.clear()
        assert cache.get("omega", {"n": 1}) is None


@pytest.mark.parametrize("error, code", [
    (errors.ToolkitError, 1),
    (errors.InputError, 2),
    (errors.ShapeMismatchError, 2),
    (errors.RepeatedSpectrumError, 2),
    (errors.IrregularWeightError, 2),
    (errors.DivisionByZeroError, 2),
    (errors.AssertionFailure, 3),
    (errors.ValidationError, 3),
    (errors.NotSimpleError, 3),
    (errors.RankError, 3),
])
def test_exit_codes(error, code):
    assert error("boom").exit_code == code


def test_division_error_is_a_zero_division():
    assert issubclass(errors.DivisionByZeroError, ZeroDivisionError)


def test_settings_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("DEFAULT_DEGREE", "6")
    monkeypatch.setenv("WREATH_CONVENTION", "flipped")
    monkeypatch.setenv("CACHE_DIR", str(tmp_path / "c"))
    s = Settings()
    assert s.default_degree == 6
    assert s.wreath_convention == "flipped"
    assert s.cache_dir.is_dir()


def test_logger_has_one_handler():
    first = setup_logger("cm_toolkit_test")
    second = setup_logger("cm_toolkit_test")
    assert first is second
    assert len(second.handlers) == 1


def test_logs_go_to_stderr():
    logger = setup_logger("cm_toolkit_stderr_test")
    assert logger.handlers[0].stream is sys.stderr


def test_set_level():
    set_level("DEBUG")
    assert logging.getLogger(LOGGER_NAME).level == logging.DEBUG
    set_level("INFO")
