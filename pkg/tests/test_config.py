"""Tests for settings lookup."""

import logging

import pytest

from topocode.config import Settings, find_pyproject, load_settings
from topocode.errors import FormatError


def write_pyproject(directory, body: str):
    path = directory / "pyproject.toml"
    path.write_text(body)
    return path


def test_defaults():
    s = Settings()
    assert (s.max_workers, s.seed, s.search_budget, s.brute_force_limit) == (8, 0, 2_000_000, 10)


def test_override_skips_none():
    s = Settings().override(seed=3, max_workers=None)
    assert s.seed == 3
    assert s.max_workers == 8


def test_pyproject_table(tmp_path):
    write_pyproject(tmp_path, "[tool.topocode]\nseed = 5\nmax_workers = 3\n")
    s = load_settings(tmp_path, environ={})
    assert (s.seed, s.max_workers) == (5, 3)
    assert s.search_budget == Settings().search_budget


def test_found_from_nested_directory(tmp_path):
    path = write_pyproject(tmp_path, "[tool.topocode]\nbrute_force_limit = 7\n")
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    assert find_pyproject(nested) == path.resolve()
    assert load_settings(nested, environ={}).brute_force_limit == 7


def test_environment_wins(tmp_path):
    write_pyproject(tmp_path, "[tool.topocode]\nseed = 5\n")
    s = load_settings(tmp_path, environ={"TOPOCODE_SEED": "9", "TOPOCODE_MAX_WORKERS": "2"})
    assert (s.seed, s.max_workers) == (9, 2)


def test_empty_environment_value_is_ignored(tmp_path):
    write_pyproject(tmp_path, "[tool.topocode]\nseed = 5\n")
    assert load_settings(tmp_path, environ={"TOPOCODE_SEED": ""}).seed == 5


def test_negative_seed_allowed(tmp_path):
    write_pyproject(tmp_path, "[tool.topocode]\nseed = -4\n")
    assert load_settings(tmp_path, environ={}).seed == -4


def test_unknown_key_warns(tmp_path, caplog):
    write_pyproject(tmp_path, "[tool.topocode]\ncolour = 1\n")
    with caplog.at_level(logging.WARNING, logger="topocode.config"):
        load_settings(tmp_path, environ={})
    assert "colour" in caplog.text


@pytest.mark.parametrize(
    "body, environ",
    [
        ("[tool.topocode]\nmax_workers = 0\n", {}),
        ('[tool.topocode]\nseed = "abc"\n', {}),
        ("[tool.topocode\n", {}),
        ("", {"TOPOCODE_MAX_WORKERS": "many"}),
    ],
)
def test_rejects(tmp_path, body, environ):
    write_pyproject(tmp_path, body)
    with pytest.raises(FormatError):
        load_settings(tmp_path, environ=environ)
