"""
Test configuration loading from defaults, .env files, environment and overrides
"""
import pytest

from src.config import DEFAULT_CACHE_PATH, RunConfig, SearchCaps
from src.errors import CapExceededError, InvalidParameterError


def test_defaults():
    config = RunConfig()
    assert config.caps == SearchCaps(graph=9, colored=8, berge={3: 7, 4: 6, 5: 6})
    assert config.workers == 1
    assert config.cache_path == DEFAULT_CACHE_PATH
    assert config.output_format == "json"
    assert config.use_cache and not config.verify_cache


def test_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("BERGE_TURAN_WORKERS", "4")
    monkeypatch.setenv("BERGE_TURAN_SEED", "17")
    monkeypatch.setenv("BERGE_TURAN_GRAPH_CAP", "10")
    monkeypatch.setenv("BERGE_TURAN_BERGE_CAPS", "3:8, 4:5")
    monkeypatch.setenv("BERGE_TURAN_CACHE", str(tmp_path / "c.jsonl"))
    config = RunConfig.from_env(env_file=str(tmp_path / "missing.env"))
    assert (config.workers, config.seed) == (4, 17)
    assert config.caps.graph == 10
    assert config.caps.colored == 8
    assert config.caps.berge == {3: 8, 4: 5}
    assert config.cache_path.endswith("c.jsonl")


def test_env_file_loses_to_environment(monkeypatch, tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("BERGE_TURAN_WORKERS=3\nBERGE_TURAN_COLORED_CAP=6\n")
    monkeypatch.setenv("BERGE_TURAN_WORKERS", "2")
    config = RunConfig.from_env(env_file=str(env_file))
    assert config.workers == 2
    assert config.caps.colored == 6


def test_overrides_win_and_none_is_ignored(monkeypatch, tmp_path):
    monkeypatch.setenv("BERGE_TURAN_WORKERS", "4")
    config = RunConfig.from_env(env_file=str(tmp_path / "missing.env"), workers=1, seed=None, output_format="csv")
    assert config.workers == 1
    assert config.seed == 0
    assert config.output_format == "csv"


@pytest.mark.parametrize(
    "kwargs",
    [{"workers": 0}, {"output_format": "xml"}, {"log_level": "LOUD"}],
)
def test_invalid_fields(kwargs):
    with pytest.raises(InvalidParameterError):
        RunConfig(**kwargs)


def test_invalid_environment_values(monkeypatch, tmp_path):
    monkeypatch.setenv("BERGE_TURAN_WORKERS", "many")
    with pytest.raises(InvalidParameterError):
        RunConfig.from_env(env_file=str(tmp_path / "missing.env"))
    monkeypatch.setenv("BERGE_TURAN_WORKERS", "1")
    monkeypatch.setenv("BERGE_TURAN_BERGE_CAPS", "3-5")
    with pytest.raises(InvalidParameterError):
        RunConfig.from_env(env_file=str(tmp_path / "missing.env"))


def test_caps():
    caps = SearchCaps(berge={3: 5})
    assert caps.berge_cap(3) == 5
    with pytest.raises(CapExceededError):
        caps.berge_cap(4)
    with pytest.raises(InvalidParameterError):
        SearchCaps(graph=0)
