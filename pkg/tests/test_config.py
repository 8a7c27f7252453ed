import pytest

from barcode import ConfigError
from barcode.config import Config, config_from_snapshot, load_config


def test_defaults():
    config = load_config()
    assert config.tau == 0.5
    assert config.shortlist_n == 4000
    assert config.default_k == 15
    assert config.problem_window == 5


def test_file_values_and_relative_paths(tmp_path):
    path = tmp_path / "barcode.toml"
    path.write_text(
        """
[filter]
tau = 0.25
window = 3

[paths]
patterns = "patterns/custom.json"
"""
    )
    config = load_config(path)
    assert config.tau == 0.25
    assert config.problem_window == 3
    assert config.patterns_file == str(tmp_path / "patterns" / "custom.json")


def test_env_overrides_file(tmp_path):
    path = tmp_path / "barcode.toml"
    path.write_text("[filter]\ntau = 0.25\n")
    config = load_config(path, env={"BARCODE_TAU": "0.9", "BARCODE_K": "7"})
    assert config.tau == 0.9
    assert config.default_k == 7


def test_flag_overrides_env(tmp_path):
    config = load_config(env={"BARCODE_TAU": "0.9"}, overrides={"tau": 0.1})
    assert config.tau == 0.1


def test_none_override_ignored():
    assert load_config(overrides={"tau": None}).tau == 0.5


def test_unknown_file_key_rejected(tmp_path):
    path = tmp_path / "barcode.toml"
    path.write_text("[filter]\nbogus = 1\n")
    with pytest.raises(ConfigError, match="bogus"):
        load_config(path)


def test_unknown_override_rejected():
    with pytest.raises(ConfigError):
        load_config(overrides={"not_a_field": 1})


def test_snapshot_roundtrip():
    import json

    config = load_config(overrides={"tau": 0.33})
    clone = config_from_snapshot(json.loads(config.to_json()))
    assert clone == config


def test_bool_env_coercion():
    config = load_config(env={"BARCODE_TAU": "0.7"})
    assert isinstance(config.tau, float)
    assert Config.field_names() >= {"tau", "seed", "embedding_provider"}
