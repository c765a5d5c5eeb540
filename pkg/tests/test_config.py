import json

import pytest

from core.config import ENV_OVERRIDES, Config


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for variable in ENV_OVERRIDES:
        monkeypatch.delenv(variable, raising=False)


def test_defaults_without_a_file(tmp_path):
    config = Config(str(tmp_path / "config.json"))
    assert config.max_group_order == 64
    assert config.max_cyclotomic_order == 10000
    assert config.max_chain == 3
    assert config.log_level == "WARNING"
    assert config.get("catalog.default_seed") == 0
    assert config.get("no.such.key", "fallback") == "fallback"


def test_file_values_are_layered_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"groups": {"max_order": 24}, "logging": {"level": "debug"}}), encoding="utf-8")
    config = Config(str(path))
    assert config.max_group_order == 24
    assert config.log_level == "DEBUG"
    assert config.max_chain == 3


def test_set_with_persist_writes_the_file(tmp_path):
    path = tmp_path / "nested" / "config.json"
    config = Config(str(path))
    config.set("lemma.max_chain", 5, persist=True)
    assert Config(str(path)).max_chain == 5
    config.set("lemma.max_chain", 2)
    assert Config(str(path)).max_chain == 5


def test_corrupted_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")
    assert Config(str(path)).max_group_order == 64


def test_environment_overrides_the_file(tmp_path, monkeypatch):
    monkeypatch.setenv("GRADEDLIE_MAX_GROUP_ORDER", "12")
    monkeypatch.setenv("GRADEDLIE_MAX_CYCLOTOMIC_ORDER", "lots")
    config = Config(str(tmp_path / "config.json"))
    assert config.max_group_order == 12
    assert config.max_cyclotomic_order == 10000
    config.set("groups.max_order", 30)
    assert config.max_group_order == 30


@pytest.mark.parametrize("raw", ["abc", True, -4, 0])
def test_junk_integer_settings_use_the_default(tmp_path, raw):
    config = Config(str(tmp_path / "config.json"))
    config.set("groups.max_order", raw)
    assert config.max_group_order == 64
