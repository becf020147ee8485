"""Configuration precedence: defaults < file < environment < flags."""

import json

import pytest

from chronomem.config import AppConfig, load_config


def test_defaults_match_benchmark_hyperparameters():
    cfg = AppConfig()
    assert cfg.retrieval.max_prompt_concepts == 10
    assert cfg.retrieval.max_distance == 2
    assert cfg.retrieval.alpha == 3.0
    assert cfg.retrieval.temporal_window == 3
    assert cfg.revision.merges_per_revision == 5
    assert cfg.revision.max_context_chars == 2000


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"alpha": 7, "graph_path": "other.json"}))
    cfg = load_config(path, env={})
    assert cfg.retrieval.alpha == 7
    assert cfg.graph_path == "other.json"


def test_env_overrides_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"provider_base": "http://from-file"}))
    cfg = load_config(path, env={"RECALL_API_BASE": "http://from-env"})
    assert cfg.provider_base == "http://from-env"


def test_flags_override_env(tmp_path):
    cfg = load_config(
        None,
        overrides={"provider_base": "http://from-flag"},
        env={"RECALL_API_BASE": "http://from-env"},
    )
    assert cfg.provider_base == "http://from-flag"


def test_none_overrides_are_ignored():
    cfg = load_config(None, overrides={"graph_path": None}, env={})
    assert cfg.graph_path == AppConfig().graph_path


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"mystery_knob": 1}))
    with pytest.raises(ValueError, match="mystery_knob"):
        load_config(path, env={})


def test_invalid_json_rejected(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{nope")
    with pytest.raises(ValueError, match="valid JSON"):
        load_config(path, env={})


def test_provider_built_only_when_base_set():
    assert AppConfig().provider() is None
    cfg = AppConfig(provider_base="http://x", provider_model="m")
    provider = cfg.provider()
    assert provider.model == "m"
