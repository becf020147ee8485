"""Application configuration shared by the CLI and the HTTP service.

Precedence, lowest to highest: built-in defaults, then a JSON config file,
then environment variables, then explicit flags. Defaults reproduce the
retrieval hyperparameters the benchmark assumes (10 prompt concepts,
distance 2, alpha 3, window 3).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .providers import ENV_BASE, ENV_KEY, ENV_MODEL, RemoteProvider
from .recall import RetrievalConfig
from .update import RevisionPolicy

__all__ = ["AppConfig", "load_config"]

DEFAULT_GRAPH_PATH = "chronomem_graph.json"
DEFAULT_VECTOR_PATH = "chronomem_vectors.json"


@dataclass
class AppConfig:
    graph_path: str = DEFAULT_GRAPH_PATH
    vector_path: str = DEFAULT_VECTOR_PATH
    retrieval: RetrievalConfig = field(default_factory=RetrievalConfig)
    revision: RevisionPolicy = field(default_factory=RevisionPolicy)
    embedder_dimension: int = 256
    provider_base: str = ""
    provider_key: str = ""
    provider_model: str = ""
    bench_repetitions: int = 25
    bench_checkpoints: tuple[int, ...] = (1, 5, 10, 15, 20, 25)
    raw_budget_chars: int = 16_000

    def provider(self) -> RemoteProvider | None:
        if not self.provider_base:
            return None
        return RemoteProvider(
            base_url=self.provider_base,
            api_key=self.provider_key,
            model=self.provider_model,
        )


_RETRIEVAL_KEYS = {"max_prompt_concepts", "max_distance", "alpha", "temporal_window"}
_REVISION_KEYS = {"merges_per_revision", "max_context_chars", "enabled"}


def load_config(
    config_file: str | Path | None = None,
    overrides: dict | None = None,
    env: dict[str, str] | None = None,
) -> AppConfig:
    """Build an AppConfig: defaults < config file < environment < overrides."""
    env = os.environ if env is None else env
    cfg = AppConfig()
    if config_file:
        try:
            doc = json.loads(Path(config_file).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ValueError(f"config file {config_file} is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise ValueError(f"config file {config_file} must hold a JSON object")
        _apply(cfg, doc)
    env_doc = {}
    if env.get(ENV_BASE):
        env_doc["provider_base"] = env[ENV_BASE]
    if env.get(ENV_KEY):
        env_doc["provider_key"] = env[ENV_KEY]
    if env.get(ENV_MODEL):
        env_doc["provider_model"] = env[ENV_MODEL]
    _apply(cfg, env_doc)
    if overrides:
        _apply(cfg, {k: v for k, v in overrides.items() if v is not None})
    return cfg


def _apply(cfg: AppConfig, doc: dict) -> None:
    for key, value in doc.items():
        if key in _RETRIEVAL_KEYS:
            setattr(cfg.retrieval, key, value)
        elif key in _REVISION_KEYS:
            setattr(cfg.revision, key, value)
        elif key == "bench_checkpoints":
            cfg.bench_checkpoints = tuple(int(v) for v in value)
        elif hasattr(cfg, key):
            setattr(cfg, key, value)
        else:
            raise ValueError(f"unknown configuration key {key!r}")
