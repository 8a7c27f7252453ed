"""Configuration: barcode.toml + environment + explicit overrides.

Precedence: explicit overrides (CLI flags) > BARCODE_* environment
variables > config file > built-in defaults. Paths in the file resolve
relative to the file's directory. Every pipeline run snapshots the
resolved config into the index bundle.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Mapping

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from . import ConfigError

_ENV_PREFIX = "BARCODE_"

_PATH_FIELDS = (
    "patterns_file",
    "clausal_patterns_file",
    "non_bio_verbs_file",
    "aux_verbs_file",
    "problem_lexicon_file",
    "classifier_file",
    "fixtures_dir",
)


@dataclass
class Config:
    # providers
    embedding_provider: str = "hashed/v1-256"
    nli_provider: str = "overlap/v1"
    parse_provider: str = "fixture:fixtures"
    srl_provider: str = "fixture:fixtures"
    # ranking
    shortlist_n: int = 4000
    default_k: int = 15
    bidirectional_nli: bool = False
    # filtering
    tau: float = 0.5
    problem_window: int = 5
    # label model
    label_lr: float = 0.0001
    label_epochs: int = 3000
    seed: int = 1234
    # patent lexicon
    lexicon_top_n: int = 2000
    # data files
    patterns_file: str = "patterns/dep_patterns.json"
    clausal_patterns_file: str = "patterns/clausal_patterns.json"
    non_bio_verbs_file: str = "lexicon/non_bio_verbs.txt"
    aux_verbs_file: str = "lexicon/aux_verbs.txt"
    problem_lexicon_file: str = "lexicon/problems.tsv"
    classifier_file: str = "models/relevance.json"
    fixtures_dir: str = "fixtures"

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def field_names(cls) -> set[str]:
        return {f.name for f in fields(cls)}


_FILE_KEYS = {
    ("providers", "embedding"): "embedding_provider",
    ("providers", "nli"): "nli_provider",
    ("providers", "parse"): "parse_provider",
    ("providers", "srl"): "srl_provider",
    ("ranking", "shortlist_n"): "shortlist_n",
    ("ranking", "default_k"): "default_k",
    ("ranking", "bidirectional_nli"): "bidirectional_nli",
    ("filter", "tau"): "tau",
    ("filter", "window"): "problem_window",
    ("labelmodel", "lr"): "label_lr",
    ("labelmodel", "epochs"): "label_epochs",
    ("labelmodel", "seed"): "seed",
    ("lexicon", "top_n"): "lexicon_top_n",
    ("paths", "patterns"): "patterns_file",
    ("paths", "clausal_patterns"): "clausal_patterns_file",
    ("paths", "non_bio_verbs"): "non_bio_verbs_file",
    ("paths", "aux_verbs"): "aux_verbs_file",
    ("paths", "problem_lexicon"): "problem_lexicon_file",
    ("paths", "classifier"): "classifier_file",
    ("paths", "fixtures"): "fixtures_dir",
}

_ENV_KEYS = {
    "EMBEDDING": "embedding_provider",
    "NLI": "nli_provider",
    "PARSE": "parse_provider",
    "SRL": "srl_provider",
    "SHORTLIST_N": "shortlist_n",
    "K": "default_k",
    "TAU": "tau",
    "WINDOW": "problem_window",
    "SEED": "seed",
    "EPOCHS": "label_epochs",
}


def _coerce(value: str, target_type: type) -> Any:
    if target_type is bool:
        return value.lower() in ("1", "true", "yes", "on")
    return target_type(value)


def load_config(
    path: Path | None = None,
    env: Mapping[str, str] | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> Config:
    config = Config()
    base_dir = Path.cwd()

    if path is not None:
        path = Path(path)
        try:
            raw = tomllib.loads(path.read_text(encoding="utf-8"))
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        base_dir = path.resolve().parent
        for section, table in raw.items():
            if not isinstance(table, dict):
                raise ConfigError(f"{path}: top-level key {section!r} must be a table")
            for key, value in table.items():
                field_name = _FILE_KEYS.get((section, key))
                if field_name is None:
                    raise ConfigError(f"{path}: unknown config key {section}.{key}")
                setattr(config, field_name, value)

    env = os.environ if env is None else env
    for env_key, field_name in _ENV_KEYS.items():
        value = env.get(_ENV_PREFIX + env_key)
        if value is not None:
            current = getattr(config, field_name)
            setattr(config, field_name, _coerce(value, type(current)))

    for key, value in (overrides or {}).items():
        if key not in Config.field_names():
            raise ConfigError(f"unknown config override {key!r}")
        if value is not None:
            setattr(config, key, value)

    for field_name in _PATH_FIELDS:
        value = getattr(config, field_name)
        resolved = Path(value)
        if not resolved.is_absolute():
            resolved = base_dir / resolved
        setattr(config, field_name, str(resolved))
    return config


def config_from_snapshot(snapshot: dict) -> Config:
    config = Config()
    for key, value in snapshot.items():
        if key in Config.field_names():
            setattr(config, key, value)
    return config
