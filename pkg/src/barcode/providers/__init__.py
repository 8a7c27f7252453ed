"""Provider registry.

Provider spec strings (used in barcode.toml and on the CLI):

    embedding:  "hashed/v1[-<dim>]", "fixture:<dir>", "st:<model>", "remote:<url>"
    nli:        "overlap/v1", "fixture:<dir>", "hf:<model>", "remote:<url>"
    parse:      "fixture:<dir>", "spacy[:<model>]"
    srl:        "fixture:<dir>"
"""

from __future__ import annotations

from pathlib import Path

from .. import ConfigError
from .base import EmbeddingProvider, NLIScores, NliProvider, ParseProvider, SrlProvider
from .fixture import (
    FixtureEmbeddingProvider,
    FixtureNliProvider,
    FixtureParseProvider,
    FixtureSrlProvider,
)
from .lightweight import HashedEmbeddingProvider, OverlapNliProvider

__all__ = [
    "EmbeddingProvider",
    "NliProvider",
    "ParseProvider",
    "SrlProvider",
    "NLIScores",
    "FixtureEmbeddingProvider",
    "FixtureNliProvider",
    "FixtureParseProvider",
    "FixtureSrlProvider",
    "HashedEmbeddingProvider",
    "OverlapNliProvider",
    "make_embedding_provider",
    "make_nli_provider",
    "make_parse_provider",
    "make_srl_provider",
]


def make_embedding_provider(spec: str) -> EmbeddingProvider:
    if spec.startswith("hashed/v1"):
        _, _, dim = spec.partition("-")
        return HashedEmbeddingProvider(dim=int(dim) if dim else 256)
    if spec.startswith("fixture:"):
        return FixtureEmbeddingProvider(Path(spec[len("fixture:"):]))
    if spec.startswith("st:"):
        from .runtime import SentenceTransformerEmbedding

        return SentenceTransformerEmbedding(spec[len("st:"):])
    if spec.startswith("remote:"):
        from .remote import RemoteEmbeddingProvider

        return RemoteEmbeddingProvider(spec[len("remote:"):])
    raise ConfigError(f"unknown embedding provider spec: {spec!r}")


def make_nli_provider(spec: str) -> NliProvider:
    if spec == "overlap/v1":
        return OverlapNliProvider()
    if spec.startswith("fixture:"):
        return FixtureNliProvider(Path(spec[len("fixture:"):]))
    if spec.startswith("hf:"):
        from .runtime import TransformersNli

        return TransformersNli(spec[len("hf:"):])
    if spec.startswith("remote:"):
        from .remote import RemoteNliProvider

        return RemoteNliProvider(spec[len("remote:"):])
    raise ConfigError(f"unknown NLI provider spec: {spec!r}")


def make_parse_provider(spec: str) -> ParseProvider:
    if spec.startswith("fixture:"):
        return FixtureParseProvider(Path(spec[len("fixture:"):]))
    if spec == "spacy" or spec.startswith("spacy:"):
        from .runtime import SpacyParseProvider

        _, _, model = spec.partition(":")
        return SpacyParseProvider(model) if model else SpacyParseProvider()
    raise ConfigError(f"unknown parse provider spec: {spec!r}")


def make_srl_provider(spec: str) -> SrlProvider:
    if spec.startswith("fixture:"):
        return FixtureSrlProvider(Path(spec[len("fixture:"):]))
    raise ConfigError(f"unknown SRL provider spec: {spec!r}")
