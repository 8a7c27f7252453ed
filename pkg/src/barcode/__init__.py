"""BARcode: mining biological analogies for engineering challenges.

Pipeline: ingest a biological corpus, extract verb-object candidate
phrases, score every sentence for bio-inspiration via weak supervision,
then answer short challenge queries with embedding similarity + NLI
re-scoring combined by a trained classifier.
"""

__version__ = "0.1.0"


class BarcodeError(Exception):
    """Base class for domain errors raised by this package."""


class ConfigError(BarcodeError):
    """Bad configuration: malformed pattern file, unknown provider id, ..."""


class ProviderError(BarcodeError):
    """A model provider is unavailable or failed on an input."""
