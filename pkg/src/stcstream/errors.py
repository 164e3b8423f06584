"""Exception types shared across the package."""


class StcError(Exception):
    """Base class for all package errors."""


class DataError(StcError):
    """Bad input data: parse failures, unordered streams, invalid config."""


class ParseError(DataError):
    """A line of the edge-list input could not be parsed."""


class StreamOrderError(DataError):
    """The input stream violated chronological ordering."""


class ConfigError(DataError):
    """An option combination or weighting requirement was not met."""


class ConsistencyError(StcError):
    """Internal state diverged from its contract; indicates a bug or misuse."""


class CapExceededError(StcError):
    """Instance is larger than the configured exact-solver cap."""
