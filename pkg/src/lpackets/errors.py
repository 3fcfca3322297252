"""Exception hierarchy shared across the package.

The CLI maps these to exit codes: ConfigError -> 2, UnsupportedTypeError and
PipelineUnavailableError -> 3, InvariantError -> 4, CompareMismatch -> 5.
"""


class LPacketsError(Exception):
    """Base class for everything raised on bad or unsupported input."""


class ConfigError(LPacketsError):
    """Malformed group description: unknown keys, bad values, bad grammar."""


class UnsupportedTypeError(LPacketsError):
    """Well-formed description outside the supported menu (type, isogeny, p)."""


class PipelineUnavailableError(UnsupportedTypeError):
    """The requested pipeline cannot handle this group (use the other one)."""


class InvariantError(LPacketsError):
    """An internal cross-check failed; indicates a bug, never user error."""


class CompareMismatch(LPacketsError):
    """Parameter count and brute-force character count disagree."""
