"""Packet counting for reductive groups over finite fields.

Two independent enumerations of Frobenius-semisimple special parameters:

- ``spectral``: through the dual group, as pairs (semisimple class, special
  class of its centralizer), for connected groups;
- ``strata``: through canonical torus points and two-sided cells of their
  stabilizer reflection groups, which also covers disconnected groups.

Both attach a packet to every parameter; the packet-weighted totals agree
with each other and with a brute-force count of irreducible characters from
``oracle``.
"""

__version__ = "0.1.0"

from .errors import (
    CompareMismatch,
    ConfigError,
    InvariantError,
    LPacketsError,
    PipelineUnavailableError,
    UnsupportedTypeError,
)
from .rootdata import GroupSpec, parse_group_spec

__all__ = [
    "__version__",
    "CompareMismatch", "ConfigError", "InvariantError", "LPacketsError",
    "PipelineUnavailableError", "UnsupportedTypeError",
    "GroupSpec", "parse_group_spec",
]
