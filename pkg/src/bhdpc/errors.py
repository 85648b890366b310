"""Exception hierarchy for bhdpc."""


class BHDPCError(Exception):
    """Base class for all package errors."""


class InvalidNode(BHDPCError):
    """A vertex vector has the wrong length or a digit outside 0..3."""


class NotAdjacent(BHDPCError):
    """Two vertices passed as an edge are not adjacent."""


class ParseError(BHDPCError):
    """Malformed vertex text."""


class BadDimension(BHDPCError):
    """Split dimension outside 1..n-1."""


class NoSplit(BHDPCError):
    """No coordinate l >= 1 separates the given sinks (defensive; see docs)."""


class NotFound(BHDPCError):
    """Bounded enumeration found no 8-cycle of the required shape."""


class InvalidTerminals(BHDPCError):
    """Terminal multiset violates the problem preconditions."""


class DimensionTooSmall(BHDPCError):
    """Paired 3-DPC construction requires n >= 3."""


class UnreachableCase(BHDPCError):
    """A case combination the structure theory proves impossible was reached."""


class SearchExhausted(BHDPCError):
    """A search that is guaranteed to succeed came back empty (internal bug)."""


class BudgetExceeded(BHDPCError):
    """The path solver hit its node-expansion budget before deciding."""


class ChoiceExhausted(BHDPCError):
    """A bounded choice/repair loop ran out of candidates (internal bug)."""


class DetourInfeasible(BHDPCError):
    """No splittable edge admitted a ring detour (internal bug)."""


class StitchingError(BHDPCError):
    """Assembled segments failed an internal consistency check."""


class ConstructionFailed(BHDPCError):
    """A constructed cover did not pass independent verification."""


class TableDecodeError(BHDPCError):
    """Embedded table data contains a letter outside a..p or a bad shape."""


class TableChecksumError(BHDPCError):
    """Embedded table data does not match its pinned checksum."""


class UnrepairableRow(BHDPCError):
    """A defective table row admits no valid replacement cover at all."""
