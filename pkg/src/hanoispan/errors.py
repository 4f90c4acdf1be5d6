"""Exception hierarchy shared by all hanoispan modules."""


class HanoiError(Exception):
    """Base class for every error raised by hanoispan."""


class GraphSizeError(HanoiError, ValueError):
    """Requested level is zero or exceeds the explicit-graph cap."""


class LabelError(HanoiError, ValueError):
    """A vertex label is malformed or not present in the graph."""


class FormatError(HanoiError, ValueError):
    """Unsupported export/serialization format."""


class ConsistencyError(HanoiError, RuntimeError):
    """Two independent computation paths disagree.

    Carries both values so the discrepancy can be reported verbatim.
    """

    def __init__(self, what, first, second):
        self.what = what
        self.first = first
        self.second = second
        super().__init__(f"{what}: {first!r} != {second!r}")


class OracleError(HanoiError, RuntimeError):
    """Brute-force oracle produced an impossible intermediate result."""


class EnumerationLimitError(HanoiError):
    """Spanning-tree enumeration refused because the tree count exceeds the limit."""


class DisconnectedGraphError(HanoiError, ValueError):
    """Operation requires a connected graph."""
