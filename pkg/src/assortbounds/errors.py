"""Exception types raised across the package."""


class AssortError(Exception):
    """Base class for every error raised by assortbounds."""


# Input / parsing problems.


class GraphError(AssortError, ValueError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, node):
        super().__init__(f"self-loop on node {node!r}")
        self.node = node


class DuplicateEdgeError(GraphError):
    def __init__(self, i, j):
        super().__init__(f"duplicate edge ({i!r}, {j!r})")
        self.edge = (i, j)


class IndexOutOfRangeError(GraphError):
    pass


class LengthMismatchError(GraphError):
    pass


class ParseError(GraphError):
    """Malformed edge-list or metadata file; message names the line."""


# Degenerate statistics.


class EmptyGraphError(AssortError, ValueError):
    pass


class DegenerateMarginalError(AssortError, ValueError):
    pass


class DegenerateDenominatorError(AssortError, ValueError):
    """Assortativity is undefined: every edge joins nodes of one class."""


class UndefinedObservedError(DegenerateDenominatorError):
    pass


class DegeneratePartitionError(AssortError, ValueError):
    """One of the two label classes is empty."""


# Bounds.


class InvalidPartitionError(AssortError, ValueError):
    pass


class NoFeasibleCandidateError(AssortError):
    def __init__(self, candidate_log):
        super().__init__("no feasible lower-bound candidate")
        self.candidate_log = candidate_log


class ZeroBoundError(AssortError, ZeroDivisionError):
    pass


# Exploration and enumeration.


class TooManyCombinationsError(AssortError):
    def __init__(self, combinations, cap):
        super().__init__(
            f"C(n, n1) = {combinations} assignments exceeds cap {cap}; "
            "use the heuristic or random permutations instead"
        )
        self.combinations = combinations
        self.cap = cap


class NotGraphicalError(AssortError, ValueError):
    pass


class TooLargeError(AssortError, ValueError):
    pass
