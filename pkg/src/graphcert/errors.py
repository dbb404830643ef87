"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the CLI can map it to
an exit status and a report field without string matching.
"""

from __future__ import annotations


class GraphError(Exception):
    code = "graph_error"


class OutOfRange(GraphError):
    code = "out_of_range"


class LoopInSimple(GraphError):
    code = "loop_in_simple"


class ParallelInSimple(GraphError):
    code = "parallel_in_simple"


class NotAWalk(GraphError):
    code = "not_a_walk"


class CapExceeded(GraphError):
    """A desk-scale search refused to run because an input exceeds its cap."""

    code = "cap_exceeded"

    def __init__(self, cap: str, limit, actual):
        super().__init__(f"{cap}: {actual} exceeds cap {limit}")
        self.cap = cap
        self.limit = limit
        self.actual = actual


class BadParams(GraphError):
    code = "bad_params"


class Missing(GraphError):
    code = "missing"


class AlreadyPresent(GraphError):
    code = "already_present"


class EmptySet(GraphError):
    code = "empty_set"


class EmptyFamily(GraphError):
    code = "empty_family"


class NotGraphical(GraphError):
    code = "not_graphical"


class NotConnectedRealizable(GraphError):
    code = "not_connected_realizable"


class NotATree(GraphError):
    code = "not_a_tree"


class BadCode(GraphError):
    code = "bad_code"


class Disconnected(GraphError):
    code = "disconnected"


class AdjacentEndpoints(GraphError):
    code = "adjacent_endpoints"


class NotThreeConnected(GraphError):
    code = "not_three_connected"


class TooSmall(GraphError):
    code = "too_small"


class IsolatedVertex(GraphError):
    code = "isolated_vertex"


class InfeasibleDegrees(GraphError):
    code = "infeasible_degrees"


class WrongClass(GraphError):
    code = "wrong_class"


class NotPlanar(GraphError):
    code = "not_planar"


class SwapExhausted(GraphError):
    code = "swap_exhausted"


class BadRotation(GraphError):
    code = "bad_rotation"


class ParseError(GraphError):
    code = "parse_error"

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
