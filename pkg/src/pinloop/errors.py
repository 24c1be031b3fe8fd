"""Domain errors shared across the package.

Every error carries a stable machine-readable ``code`` (used by the CLI to
emit error JSON) plus an optional ``details`` payload with certificates such
as odd cycles or offending dart ids.
"""

from __future__ import annotations


class PinloopError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.__doc__)
        self.details = details

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self), "details": self.details}


# -- multiloop validation -----------------------------------------------------

class NotInvolution(PinloopError):
    """arc_involution is not an involution on the dart set."""
    code = "not_involution"


class FixedPointInInvolution(PinloopError):
    """arc_involution fixes a dart; every arc must join two distinct darts."""
    code = "fixed_point_in_involution"


class BadTransversalPairing(PinloopError):
    """An arc joins the two opposite darts of a single crossing, collapsing
    one of the two transversal passages onto itself."""
    code = "bad_transversal_pairing"


class NonIntegerGenus(PinloopError):
    """Euler characteristic of a component is odd."""
    code = "non_integer_genus"


class DanglingFreeCircleHost(PinloopError):
    """A free circle names a host region that does not exist."""
    code = "dangling_free_circle_host"


class NotSimple(PinloopError):
    """A strand crosses itself."""
    code = "not_simple"


# -- solvers ------------------------------------------------------------------

class UnknownRegionId(PinloopError):
    """A pin refers to a region outside the formula's variable universe."""
    code = "unknown_region_id"


class ResourceBudgetExceeded(PinloopError):
    """A configured output or state budget was exceeded."""
    code = "resource_budget_exceeded"


class StateNotPinning(PinloopError):
    """A game state must be a pinning set."""
    code = "state_not_pinning"


# -- three-strand algorithm ---------------------------------------------------

class TooManyStrands(PinloopError):
    """The three-strand algorithm requires at most 3 strands."""
    code = "too_many_strands"


class SelfLoopDetected(PinloopError):
    """A non-regional innermost bigon produced equal triangular endpoints;
    the input is not a valid oriented-surface 3-strand encoding."""
    code = "self_loop_detected"


class NotBipartite(PinloopError):
    """Graph is not 2-colorable; details carry an odd cycle certificate."""
    code = "not_bipartite"


class MatchingNotMaximum(PinloopError):
    """An augmenting path exists, so the given matching is not maximum."""
    code = "matching_not_maximum"


# -- graph reductions ----------------------------------------------------------

class ComponentWithoutEdge(PinloopError):
    """Every component must contain an edge at this stage."""
    code = "component_without_edge"


class DegreeOutOfRange(PinloopError):
    """Vertex degree outside the range required by this stage."""
    code = "degree_out_of_range"


class NotCubic(PinloopError):
    """Graph is not 3-regular."""
    code = "not_cubic"


class Not3Connected(PinloopError):
    """Graph is not 3-connected."""
    code = "not_3_connected"


class NotGenusZero(PinloopError):
    """Rotation system does not embed the graph in the sphere."""
    code = "not_genus_zero"


class Disconnected(PinloopError):
    """Graph is not connected."""
    code = "disconnected"
