"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised when a textual input (multiset spec, word, tree, polynomial) is malformed."""


class DomainError(ValueError):
    """Raised when an argument is outside the domain of an operation."""


class TreeValidationError(ValueError):
    """Raised when a tree fails structural validation.

    Carries the full list of violations so callers can report every
    offending vertex, not just the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"invalid tree: {lines}")


class GammaExtractionError(ValueError):
    """Raised when a polynomial admits no nonnegative gamma-expansion.

    Attributes ``reason``, ``i``, ``j`` and ``value`` identify the z-slice,
    the basis index and the offending coefficient (where applicable).
    """

    def __init__(self, reason: str, i: int | None = None, j: int | None = None, value=None):
        self.reason = reason
        self.i = i
        self.j = j
        self.value = value
        where = "" if i is None else f" at z-slice i={i}" + ("" if j is None else f", j={j}")
        val = "" if value is None else f" (value {value})"
        super().__init__(f"{reason}{where}{val}")


class NotCanonicalError(DomainError):
    """Raised when a weight is requested for a pruned tree with a y-labelled vertex."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(
            f"tree is not canonical: vertex {vertex} keeps a y-leaf but no x-leaf, "
            "so the pruned tree carries no (u, v)-weight"
        )


class FamilyTooLargeError(RuntimeError):
    """Raised when a verification campaign would exceed the permutation budget."""

    def __init__(self, cost: int, cap: int):
        self.cost = cost
        self.cap = cap
        super().__init__(
            f"family too large: {cost} Stirling permutations requested, cap is {cap}"
        )
