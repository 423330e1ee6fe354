"""Exception hierarchy shared by all hamindex modules."""


class HamindexError(Exception):
    """Base class for all package errors."""


class CapacityError(HamindexError):
    """Requested graph exceeds the fixed vertex capacity."""


class FormatError(HamindexError):
    """Malformed graph6 or edge-list input."""


class DisconnectedGraphError(HamindexError):
    """Operation defined only for connected graphs."""


class NotBalancedBipartiteError(HamindexError):
    """Operation requires a balanced bipartition that the graph lacks."""


class ParameterOutOfRangeError(HamindexError):
    """Family parameters violate the family's defining constraints."""


class ParameterOutOfStatedRangeError(HamindexError):
    """Theorem parameters fall outside the statement's hypotheses."""


class UnsupportedFamilyError(HamindexError):
    """No closed form is available for this family tag."""


class OrderTooLargeError(HamindexError):
    """Exact isomorphism machinery is only guaranteed for small orders."""


class OrderMismatchError(HamindexError):
    """Spanning-subgraph tests require equal vertex counts."""


class InfeasibleScopeError(HamindexError):
    """Requested verification scope exceeds the enumeration budget."""


class BudgetExceededError(HamindexError):
    """Search node budget exhausted before an exact answer was reached."""
