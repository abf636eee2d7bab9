"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """Input lies outside the domain of an operation."""


class EmptyGraphError(DomainError):
    """The graph has no vertices (the ring has no nonzero zero-divisors)."""


class ResourceError(RuntimeError):
    """A search exceeded its configured budget.

    Never a mathematical answer: callers must report the check as not computed.
    """
