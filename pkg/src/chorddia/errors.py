"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an argument is outside an operation's domain."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured resource cap."""


class ConsistencyError(RuntimeError):
    """Raised when an internal exactness check fails.

    Every division in the counting formulas is mathematically exact; a
    nonzero remainder therefore signals an implementation bug, never bad
    input.
    """


def exact_div(numerator: int, denominator: int, context: str) -> int:
    """Divide, insisting on a zero remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConsistencyError(
            f"inexact division in {context}: {numerator} / {denominator} "
            f"leaves remainder {remainder}"
        )
    return quotient
