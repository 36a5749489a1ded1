"""Exception types shared across the package."""

from __future__ import annotations


class PosetmcError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(PosetmcError):
    """An element index lies outside [0, n)."""


class AntisymmetryViolation(PosetmcError):
    """The order relation contains a cycle through distinct elements."""

    def __init__(self, cycle: list[int]):
        self.cycle = list(cycle)
        path = " <= ".join(str(e) for e in self.cycle)
        super().__init__(f"antisymmetry violated by cycle: {path}")


class FormatError(PosetmcError):
    """A poset or graph text file is malformed."""


class FormulaSyntaxError(PosetmcError):
    """The formula text cannot be parsed."""

    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")


class UnsupportedQuantifier(FormulaSyntaxError):
    """A universal quantifier appears in the formula."""

    def __init__(self, pos: int):
        super().__init__("universal quantifiers are not supported", pos)


class FreeVariable(PosetmcError):
    """A matrix variable is not bound by the quantifier prefix."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"free variable: {name}")


class UnboundVariable(PosetmcError):
    """An assignment is missing a variable required by the matrix."""


class TooManyVariables(PosetmcError):
    """The sentence exceeds the configured variable cap."""


class CapExceeded(PosetmcError):
    """A brute-force oracle was asked to exceed its work cap."""


class NotMinClosed(PosetmcError):
    """A CSP constraint relation is not closed under the chain minimum."""


class NotIntervalMonotone(PosetmcError):
    """A coloured graph violates the interval-monotonicity conditions."""


class PreconditionViolation(PosetmcError):
    """An input does not satisfy a documented precondition."""
