"""Exception types shared by the library and the command-line front end."""

from __future__ import annotations


class ConfigError(ValueError):
    """Malformed or inconsistent ensemble configuration."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class BudgetError(DomainError):
    """An exhaustive enumeration would exceed the 2**24 pattern budget."""


class NoCrossingError(DomainError):
    """The growth rate never reaches zero on the scanned range."""


class NumericalAssertionError(ArithmeticError):
    """A numerical property that must hold analytically was violated."""
