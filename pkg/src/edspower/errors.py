"""Exceptions shared across the package."""


class HypothesisError(ValueError):
    """A mathematical hypothesis required by an operation does not hold.

    Raised for inputs that are well-formed but outside the theory this
    package implements: torsion generators, integral generators where a
    non-integral one is required, terms that are not the stated power.
    """


class BudgetExhausted(RuntimeError):
    """An effort budget ran out before the computation could finish."""
