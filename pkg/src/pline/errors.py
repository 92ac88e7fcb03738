"""Exception hierarchy shared by all pline modules."""


class PlineError(Exception):
    """Base class for every error raised by pline."""


class SpecError(PlineError, ValueError):
    """A ring specification (or other structured input) is malformed."""


class DomainError(PlineError, ValueError):
    """An argument lies outside the domain of an operation (e.g. inverse of a non-unit)."""


class CapabilityError(PlineError, TypeError):
    """The ring does not support the requested operation (e.g. enumerating an infinite ring)."""


class PreconditionError(PlineError, ValueError):
    """A documented precondition of an operation does not hold."""


class BudgetError(PlineError, RuntimeError):
    """A configured resource budget would be exceeded."""

    def __init__(self, budget: str, limit: int, needed: int | None = None):
        self.budget = budget
        self.limit = limit
        self.needed = needed
        msg = f"budget {budget!r} exceeded (limit {limit}"
        if needed is not None:
            msg += f", needed {needed}"
        super().__init__(msg + "); raise it via PLINE_BUDGET")


class ConsistencyError(PlineError, AssertionError):
    """An internal algebraic identity failed; indicates an arithmetic bug."""
