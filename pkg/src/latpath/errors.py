"""Exception hierarchy shared by every module."""


class LatpathError(Exception):
    """Base class for errors raised by latpath."""


class DomainError(LatpathError, ValueError):
    """An argument lies outside the domain of the operation."""


class ParsePathError(DomainError):
    """A path or family string could not be parsed."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class ContractError(DomainError):
    """A precondition of the operation does not hold for the given input."""


class OracleScaleError(DomainError):
    """An exponential oracle was asked to run beyond its size guard."""


class ConsistencyError(LatpathError, RuntimeError):
    """Two computations that must agree did not. Always indicates a bug."""
