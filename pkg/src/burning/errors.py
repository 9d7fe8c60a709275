"""Exception types shared across the package."""

from __future__ import annotations


class GraphParseError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class GraphValidationError(ValueError):
    """Input violates a simple-graph invariant (self-loop, duplicate edge, bad id)."""


class InputMismatchError(ValueError):
    """The graph does not have the shape an algorithm requires."""


class DisconnectedGraphError(InputMismatchError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"graph is disconnected: vertex {vertex} is unreachable")


class NotATreeError(InputMismatchError):
    pass


class NotBinaryError(InputMismatchError):
    pass


class ContractError(ValueError):
    """A documented precondition on a call was not met."""


class BudgetExhausted(RuntimeError):
    """Exact search ran out of budget before proving optimality.

    Carries the best upper bound known so far and a schedule achieving it.
    """

    def __init__(self, upper_bound: int, schedule: tuple[int, ...], reason: str):
        self.upper_bound = upper_bound
        self.schedule = schedule
        self.reason = reason
        super().__init__(f"{reason}; best known upper bound {upper_bound}")
