"""Shared error types.

Parse and argument problems raise plain ValueError; everything that fails
*during* a well-posed computation (budget blown, search inconclusive,
invariant broken at runtime) raises ComputationError so the CLI can map it
to its own exit code.
"""


class ComputationError(Exception):
    """A well-formed request that could not be completed."""


class BudgetExceededError(ComputationError):
    """An iteration/step/exponent budget ran out before an answer was found."""


class InvariantViolation(ComputationError):
    """A structural invariant failed on concrete data; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
