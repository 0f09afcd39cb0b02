"""Computing with left-orderable groups.

Order oracles on a catalog of concrete groups, ball-scale exploration of the
space of left-orders, dynamical realizations on the line, crossing/Conradian
analysis, order-theoretic combinatorics, and random-walk experiments.
"""

__version__ = "0.1.0"

from .errors import BudgetExceededError, ComputationError, InvariantViolation

__all__ = [
    "BudgetExceededError",
    "ComputationError",
    "InvariantViolation",
    "__version__",
]
