"""Orders on the solvable Baumslag-Solitar groups from the affine action.

An element acts on the line as x -> l^k x + b.  Fix an irrational
point eps in a real quadratic field; the element is positive when it
moves eps to the right.  Irrationality rules out ties: l^k eps + b =
eps forces either k = 0, b = 0 (the identity) or eps rational.
"""

from fractions import Fraction

from ..quadratic import QuadExpr
from .base import OrderOracle


class SmirnovOracle(OrderOracle):
    """sign(g) = sign(g(eps) - eps) for the affine action."""

    def __init__(self, group, eps: QuadExpr):
        if not group.name.startswith("bs:"):
            raise ValueError(
                "this order lives on the affine Baumslag-Solitar groups")
        if not isinstance(eps, QuadExpr) or eps.is_rational():
            raise ValueError(
                "the base point must be irrational; rational points give "
                "ties and only a partial order")
        super().__init__(group)
        self.eps = eps
        self.name = f"smirnov(eps={eps!r})"

    def sign(self, x) -> int:
        k, beta = x
        slope = Fraction(self.group.multiplier) ** k
        return ((slope - 1) * self.eps + beta).sign()
