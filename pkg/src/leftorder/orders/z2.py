"""Orders on the integer plane: irrational slopes and rational ones.

An irrational functional (m, n) -> lambda*m + n never vanishes off the
origin, so its sign alone is a total order; the space of such orders is
a circle.  A rational functional vanishes on a line of lattice points,
and the order must break ties along that line with a chosen direction.
"""

from math import gcd
from typing import Tuple

from ..quadratic import QuadExpr
from .base import OrderOracle


class IrrationalSlopeOracle(OrderOracle):
    """sign(m, n) = sign(lambda*m + n) for irrational lambda."""

    bi_invariant = True

    def __init__(self, group, slope: QuadExpr):
        if group.name != "zn:2":
            raise ValueError("this order lives on the rank-2 lattice")
        if not isinstance(slope, QuadExpr) or slope.is_rational():
            raise ValueError(
                "a rational slope vanishes on a sublattice; use the "
                "rational-direction order instead")
        super().__init__(group)
        self.slope = slope
        self.name = f"z2(lambda={slope!r})"

    def sign(self, x) -> int:
        m, n = x
        return (self.slope * m + n).sign()


class RationalDirectionOracle(OrderOracle):
    """Rational functional with a tie-breaking direction on its kernel.

    The primary sign is m*x + n*y for a primitive direction (x, y); when
    it vanishes, (m, n) = t * (-y, x)/g and the sign is subsign * sign(t).
    """

    bi_invariant = True

    def __init__(self, group, direction: Tuple[int, int], subsign: int = 1):
        if group.name != "zn:2":
            raise ValueError("this order lives on the rank-2 lattice")
        x, y = direction
        if x == 0 and y == 0:
            raise ValueError("direction must be nonzero")
        if subsign not in (-1, 1):
            raise ValueError("subsign must be +1 or -1")
        super().__init__(group)
        g = gcd(abs(x), abs(y))
        self.direction = (x // g, y // g)
        self.subsign = subsign
        self.name = f"z2rational({self.direction},{'+' if subsign > 0 else '-'})"

    def sign(self, p) -> int:
        m, n = p
        x, y = self.direction
        primary = m * x + n * y
        if primary:
            return 1 if primary > 0 else -1
        # on the kernel line: (m, n) = t * (-y, x), division exact
        t = n // x if x else -(m // y)
        if t == 0:
            return 0
        return self.subsign * (1 if t > 0 else -1)
