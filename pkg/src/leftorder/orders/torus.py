"""The isolated order on torus knot groups <a, b | a^m = b^n>.

In the normal form c^l * w (central generator c = a^m = b^n, w a
positive a,b-word containing no full power of c), the positive cone is
exactly {l > 0} union {l = 0, w nonempty}: the cone is generated as a
semigroup by a and b, which is what makes the order isolated in its
order space.
"""

from .base import OrderOracle


class TorusKnotOracle(OrderOracle):
    """sign from the central exponent, else positivity of the word part."""

    name = "torus"

    def __init__(self, group):
        if not group.name.startswith("torus:"):
            raise ValueError("this order lives on torus knot groups")
        super().__init__(group)

    def sign(self, x) -> int:
        if self.group.is_identity(x):
            return 0
        _, _, central = x
        return -1 if central < 0 else 1
