"""Thompson's group F: dyadic piecewise linear homeomorphisms of [0, 1].

Payloads are PLHomeo values fixing [0, 1] pointwise outside, with
dyadic rational breakpoints and power-of-two slopes.  The standard
generators are

    x0: t/2 on [0, 1/2],  t - 1/4 on [1/2, 3/4],  2t - 1 on [3/4, 1]
    x1: identity on [0, 1/2], then a scaled copy of x0 on [1/2, 1].
"""

from fractions import Fraction

from ..plhomeo import PLHomeo
from .base import Group


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def _is_power_of_two(q: Fraction) -> bool:
    if q <= 0:
        return False
    return (q.numerator == 1 and q.denominator & (q.denominator - 1) == 0) or (
        q.denominator == 1 and q.numerator & (q.numerator - 1) == 0
    )


def check_thompson(f: PLHomeo) -> PLHomeo:
    """Validate membership: fixes 0 and 1, dyadic breaks, 2-power slopes."""
    if f(0) != 0 or f(1) != 1:
        raise ValueError("map must fix 0 and 1")
    for x, y in f.breakpoints:
        if not (0 <= x <= 1):
            raise ValueError(f"breakpoint {x} outside [0, 1]")
        if not (_is_dyadic(x) and _is_dyadic(y)):
            raise ValueError(f"non-dyadic breakpoint ({x}, {y})")
    for s in f.slopes():
        if not _is_power_of_two(s):
            raise ValueError(f"slope {s} is not a power of two")
    return f


def generator_x0() -> PLHomeo:
    return PLHomeo.from_pairs(
        [(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)]
    )


def generator_x1() -> PLHomeo:
    return PLHomeo.from_pairs(
        [
            (0, 0),
            (Fraction(1, 2), Fraction(1, 2)),
            (Fraction(3, 4), Fraction(5, 8)),
            (Fraction(7, 8), Fraction(3, 4)),
            (1, 1),
        ]
    )


class ThompsonFGroup(Group):
    name = "thompsonF"
    generator_names = ("x0", "x1")

    def __init__(self):
        self._gens = (check_thompson(generator_x0()), check_thompson(generator_x1()))

    def identity(self) -> PLHomeo:
        return PLHomeo.identity()

    def letter_payload(self, letter) -> PLHomeo:
        index, sign = letter
        g = self._gens[index]
        return g if sign > 0 else g.inverse()

    def mul(self, x: PLHomeo, y: PLHomeo) -> PLHomeo:
        return x * y

    def inv(self, x: PLHomeo) -> PLHomeo:
        return x.inverse()

    def key(self, x: PLHomeo):
        return x  # PLHomeo hashes by canonical form

    def is_identity(self, x: PLHomeo) -> bool:
        return x.is_identity()
