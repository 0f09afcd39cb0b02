"""Solvable Baumslag-Solitar groups BS(1, l) as affine maps x -> l^k x + beta.

Generators: g is the unit translation, h is multiplication by l, so
h g h^-1 = g^l.  Payloads are (k, beta) with beta an exact Fraction
whose denominator is a power of l.
"""

from fractions import Fraction

from .base import Group


class BaumslagSolitarGroup(Group):
    def __init__(self, multiplier: int):
        if multiplier < 2:
            raise ValueError("multiplier must be at least 2")
        self.multiplier = multiplier
        self.name = f"bs:{multiplier}"
        self.generator_names = ("g", "h")

    def identity(self):
        return (0, Fraction(0))

    def letter_payload(self, letter):
        index, sign = letter
        if index == 0:  # translation
            return (0, Fraction(sign))
        if sign > 0:  # scaling
            return (1, Fraction(0))
        return (-1, Fraction(0))

    def mul(self, x, y):
        # composition: apply y first, then x
        k1, b1 = x
        k2, b2 = y
        return (k1 + k2, Fraction(self.multiplier) ** k1 * b2 + b1)

    def inv(self, x):
        k, b = x
        return (-k, -(Fraction(self.multiplier) ** -k) * b)

    def key(self, x):
        return x

    def is_identity(self, x):
        return x == (0, 0)

    def as_map(self, x):
        """The affine map x -> l^k x + beta as a (slope, intercept) pair."""
        k, b = x
        return (Fraction(self.multiplier) ** k, b)
