"""An order on free groups defined by counting descents.

For a reduced word f, phi(f) counts adjacent pairs consisting of a
positive letter followed by a negative letter of strictly smaller
index, minus the adjacent pairs "negative then positive" of the same
shape, plus a half-unit correction for the sign of the final letter.
The positive cone is {f : phi(f) > 0}; the value is always a
half-integer and vanishes only on the trivial word, so the order is
total.  It arises from an action on a binary-sequence boundary, but
the counting form is what we compute.
"""

from fractions import Fraction

from ..words import Word, reduce_letters
from .base import OrderOracle


def sunic_phi(word: Word) -> Fraction:
    """Half-integer invariant deciding the sign of a free-group word."""
    w = reduce_letters(word)
    total = Fraction(0)
    for (j, s1), (i, s2) in zip(w, w[1:]):
        if j > i and s1 > 0 and s2 < 0:
            total += 1
        elif j > i and s1 < 0 and s2 > 0:
            total -= 1
    if w:
        total += Fraction(1, 2) if w[-1][1] > 0 else Fraction(-1, 2)
    return total


class SunicOracle(OrderOracle):
    """Total left order on a free group from the descent count."""

    name = "sunic"

    def __init__(self, group):
        if not group.name.startswith("free:"):
            raise ValueError("this order lives on free groups")
        super().__init__(group)

    def sign(self, x: Word) -> int:
        value = sunic_phi(x)
        if value > 0:
            return 1
        if value < 0:
            return -1
        return 0
