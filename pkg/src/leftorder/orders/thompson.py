"""Four orders on Thompson's group F from germs at the ends of support.

A nontrivial element is the identity near 0 up to some point x^- where
its right derivative first differs from 1, and near 1 down to some x^+
where its left derivative last differs from 1.  Reading the sign of
log of that derivative, at either end and with either orientation,
gives four total left orders.
"""

from fractions import Fraction

from .base import OrderOracle

VARIANTS = ("xminus+", "xminus-", "xplus+", "xplus-")


def left_end_derivative(f) -> Fraction:
    """Right derivative at the first departure from the identity."""
    xs = [x for x, _ in f.breakpoints if 0 <= x < 1]
    if not xs or xs[0] != 0:
        xs.insert(0, Fraction(0))
    for u in xs:
        s = f.slope_right(u)
        if s != 1:
            return s
    raise ValueError("the identity has no support")


def right_end_derivative(f) -> Fraction:
    """Left derivative at the last departure from the identity."""
    xs = [x for x, _ in f.breakpoints if 0 < x <= 1]
    if not xs or xs[-1] != 1:
        xs.append(Fraction(1))
    for v in reversed(xs):
        s = f.slope_left(v)
        if s != 1:
            return s
    raise ValueError("the identity has no support")


class ThompsonOracle(OrderOracle):
    """One of the four germ orders, chosen by end and orientation."""

    def __init__(self, group, variant: str):
        if group.name != "thompsonF":
            raise ValueError("these orders live on Thompson's group F")
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        super().__init__(group)
        self.variant = variant
        self.name = f"thompson({variant})"

    def sign(self, f) -> int:
        if f.is_identity():
            return 0
        if self.variant == "xminus+":
            return 1 if left_end_derivative(f) > 1 else -1
        if self.variant == "xminus-":
            return 1 if left_end_derivative(f) < 1 else -1
        if self.variant == "xplus+":
            return 1 if right_end_derivative(f) < 1 else -1
        return 1 if right_end_derivative(f) > 1 else -1
