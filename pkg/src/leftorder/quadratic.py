"""Exact arithmetic for real quadratic irrationals p + q*sqrt(d).

Order parameters (the slope of a plane order, the eigenvalue of an affine
order) live in a real quadratic field.  All comparisons are exact: the sign
of p + q*sqrt(d) is decided by integer arithmetic, never by floating point.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


class QuadExpr:
    """p + q*sqrt(d) with rational p, q and a fixed non-square d >= 2."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p: Rational, q: Rational, d: int):
        if d < 2 or _is_square(d):
            raise ValueError(f"d must be a non-square integer >= 2, got {d}")
        self.p = Fraction(p)
        self.q = Fraction(q)
        self.d = d

    @staticmethod
    def rational(p: Rational, d: int = 2) -> "QuadExpr":
        return QuadExpr(p, 0, d)

    @staticmethod
    def sqrt(d: int) -> "QuadExpr":
        return QuadExpr(0, 1, d)

    def is_rational(self) -> bool:
        return self.q == 0

    @staticmethod
    @lru_cache(maxsize=None)
    def _sign(p: Fraction, q: Fraction, d: int) -> int:
        # sign of p + q*sqrt(d); p*p == q*q*d cannot happen for q != 0
        # because d is not a square.
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        if p > 0:  # q < 0
            return 1 if p * p > q * q * d else -1
        return 1 if p * p < q * q * d else -1  # p < 0, q > 0

    def sign(self) -> int:
        return QuadExpr._sign(self.p, self.q, self.d)

    def _coerce(self, other) -> "QuadExpr":
        if isinstance(other, QuadExpr):
            if other.d != self.d and self.q != 0 and other.q != 0:
                raise ValueError(f"mixed radicands {self.d} and {other.d}")
            d = self.d if self.q != 0 or other.q == 0 else other.d
            return QuadExpr(other.p, other.q, d) if other.d != d else other
        if isinstance(other, (int, Fraction)):
            return QuadExpr(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExpr(self.p + other.p, self.q + other.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExpr(-self.p, -self.q, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExpr(
            self.p * other.p + self.q * other.q * self.d,
            self.p * other.q + self.q * other.p,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExpr":
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExpr(self.p / norm, -self.q / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def _cmp(self, other) -> int:
        diff = self - self._coerce(other)
        return diff.sign()

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except (ValueError, TypeError):
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __float__(self):
        return float(self.p) + float(self.q) * self.d**0.5

    def __repr__(self):
        if self.q == 0:
            return f"{self.p}"
        return f"{self.p}+{self.q}*sqrt{self.d}"


_QUAD_RE = re.compile(
    r"^(?:(?P<p>-?\d+(?:/\d+)?)(?P<op>[+-]))?"
    r"(?:(?P<q>\d+(?:/\d+)?)\*)?sqrt(?P<d>\d+)$"
)


def parse_quadratic(text: str) -> QuadExpr:
    """Parse `sqrt2`, `1+1*sqrt2`, `3/2-1/2*sqrt5`, or a plain rational."""
    text = text.strip().replace(" ", "")
    m = _QUAD_RE.match(text)
    if m:
        p = Fraction(m.group("p")) if m.group("p") else Fraction(0)
        q = Fraction(m.group("q")) if m.group("q") else Fraction(1)
        if m.group("op") == "-":
            q = -q
        return QuadExpr(p, q, int(m.group("d")))
    try:
        return QuadExpr(Fraction(text), 0, 2)
    except ValueError:
        raise ValueError(f"cannot parse quadratic expression {text!r}") from None
