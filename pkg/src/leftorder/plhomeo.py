"""Exact piecewise-linear homeomorphisms of the real line.

A PLHomeo is given by finitely many breakpoints with values, plus a slope
for each unbounded tail.  Everything (evaluation, composition, inversion,
fixed points, integration) is exact over Fraction.  Orientation-preserving
is enforced: values strictly increase and all slopes are positive.
"""

from bisect import bisect_right
from fractions import Fraction
from typing import List, Sequence, Tuple

Pair = Tuple[Fraction, Fraction]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PLHomeo:
    def __init__(self, points: Sequence[Tuple], left_slope, right_slope):
        pts = [(_frac(x), _frac(y)) for x, y in points]
        if not pts:
            raise ValueError("need at least one breakpoint (use identity()/translation())")
        self.left_slope = _frac(left_slope)
        self.right_slope = _frac(right_slope)
        if self.left_slope <= 0 or self.right_slope <= 0:
            raise ValueError("tail slopes must be positive")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise ValueError("breakpoints must strictly increase")
            if y1 <= y0:
                raise ValueError("values must strictly increase")
        self._xs = [x for x, _ in pts]
        self._ys = [y for _, y in pts]
        self._canonicalize()

    def _canonicalize(self):
        # drop breakpoints where the incoming and outgoing slopes agree
        xs, ys = self._xs, self._ys
        keep_x: List[Fraction] = []
        keep_y: List[Fraction] = []
        n = len(xs)
        for i in range(n):
            sl_in = self.left_slope if i == 0 else (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1])
            sl_out = self.right_slope if i == n - 1 else (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            if sl_in != sl_out or n == 1:
                keep_x.append(xs[i])
                keep_y.append(ys[i])
        if not keep_x:
            # globally affine; keep a single anchor
            keep_x, keep_y = [xs[0]], [ys[0]]
        self._xs, self._ys = keep_x, keep_y

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity() -> "PLHomeo":
        return PLHomeo([(0, 0)], 1, 1)

    @staticmethod
    def translation(c) -> "PLHomeo":
        c = _frac(c)
        return PLHomeo([(0, c)], 1, 1)

    @staticmethod
    def affine(slope, intercept) -> "PLHomeo":
        slope = _frac(slope)
        intercept = _frac(intercept)
        if slope <= 0:
            raise ValueError("slope must be positive")
        return PLHomeo([(0, intercept)], slope, slope)

    @staticmethod
    def from_pairs(points, left_slope=1, right_slope=1) -> "PLHomeo":
        return PLHomeo(points, left_slope, right_slope)

    # -- basic queries -----------------------------------------------------

    @property
    def breakpoints(self) -> List[Pair]:
        return list(zip(self._xs, self._ys))

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        xs, ys = self._xs, self._ys
        i = bisect_right(xs, x)
        if i == 0:
            return ys[0] + self.left_slope * (x - xs[0])
        if i == len(xs):
            return ys[-1] + self.right_slope * (x - xs[-1])
        x0, y0 = xs[i - 1], ys[i - 1]
        x1, y1 = xs[i], ys[i]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def slope_right(self, x) -> Fraction:
        """Right lateral derivative at x."""
        x = _frac(x)
        xs, ys = self._xs, self._ys
        i = bisect_right(xs, x)
        if i == len(xs):
            return self.right_slope
        if i == 0 and x < xs[0]:
            return self.left_slope
        x1, y1 = xs[i], ys[i]
        x0, y0 = (xs[i - 1], ys[i - 1]) if i > 0 else (x, self(x))
        if x0 == x1:
            return self.right_slope
        return (y1 - y0) / (x1 - x0)

    def slope_left(self, x) -> Fraction:
        """Left lateral derivative at x."""
        x = _frac(x)
        xs, ys = self._xs, self._ys
        i = bisect_right(xs, x)
        if i == 0:
            return self.left_slope
        if x > xs[-1]:
            return self.right_slope
        x0, y0 = xs[i - 1], ys[i - 1]
        if x0 == x:
            if i == 1:
                return self.left_slope
            x0, y0 = xs[i - 2], ys[i - 2]
            return (ys[i - 1] - y0) / (xs[i - 1] - x0)
        x1, y1 = xs[i], ys[i]
        return (y1 - y0) / (x1 - x0)

    def slopes(self) -> List[Fraction]:
        """All slopes left tail to right tail, in order."""
        out = [self.left_slope]
        for (x0, y0), (x1, y1) in zip(self.breakpoints, self.breakpoints[1:]):
            out.append((y1 - y0) / (x1 - x0))
        out.append(self.right_slope)
        return out

    def is_identity(self) -> bool:
        return (
            self.left_slope == 1
            and self.right_slope == 1
            and all(x == y for x, y in zip(self._xs, self._ys))
            and len(self._xs) == 1
        )

    def __eq__(self, other):
        if not isinstance(other, PLHomeo):
            return NotImplemented
        if self.left_slope != other.left_slope or self.right_slope != other.right_slope:
            return False
        if self._is_affine() and other._is_affine():
            return self.left_slope == other.left_slope and self(0) == other(0)
        return self._xs == other._xs and self._ys == other._ys

    def _is_affine(self) -> bool:
        return len(self._xs) == 1 and self.left_slope == self.right_slope

    def __hash__(self):
        if self._is_affine():
            return hash(("affine", self.left_slope, self(0)))
        return hash((tuple(self._xs), tuple(self._ys), self.left_slope, self.right_slope))

    def __repr__(self):
        pts = ", ".join(f"({x},{y})" for x, y in self.breakpoints)
        return f"PLHomeo([{pts}], left={self.left_slope}, right={self.right_slope})"

    # -- group operations --------------------------------------------------

    def inverse(self) -> "PLHomeo":
        return PLHomeo(
            [(y, x) for x, y in self.breakpoints],
            1 / self.left_slope,
            1 / self.right_slope,
        )

    def compose(self, other: "PLHomeo") -> "PLHomeo":
        """self after other: x -> self(other(x))."""
        inv = other.inverse()
        cut_xs = set(other._xs)
        for x in self._xs:
            cut_xs.add(inv(x))
        xs = sorted(cut_xs)
        pts = [(x, self(other(x))) for x in xs]
        return PLHomeo(
            pts,
            self._slope_at_minus_inf() * other.left_slope,
            self._slope_at_plus_inf() * other.right_slope,
        )

    def _slope_at_minus_inf(self) -> Fraction:
        return self.left_slope

    def _slope_at_plus_inf(self) -> Fraction:
        return self.right_slope

    def __mul__(self, other):
        if not isinstance(other, PLHomeo):
            return NotImplemented
        return self.compose(other)

    def power(self, k: int) -> "PLHomeo":
        if k == 0:
            return PLHomeo.identity()
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out.compose(base)
        return out

    # -- analysis ----------------------------------------------------------

    def fixed_points_in(self, a, b) -> List[Fraction]:
        """All isolated solutions of f(x) = x in [a, b] (exact).

        On a segment where f coincides with the identity, the segment's
        endpoints inside [a, b] are reported.
        """
        a, b = _frac(a), _frac(b)
        if a > b:
            raise ValueError("empty interval")
        cuts = [a] + [x for x in self._xs if a < x < b] + [b]
        found: List[Fraction] = []

        def _push(x):
            if a <= x <= b and (not found or found[-1] != x):
                found.append(x)

        for x0, x1 in zip(cuts, cuts[1:]):
            y0, y1 = self(x0) - x0, self(x1) - x1
            if y0 == 0:
                _push(x0)
            if y0 == y1 == 0:
                _push(x1)
                continue
            if y0 * y1 < 0:
                # linear segment of f(x)-x crosses zero
                slope = (y1 - y0) / (x1 - x0)
                _push(x0 - y0 / slope)
            if y1 == 0:
                _push(x1)
        return found

    def integrate(self, a, b) -> Fraction:
        """Exact integral of f over [a, b] (a <= b)."""
        a, b = _frac(a), _frac(b)
        if a > b:
            raise ValueError("integrate expects a <= b")
        cuts = [a] + [x for x in self._xs if a < x < b] + [b]
        total = Fraction(0)
        for x0, x1 in zip(cuts, cuts[1:]):
            total += (self(x0) + self(x1)) * (x1 - x0) / 2
        return total
