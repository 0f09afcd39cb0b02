"""The wreath product Z wr Z (one walker, integer-valued lamps).

Payloads are (shift, lamps) with lamps a sorted tuple of
(position, value) pairs, values nonzero.

The module also provides Plante's faithful action on the line: the
walker generator acts as the homothety f(x) = 2x, and the lamp
generator as a map g0 that equals a fixed piecewise linear bump on
I0 = [-1, 1] and is extended outside so that all conjugates
g_i = f^i g0 f^-i commute.  The extension is evaluated lazily: a point
in I_(k+1) minus I_k is conjugated into I_k by powers of g_(k+1), which
works because the bump sends -1/2 to 1/2, making the g_(k+1)-orbit of
I_k tile I_(k+1).  g0 fixes every point +-2^j and exceeds the identity
elsewhere.
"""

from fractions import Fraction

from .base import Group

# -- group payloads -----------------------------------------------------


def _lamp_mul(f, g, shift):
    out = dict(f)
    for pos, val in g:
        p = pos + shift
        v = out.get(p, 0) + val
        if v:
            out[p] = v
        else:
            out.pop(p, None)
    return tuple(sorted(out.items()))


class WreathGroup(Group):
    name = "wreath"
    generator_names = ("t", "a")

    def identity(self):
        return (0, ())

    def letter_payload(self, letter):
        index, sign = letter
        if index == 0:
            return (sign, ())
        return (0, ((0, sign),))

    def mul(self, x, y):
        k1, f1 = x
        k2, f2 = y
        return (k1 + k2, _lamp_mul(f1, f2, k1))

    def inv(self, x):
        k, f = x
        return (-k, tuple(sorted((p - k, -v) for p, v in f)))

    def key(self, x):
        return x

    def is_identity(self, x):
        return x == (0, ())


# -- Plante's action ----------------------------------------------------

_HALF = Fraction(1, 2)


def _bump(x: Fraction) -> Fraction:
    """The core map on [-1, 1]: (-1,-1) -> (-1/2,1/2) -> (1,1)."""
    if x <= -_HALF:
        return 3 * x + 2
    return _HALF + (x + _HALF) / 3


def _bump_inv(y: Fraction) -> Fraction:
    if y <= _HALF:
        return (y - 2) / 3
    return 3 * (y - _HALF) - _HALF


def _is_power_point(x: Fraction) -> bool:
    # x == +-2^j for some j >= 0
    if x < 0:
        x = -x
    if x < 1:
        return False
    return x.denominator == 1 and x.numerator & (x.numerator - 1) == 0


def _level(x: Fraction) -> int:
    """The k >= 0 with 2^k < |x| < 2^(k+1); assumes |x| > 1, not a power of 2."""
    k = 0
    bound = 2
    ax = -x if x < 0 else x
    while ax > bound:
        bound *= 2
        k += 1
    return k


def _scaled(x: Fraction, scale: Fraction, fn) -> Fraction:
    return scale * fn(x / scale)


def plante_g0(x: Fraction, invert: bool = False) -> Fraction:
    """Evaluate the extended lamp map g0 (or its inverse) at x."""
    x = Fraction(x)
    if -1 <= x <= 1:
        return _bump_inv(x) if invert else _bump(x)
    if _is_power_point(x):
        return x
    k = _level(x)
    inner, outer = Fraction(2) ** k, Fraction(2) ** (k + 1)
    # conjugate into I_k by powers of g_(k+1) (a scaled bump there)
    m = 0
    y = x
    if y > 0:
        while y > inner:
            y = _scaled(y, outer, _bump_inv)
            m += 1
    else:
        while y < -inner:
            y = _scaled(y, outer, _bump)
            m -= 1
    z = plante_g0(y, invert)
    for _ in range(abs(m)):
        z = _scaled(z, outer, _bump if m > 0 else _bump_inv)
    return z


class PlanteAction:
    """Apply wreath-group elements to rational points on the line."""

    def lamp(self, i: int, x: Fraction, power: int = 1) -> Fraction:
        scale = Fraction(2) ** i
        for _ in range(abs(power)):
            x = _scaled(x, scale, lambda t: plante_g0(t, invert=power < 0))
        return x

    def apply(self, payload, x: Fraction) -> Fraction:
        """payload = (k, lamps) acts as: first f^k, then the lamps."""
        k, lamps = payload
        x = Fraction(x) * Fraction(2) ** k
        for pos, val in lamps:
            x = self.lamp(pos, x, val)
        return x

    def generator_maps(self):
        """Forward/inverse callables for the generators t and a."""
        return {
            "t": (lambda x: 2 * Fraction(x), lambda x: Fraction(x) / 2),
            "a": (plante_g0, lambda x: plante_g0(x, invert=True)),
        }
