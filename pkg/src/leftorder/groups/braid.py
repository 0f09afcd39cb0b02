"""Artin braid groups.

Payloads are freely reduced words in the band generators s1..s(n-1).
Exact equality is decided through the reduced Burau representation,
which is faithful for three strands; for more strands the word problem
needs different machinery, so ``key`` refuses rather than guess.
"""

from functools import lru_cache

from ..errors import ComputationError
from ..words import Word, concat, inverse
from .base import Group

# Laurent polynomials in t: dict exponent -> nonzero int coefficient.


def _ladd(p, q):
    out = dict(p)
    for e, c in q.items():
        c2 = out.get(e, 0) + c
        if c2:
            out[e] = c2
        else:
            out.pop(e, None)
    return out


def _lmul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def _lcanon(p):
    return tuple(sorted(p.items()))


def _mat_mul(a, b):
    (a11, a12), (a21, a22) = a
    (b11, b12), (b21, b22) = b
    return (
        (_ladd(_lmul(a11, b11), _lmul(a12, b21)), _ladd(_lmul(a11, b12), _lmul(a12, b22))),
        (_ladd(_lmul(a21, b11), _lmul(a22, b21)), _ladd(_lmul(a21, b12), _lmul(a22, b22))),
    )


_ONE = {0: 1}
_ZERO = {}

# Reduced Burau matrices for B_3 and their inverses.
_BURAU = {
    (0, 1): (({1: -1}, _ONE), (_ZERO, _ONE)),
    (0, -1): (({-1: -1}, {-1: 1}), (_ZERO, _ONE)),
    (1, 1): ((_ONE, _ZERO), ({1: 1}, {1: -1})),
    (1, -1): ((_ONE, _ZERO), (_ONE, {-1: -1})),
}

_BURAU_ID = ((_ONE, _ZERO), (_ZERO, _ONE))


@lru_cache(maxsize=None)
def _burau_word(word: Word):
    if not word:
        return _BURAU_ID
    return _mat_mul(_burau_word(word[:-1]), _BURAU[word[-1]])


class BraidGroup(Group):
    def __init__(self, strands: int):
        if strands < 2:
            raise ValueError("need at least 2 strands")
        self.strands = strands
        self.name = f"braid:{strands}"
        self.generator_names = tuple(f"s{i + 1}" for i in range(strands - 1))

    def identity(self) -> Word:
        return ()

    def letter_payload(self, letter) -> Word:
        return (letter,)

    def mul(self, x: Word, y: Word) -> Word:
        return concat(x, y)

    def inv(self, x: Word) -> Word:
        return inverse(x)

    def key(self, x: Word):
        if self.strands != 3:
            raise ComputationError(
                "exact equality is only implemented for 3 strands "
                "(reduced Burau is faithful there)"
            )
        m = _burau_word(x)
        return (
            _lcanon(m[0][0]), _lcanon(m[0][1]),
            _lcanon(m[1][0]), _lcanon(m[1][1]),
        )

    def is_identity(self, x: Word) -> bool:
        if not x:
            return True
        return self.key(x) == self.key(())
