"""The Passman-Promislow group P = <a, b | a^-1 b^2 a = b^-2, b^-1 a^2 b = a^-2>.

P is torsion free but has no unique products.  It acts faithfully on
Z^3 with each coordinate moved by a one-dimensional isometry: either a
translation x -> x + v or a point reflection x -> v - x.  Payloads are
triples of coordinates (v, reflected?) and multiplication composes the
isometries coordinatewise.
"""

from .base import Group

# one-dimensional isometries: (v, False) is x -> x + v, (v, True) is x -> v - x


def _iso_mul(p, q):
    (v, pr), (w, qr) = p, q
    if pr:
        return (v - w, not qr)
    return (v + w, qr)


def _iso_inv(p):
    v, r = p
    return p if r else (-v, False)


class PromislowGroup(Group):
    name = "promislow"
    generator_names = ("a", "b")

    _A = ((1, False), (0, True), (0, True))
    _B = ((0, True), (1, False), (1, True))

    def identity(self):
        return ((0, False),) * 3

    def letter_payload(self, letter):
        index, sign = letter
        g = self._A if index == 0 else self._B
        return g if sign > 0 else self.inv(g)

    def mul(self, x, y):
        return tuple(_iso_mul(p, q) for p, q in zip(x, y))

    def inv(self, x):
        return tuple(_iso_inv(p) for p in x)

    def key(self, x):
        return x

    def is_identity(self, x):
        return x == self.identity()


# The classical fourteen-element witness set with no unique products,
# listed as words in the generators.
WITNESS_WORDS_14 = (
    "b a b a",      # (ba)^2
    "a b a b",      # (ab)^2
    "a^2 b",
    "a b a^-1",
    "b",
    "a b^-1 a",
    "b^-1",
    "a b a",
    "a b^-2",
    "b^2 a^-1",
    "a b a b a",    # a (ba)^2
    "b a b",
    "a",
    "a^-1",
)


def witness_set(group=None):
    """The 14-element set as (label, payload) pairs."""
    group = group or PromislowGroup()
    out = []
    for text in WITNESS_WORDS_14:
        out.append((text, group.eval_word(group.alphabet.parse(text))))
    return out
