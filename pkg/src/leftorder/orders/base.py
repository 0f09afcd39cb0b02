"""Order oracles: total left-invariant orders presented through sign maps.

An oracle decides, for any group element, whether it is positive,
negative or the identity in some fixed left order.  Comparisons reduce
to signs through left invariance: x < y iff x^-1 y is positive.
"""

from typing import Any, List, Tuple

from ..errors import InvariantViolation
from ..words import Word


class OrderOracle:
    """Base class; subclasses set ``group``/``name`` and implement sign()."""

    name: str = "order"
    bi_invariant: bool = False

    def __init__(self, group):
        self.group = group

    def sign(self, x: Any) -> int:
        """-1, 0 or +1 for a group payload."""
        raise NotImplementedError

    def sign_word(self, word: Word) -> int:
        return self.sign(self.group.eval_word(word))

    def compare(self, x: Any, y: Any) -> int:
        """-1 if x < y, 0 if equal, +1 if x > y."""
        return -self.sign(self.group.mul(self.group.inv(x), y))

    def positive_cone_ball(self, radius: int) -> List[Tuple[Word, Any]]:
        return [(w, p) for w, p in self.group.ball(radius) if self.sign(p) > 0]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} on {self.group.name}>"


def check_order_invariants(oracle: OrderOracle, radius: int) -> None:
    """Raise InvariantViolation if the oracle misbehaves on the ball.

    Checks the trichotomy (sign 0 exactly for the identity),
    antisymmetry under inversion, closure of the positive cone under
    products that stay in the ball, and conjugation invariance when the
    oracle claims a bi-order.
    """
    group = oracle.group
    ball = group.ball(radius)
    signs = {}
    for word, payload in ball:
        s = oracle.sign(payload)
        if group.is_identity(payload):
            if s != 0:
                raise InvariantViolation(
                    f"{oracle!r}: identity got sign {s}", witness=word)
        elif s not in (-1, 1):
            raise InvariantViolation(
                f"{oracle!r}: {word} got sign {s}", witness=word)
        signs[group.key(payload)] = s
        inv = group.inv(payload)
        if oracle.sign(inv) != -s:
            raise InvariantViolation(
                f"{oracle!r}: inversion does not negate sign of {word}",
                witness=word)
    positives = [(w, p) for w, p in ball if signs[group.key(p)] > 0]
    in_ball = set(signs)
    for w1, p1 in positives:
        for w2, p2 in positives:
            prod = group.mul(p1, p2)
            k = group.key(prod)
            if k in in_ball and signs[k] <= 0:
                raise InvariantViolation(
                    f"{oracle!r}: cone not closed: ({w1})*({w2})",
                    witness=(w1, w2))
    if oracle.bi_invariant:
        # conjugating by every generator letter suffices: conjugation by
        # a product is the composite of conjugations
        for letter in group.alphabet.letters():
            g = group.letter_payload(letter)
            ginv = group.inv(g)
            for w, p in ball:
                conj = group.mul(group.mul(g, p), ginv)
                if oracle.sign(conj) != signs[group.key(p)]:
                    raise InvariantViolation(
                        f"{oracle!r}: conjugation by {letter} changes "
                        f"sign of {w}", witness=(letter, w))


class ReversedOracle(OrderOracle):
    def __init__(self, inner: OrderOracle):
        super().__init__(inner.group)
        self.inner = inner
        self.name = f"reverse({inner.name})"
        self.bi_invariant = inner.bi_invariant

    def sign(self, x):
        return -self.inner.sign(x)


class ConjugatedOracle(OrderOracle):
    """Order with positive cone f P f^-1: sign(g) = inner(f^-1 g f)."""

    def __init__(self, inner: OrderOracle, conjugator):
        super().__init__(inner.group)
        self.inner = inner
        self.conjugator = conjugator
        self._inv = inner.group.inv(conjugator)
        self.name = f"conjugate({inner.name})"
        self.bi_invariant = inner.bi_invariant

    def sign(self, x):
        g = self.group
        return self.inner.sign(g.mul(g.mul(self._inv, x), self.conjugator))


class FlippedOracle(OrderOracle):
    """Reverse the order inside a convex subgroup, keep it outside."""

    def __init__(self, inner: OrderOracle, member, check_radius: int = 3):
        super().__init__(inner.group)
        self.inner = inner
        self.member = member
        self.name = f"flip({inner.name})"
        if check_radius:
            _check_convex_subgroup(inner, member, check_radius)

    def sign(self, x):
        s = self.inner.sign(x)
        return -s if self.member(x) else s


class ConvexExtensionOracle(OrderOracle):
    """Outer order off the convex subgroup, inner order on it."""

    def __init__(self, outer: OrderOracle, inner: OrderOracle, member,
                 check_radius: int = 3):
        super().__init__(outer.group)
        self.outer = outer
        self.inner = inner
        self.member = member
        self.name = f"extend({outer.name},{inner.name})"
        if check_radius:
            _check_convex_subgroup(outer, member, check_radius)

    def sign(self, x):
        return self.inner.sign(x) if self.member(x) else self.outer.sign(x)


def _check_convex_subgroup(oracle: OrderOracle, member, radius: int) -> None:
    """Validate that ``member`` cuts out a convex subgroup on the ball.

    Rejection carries a witness triple x <= y <= z with x, z inside and
    y outside (or a closure witness pair).
    """
    group = oracle.group
    ball = group.ball(radius)
    inside = [(w, p) for w, p in ball if member(p)]
    if not any(group.is_identity(p) for _, p in inside):
        raise InvariantViolation("subgroup predicate rejects the identity",
                                 witness=())
    for w, p in inside:
        if not member(group.inv(p)):
            raise InvariantViolation(
                f"predicate not closed under inverse: {w}", witness=w)
    in_ball = {group.key(p) for _, p in ball}
    for w1, p1 in inside:
        for w2, p2 in inside:
            prod = group.mul(p1, p2)
            if group.key(prod) in in_ball and not member(prod):
                raise InvariantViolation(
                    f"predicate not closed under product: ({w1})*({w2})",
                    witness=(w1, w2))
    # convexity: no outside element strictly between two inside ones
    outside = [(w, p) for w, p in ball if not member(p)]
    for wy, y in outside:
        below = next((wx for wx, x in inside if oracle.compare(x, y) < 0), None)
        above = next((wz for wz, z in inside if oracle.compare(y, z) < 0), None)
        if below is not None and above is not None:
            raise InvariantViolation(
                f"convexity fails: {below} < {wy} < {above}",
                witness=(below, wy, above))
