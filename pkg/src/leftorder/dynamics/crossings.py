"""Crossings and the Conradian property at ball scale.

A crossing (f, g; u, v, w) certifies non-Conradian behaviour: g pushes
u up past w, f pushes v down past w, yet the g-orbit of u stays below
v and the f-orbit of v stays above u.  The search here is recipe
driven: whenever positive f, g violate the inequality fg^2 > g, the
pair (f, fg) satisfies f (fg)^n < fg for every n, which yields
crossings with u = id and v = g.  Comparison elements w are drawn from
the ball, smallest first; exponent quantifiers are truncated at a
stated bound, so verdicts are ball approximations.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from ..errors import InvariantViolation
from ..words import Word, concat
from .. import orders as _orders


@dataclass(frozen=True)
class Crossing:
    """A verified crossing; elements are stored as words."""

    f: Word
    g: Word
    u: Word
    v: Word
    w: Word
    M: int
    N: int

    def describe(self, alphabet) -> str:
        parts = [alphabet.format(x) if x else "id"
                 for x in (self.f, self.g, self.u, self.v, self.w)]
        return ("({}, {}; {}, {}, {}) with M={}, N={}"
                .format(*parts, self.M, self.N))


class _Evaluator:
    """Sign/compare helper with a per-instance cache on group keys."""

    def __init__(self, oracle):
        self.oracle = oracle
        self.group = oracle.group
        self._signs = {}
        self._violations = {}

    def sign(self, payload) -> int:
        k = self.group.key(payload)
        s = self._signs.get(k)
        if s is None:
            s = self.oracle.sign(payload)
            self._signs[k] = s
        return s

    def less(self, x, y) -> bool:
        return self.sign(self.group.mul(self.group.inv(x), y)) > 0

    def powers(self, payload, count: int) -> List:
        """payload^1 .. payload^count."""
        out = [payload]
        for _ in range(count - 1):
            out.append(self.group.mul(out[-1], payload))
        return out

    def violation_pairs(self, radius: int) -> Iterator[Tuple]:
        """Cached lazy sweep; memoized once fully consumed."""
        cached = self._violations.get(radius)
        if cached is not None:
            yield from cached
            return
        acc = []
        for item in _violation_pairs(self, radius):
            acc.append(item)
            yield item
        self._violations[radius] = acc


def verify_crossing(oracle, crossing: Crossing, exponent_bound: int) -> bool:
    """Check the five defining inequality groups, exponents truncated."""
    ev = _Evaluator(oracle)
    group = ev.group
    f, g, u, v, w = (group.eval_word(x)
                     for x in (crossing.f, crossing.g, crossing.u,
                               crossing.v, crossing.w))
    if not (ev.less(u, w) and ev.less(w, v)):
        return False
    bound = max(exponent_bound, crossing.M, crossing.N)
    fp = ev.powers(f, bound)
    gp = ev.powers(g, bound)
    for n in range(bound):
        if not ev.less(group.mul(gp[n], u), v):
            return False
        if not ev.less(u, group.mul(fp[n], v)):
            return False
    return (ev.less(group.mul(fp[crossing.N - 1], v), w)
            and ev.less(w, group.mul(gp[crossing.M - 1], u)))


def _violation_pairs(ev: _Evaluator, radius: int) -> Iterator[Tuple]:
    """Positive pairs (f, g) with fg^2 < g, in canonical ball order."""
    group = ev.group
    positives = [(wd, p) for wd, p in group.ball(radius)
                 if wd != () and ev.sign(p) > 0]
    for fw, fp in positives:
        for gw, gp in positives:
            x = group.mul(group.mul(group.inv(gp), fp), group.mul(gp, gp))
            if ev.sign(x) < 0:
                yield fw, fp, gw, gp


def _crossings_from_pair(ev: _Evaluator, radius: int, exponent_bound: int,
                         fw: Word, fp, gw: Word, gp,
                         first_only: bool) -> Iterator[Crossing]:
    """Verified crossings (f, fg; id, g, w) with w from the ball.

    From positive f, g with fg^2 < g the element h := fg satisfies
    f h^n < h, equivalently h^n < g, for every n; together with
    positivity of f^n g this gives a crossing for any w strictly
    between some f^N g and some h^M.
    """
    group = ev.group
    h = group.mul(fp, gp)
    hw = concat(fw, gw)
    hp = ev.powers(h, exponent_bound)
    fpows = ev.powers(fp, exponent_bound)
    fng = [group.mul(x, gp) for x in fpows]
    # truncated pair-level universals (theorems for a true left order,
    # re-checked here so a broken oracle cannot smuggle in a crossing)
    if not all(ev.less(x, gp) for x in hp):
        return
    if not all(ev.sign(x) > 0 for x in fng):
        return
    for wd, wp in group.ball(radius):
        if wd == ():
            continue
        if not (ev.sign(wp) > 0 and ev.less(wp, gp)):
            continue
        n_exp = next((n + 1 for n in range(exponent_bound)
                      if ev.less(fng[n], wp)), None)
        if n_exp is None:
            continue
        m_exp = next((m + 1 for m in range(exponent_bound)
                      if ev.less(wp, hp[m])), None)
        if m_exp is None:
            continue
        yield Crossing(f=fw, g=hw, u=(), v=gw, w=wd, M=m_exp, N=n_exp)
        if first_only:
            return


def find_crossing(oracle, radius: int, exponent_bound: int,
                  evaluator: Optional[_Evaluator] = None) -> Optional[Crossing]:
    """First verified crossing in canonical search order, or None.

    None means no crossing was found within these bounds (violating
    pairs from the ball, comparison element in the ball, exponents
    truncated); it is not a proof that the order is Conradian.
    """
    ev = evaluator if evaluator is not None else _Evaluator(oracle)
    for fw, fp, gw, gp in ev.violation_pairs(radius):
        for crossing in _crossings_from_pair(ev, radius, exponent_bound,
                                             fw, fp, gw, gp, True):
            if not verify_crossing(oracle, crossing, exponent_bound):
                raise InvariantViolation(
                    "recipe crossing failed re-verification",
                    witness=crossing)
            return crossing
    return None


def find_crossings(oracle, radius: int,
                   exponent_bound: int) -> List[Crossing]:
    """All verified recipe crossings (used by the soul computation)."""
    ev = _Evaluator(oracle)
    out = []
    for fw, fp, gw, gp in ev.violation_pairs(radius):
        out.extend(_crossings_from_pair(ev, radius, exponent_bound,
                                        fw, fp, gw, gp, False))
    return out


_CROSS_CHECK_BOUND = 4


def is_conradian_ball(oracle, radius: int):
    """Does fg^2 > g hold for all positive pairs of the ball?

    Returns (verdict, witness); the witness is the first violating
    pair of ball words, None on a clean sweep.  The verdict is
    cross-checked against the crossing search: a verified crossing
    despite a clean sweep is an internal inconsistency.
    """
    ev = _Evaluator(oracle)
    first = next(ev.violation_pairs(radius), None)
    crossing = find_crossing(oracle, radius, _CROSS_CHECK_BOUND,
                             evaluator=ev)
    if first is None and crossing is not None:
        raise InvariantViolation(
            "no fg^2 < g violation in the ball, yet a crossing was "
            f"verified: {crossing.describe(oracle.group.alphabet)}",
            witness=crossing)
    if first is None:
        return True, None
    return False, (first[0], first[2])


def _minimal_crossing_w(ev: _Evaluator, radius: int, exponent_bound: int):
    """The order-smallest comparison element over all recipe crossings.

    For a fixed violating pair the verified w form an order interval,
    so only the successor of f^B g among the sorted ball positives can
    be that pair's minimum; minimising over pairs gives the global one
    without enumerating every crossing.  Returns a payload or None.
    """
    from functools import cmp_to_key
    group = ev.group
    positives = [p for wd, p in group.ball(radius)
                 if wd != () and ev.sign(p) > 0]
    positives.sort(key=cmp_to_key(
        lambda x, y: -1 if ev.less(x, y) else 1))
    best = None
    for _, fp, _, gp in ev.violation_pairs(radius):
        h = group.mul(fp, gp)
        hp = ev.powers(h, exponent_bound)
        fpows = ev.powers(fp, exponent_bound)
        if not all(ev.less(x, gp) for x in hp):
            continue
        if not all(ev.sign(group.mul(x, gp)) > 0 for x in fpows):
            continue
        lower = group.mul(fpows[-1], gp)
        lo, hi = 0, len(positives)
        while lo < hi:
            mid = (lo + hi) // 2
            if ev.less(lower, positives[mid]):
                hi = mid
            else:
                lo = mid + 1
        if lo == len(positives):
            continue
        w = positives[lo]
        if not (ev.less(w, gp) and ev.less(w, hp[-1])):
            continue
        if best is None or ev.less(w, best):
            best = w
    return best


def conradian_soul_ball(oracle, radius: int, exponent_bound: int) -> List[Word]:
    """Ball approximation of the largest convex Conradian core.

    Keeps the positive elements lying at or below every recipe
    crossing's comparison element w (equivalently, below the smallest
    such w); negatives are handled symmetrically through the reversed
    order.  With no crossings found the whole ball qualifies.  The
    result is an approximation from above: growing the bounds can
    only shrink it.
    """
    group = oracle.group
    ball = group.ball(radius)

    def positive_part(o) -> set:
        ev = _Evaluator(o)
        cut = _minimal_crossing_w(ev, radius, exponent_bound)
        return {wd for wd, p in ball
                if wd != () and ev.sign(p) > 0
                and (cut is None or not ev.less(cut, p))}

    plus = positive_part(oracle)
    minus = positive_part(_orders.ReversedOracle(oracle))
    return [wd for wd, _ in ball if wd == () or wd in plus or wd in minus]
