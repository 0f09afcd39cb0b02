"""Magnus expansion order on free groups.

Send the i-th generator to 1 + X_i inside the ring of formal power
series in noncommuting variables, truncate at a degree high enough to
see the first nonzero term, and compare the lowest terms in graded
lexicographic order.  The resulting order is bi-invariant.
"""

from typing import Dict, Tuple

from ..errors import BudgetExceededError
from ..words import Word
from .base import OrderOracle

Monomial = Tuple[int, ...]
NCPoly = Dict[Monomial, int]


def _mul(a: NCPoly, b: NCPoly, degree: int) -> NCPoly:
    out: NCPoly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if len(ma) + len(mb) > degree:
                continue
            m = ma + mb
            c = out.get(m, 0) + ca * cb
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


def _generator_series(index: int, sign: int, degree: int) -> NCPoly:
    if sign > 0:
        return {(): 1, (index,): 1}
    # (1 + X)^-1 = 1 - X + X^2 - ...
    out: NCPoly = {}
    for d in range(degree + 1):
        out[(index,) * d] = 1 if d % 2 == 0 else -1
    return out


def magnus_expand(word: Word, degree: int) -> NCPoly:
    """Truncated image of the word under the Magnus embedding."""
    result: NCPoly = {(): 1}
    for index, sign in word:
        result = _mul(result, _generator_series(index, sign, degree), degree)
    return result


def _leading_coefficient(series: NCPoly) -> int:
    """Coefficient of the graded-lex smallest monomial of (series - 1)."""
    support = [m for m, c in series.items() if m != () and c]
    if not support:
        return 0
    lead = min(support, key=lambda m: (len(m), m))
    return series[lead]


class MagnusOracle(OrderOracle):
    """Bi-invariant order on a free group via the Magnus expansion."""

    name = "magnus"
    bi_invariant = True

    def __init__(self, group):
        if not group.name.startswith("free:"):
            raise ValueError("the Magnus order lives on free groups")
        super().__init__(group)

    def sign(self, x: Word) -> int:
        if not x:
            return 0
        # Truncated coefficients are exact within the truncation degree,
        # so a nonzero leading term found at a small degree is the true
        # one.  A reduced word always has some nonzero term by residual
        # torsion-free nilpotence; start cheap (most words resolve in
        # the abelianization or on the commutator layer) and double.
        degree = 2
        for _ in range(5):
            coeff = _leading_coefficient(magnus_expand(x, degree))
            if coeff:
                return 1 if coeff > 0 else -1
            degree *= 2
        raise BudgetExceededError(
            f"no nonzero term up to degree {degree // 2}")
