"""The finitely many left orders of the rank-k flip groups.

These groups carry exactly 2^k left orders: one sign choice per level
of the chain of convex subgroups.  An element's sign is read off its
highest nonzero exponent, which identifies the first quotient of the
chain in which it survives.
"""

from typing import Tuple

from .base import OrderOracle


class TararinOracle(OrderOracle):
    """One of the 2^k orders, selected by a sign per level."""

    def __init__(self, group, signs: Tuple[int, ...]):
        if not group.name.startswith("tararin:"):
            raise ValueError("this order lives on the flip groups")
        if len(signs) != group.rank:
            raise ValueError(
                f"need {group.rank} level signs, got {len(signs)}")
        if any(s not in (-1, 1) for s in signs):
            raise ValueError("level signs must be +1 or -1")
        super().__init__(group)
        self.signs = tuple(signs)
        self.name = "tararin(" + "".join(
            "+" if s > 0 else "-" for s in signs) + ")"

    def sign(self, x) -> int:
        for level in reversed(range(len(x))):
            if x[level]:
                return self.signs[level] * (1 if x[level] > 0 else -1)
        return 0


def all_tararin_oracles(group):
    """All 2^k orders of a rank-k flip group, in lexicographic sign order."""
    k = group.rank
    out = []
    for mask in range(1 << k):
        signs = tuple(1 if (mask >> (k - 1 - i)) & 1 == 0 else -1
                      for i in range(k))
        out.append(TararinOracle(group, signs))
    return out
