"""The standard braid order and its finitely-many-relatives on B_n.

A *handle* is a subword s_i^e v s_i^-e whose interior v uses only
generators of index > i.  Handle reduction removes them until the word
is handle free; a nonempty handle-free word has all occurrences of its
lowest generator with one common sign, which gives the sign of the
element.  The variant order flips the sign on odd levels, so that each
generator of the resulting positive cone is a positive element.
"""

from typing import Optional, Tuple

from ..errors import BudgetExceededError
from ..words import Word, reduce_letters
from .base import OrderOracle

DEFAULT_STEP_BUDGET = 100_000


def _find_handle(word: Word) -> Optional[Tuple[int, int]]:
    """Position pair (p, q) of the first handle with leftmost right end."""
    last_at_or_below = {}
    for q, (i, s) in enumerate(word):
        prev = None
        for j in range(i + 1):
            cand = last_at_or_below.get(j)
            if cand is not None and (prev is None or cand > prev):
                prev = cand
        if prev is not None and word[prev] == (i, -s):
            return (prev, q)
        last_at_or_below[i] = q
    return None


def _substitute(word: Word, p: int, q: int) -> Word:
    """Remove the handle ends; conjugate interior letters of index i+1."""
    i, e = word[p]
    out = list(word[:p])
    for j in range(p + 1, q):
        idx, s = word[j]
        if idx == i + 1:
            out.extend([(i + 1, -e), (i, s), (i + 1, e)])
        else:
            out.append((idx, s))
    out.extend(word[q + 1:])
    return reduce_letters(out)


def handle_reduce(word: Word, max_steps: int = DEFAULT_STEP_BUDGET) -> Word:
    """Fully handle-reduce a braid word (free reduction included)."""
    current = reduce_letters(word)
    for _ in range(max_steps):
        found = _find_handle(current)
        if found is None:
            return current
        current = _substitute(current, *found)
    raise BudgetExceededError(
        f"handle reduction did not terminate within {max_steps} steps")


def sigma_sign(word: Word, max_steps: int = DEFAULT_STEP_BUDGET) -> int:
    """+1 for sigma-positive, -1 for sigma-negative, 0 for trivial.

    A reduced word is *positive* when its lowest-index generator only
    occurs positively.
    """
    reduced = handle_reduce(word, max_steps)
    if not reduced:
        return 0
    main = min(i for i, _ in reduced)
    return next(s for i, s in reduced if i == main)


class DehornoyOracle(OrderOracle):
    """The subword order: w > id iff w is sigma-positive."""

    name = "dehornoy"

    def __init__(self, group, max_steps: int = DEFAULT_STEP_BUDGET):
        if not group.name.startswith("braid:"):
            raise ValueError("the subword order lives on braid groups")
        super().__init__(group)
        self.max_steps = max_steps

    def sign(self, x: Word) -> int:
        return sigma_sign(x, self.max_steps)


class DDOracle(OrderOracle):
    """Isolated order whose cone is generated by finitely many braids.

    For B_n the cone generators are x_i = (s_i s_(i+1) ... s_(n-1))
    raised to (-1)^(i+1); the sign rule flips sigma_sign at even levels
    (0-based odd main index).
    """

    name = "dd"

    def __init__(self, group, max_steps: int = DEFAULT_STEP_BUDGET):
        if not group.name.startswith("braid:"):
            raise ValueError("this order lives on braid groups")
        super().__init__(group)
        self.max_steps = max_steps

    def sign(self, x: Word) -> int:
        reduced = handle_reduce(x, self.max_steps)
        if not reduced:
            return 0
        main = min(i for i, _ in reduced)
        s = next(sg for i, sg in reduced if i == main)
        return s if main % 2 == 0 else -s

    def cone_generator_words(self):
        """The n-1 braid words generating the positive cone."""
        n = self.group.strands
        out = []
        for i in range(n - 1):
            if i % 2 == 0:
                run = tuple((j, 1) for j in range(i, n - 1))
            else:
                run = tuple((j, -1) for j in reversed(range(i, n - 1)))
            out.append(run)
        return out
