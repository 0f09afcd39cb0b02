"""A bi-invariant order on free products of ordered cyclic factors.

Write an element as a syllable list (factor, exponent).  Let lam be the
least factor occurring.  Deleting the lam-syllables is the retraction
onto the subproduct of the other factors; its kernel is convex.  So if
the retracted word h survives, it decides the sign.  If h collapses,
the element is a product of conjugates t^-1 g t of lam-syllables, and
that kernel is itself a free product of conjugate copies of the lam
factor, indexed by the conjugators t -- ordered, recursively, by this
same order on the subproduct.  Each step strictly shrinks the syllable
count, so the recursion terminates.

Exponents stay integers at every level; only the index alphabet deepens
(from generator numbers to normal-form tuples of syllables).
"""

from typing import Callable, List, Tuple

from ..words import Word
from .base import OrderOracle

Syllables = List[Tuple]  # (index, nonzero exponent) pairs


def _merge(syllables) -> Syllables:
    out: Syllables = []
    for idx, val in syllables:
        if not val:
            continue
        if out and out[-1][0] == idx:
            prev = out.pop()[1] + val
            if prev:
                out.append((idx, prev))
        else:
            out.append((idx, val))
    return out


def _inverse(syllables: Syllables) -> Syllables:
    return [(idx, -val) for idx, val in reversed(syllables)]


def _mul(a: Syllables, b: Syllables) -> Syllables:
    return _merge(a + b)


def syllables_of(word: Word) -> Syllables:
    return _merge((idx, s) for idx, s in word)


def _sign(sylls: Syllables, less: Callable) -> int:
    if not sylls:
        return 0
    if len(sylls) == 1:
        return 1 if sylls[0][1] > 0 else -1
    lam = sylls[0][0]
    for idx, _ in sylls[1:]:
        if less(idx, lam):
            lam = idx
    # split g0 h1 g1 h2 ... hk gk along the lam-syllables; adjacent
    # syllables have distinct indices, so lam-syllables never touch
    exponents = []   # g_i exponents, None marking a trivial end
    blocks: List[Syllables] = []
    last_was_block = False
    for idx, val in sylls:
        if idx == lam:
            exponents.append(val)
            last_was_block = False
        elif last_was_block:
            blocks[-1].append((idx, val))
        else:
            if len(exponents) == len(blocks):
                exponents.append(None)
            blocks.append([(idx, val)])
            last_was_block = True
    if last_was_block:
        exponents.append(None)
    h: Syllables = []
    for block in blocks:
        h = _mul(h, block)
    if h:
        return _sign(h, less)
    # the retraction kills the word, so it is a product of conjugates
    # t_i^-1 g_i t_i with t_i the blocks to the right of g_i (t_0 = h = id)
    tails = [()] * len(blocks)  # tails[j] = product of blocks after j
    suffix: Syllables = []
    for j in reversed(range(len(blocks))):
        tails[j] = tuple(suffix)
        suffix = _mul(blocks[j], suffix)
    conjugated: Syllables = []
    for i, val in enumerate(exponents):
        if val is not None:
            conjugated.append((tails[i - 1] if i else (), val))
    sub_less = lambda t, u: _sign(_mul(_inverse(list(t)), list(u)), less) > 0
    return _sign(conjugated, sub_less)


def vinogradov_sign(word: Word) -> int:
    """Sign of a free-group word in the free-product order."""
    return _sign(syllables_of(word), lambda i, j: i < j)


class VinogradovOracle(OrderOracle):
    """Bi-invariant order on a free group via the free-product recursion."""

    name = "vinogradov"
    bi_invariant = True

    def __init__(self, group):
        if not group.name.startswith("free:"):
            raise ValueError("this order lives on free groups")
        super().__init__(group)

    def sign(self, x: Word) -> int:
        return vinogradov_sign(x)
