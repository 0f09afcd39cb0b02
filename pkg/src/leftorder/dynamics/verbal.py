"""Increasing homeomorphisms on which a mixed word acts decreasingly.

For any reduced two-letter word with both a positive and a negative
exponent, there are increasing PL homeomorphisms f, g, both moving
the origin to the right, whose word composition moves it to the left.
So no nontrivial "law" pins down the positivity of a word in the
group of order-preserving line homeomorphisms.

The construction is staged.  Write the word as W1 * a^-n * W2 with W2
the maximal positive suffix (after swapping the letter roles so the
last negative run is in a).  Since the word is reduced, W2 is empty or
starts with b; keeping g almost flat on a long right-neighbourhood of
0 therefore collapses W2's effect below f's first step, so a^-n lands
the point strictly left of 0.  Each run of W1 is then handled by one
new fixed point placed one unit further left: an attracting one when
the run's exponent is positive, a repelling one when it is negative,
with the map sending the current point to the midpoint beyond the
previous anchor.  The stages never touch each other's intervals, and
every coordinate is an exact rational.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ..plhomeo import PLHomeo
from ..words import Alphabet, Word

ALPHABET = Alphabet(("a", "b"))

_A, _B = 0, 1


@dataclass(frozen=True)
class VerbalStage:
    letter: str
    exponent: int
    anchor: Fraction
    start: Fraction
    end: Fraction


@dataclass(frozen=True)
class VerbalCertificate:
    word: str
    swapped: bool
    negative_run: int
    suffix_value: Fraction
    start: Fraction
    stages: Tuple[VerbalStage, ...]
    final: Fraction
    a_at_zero: Fraction
    b_at_zero: Fraction


def evaluate_word(word: Word, fa: PLHomeo, fb: PLHomeo, x) -> Fraction:
    """Apply the word to x, rightmost letter first; a acts by fa."""
    point = Fraction(x)
    for index, sign in reversed(word):
        homeo = fa if index == _A else fb
        point = homeo(point) if sign > 0 else homeo.inverse()(point)
    return point


def _runs_right_to_left(word: Word) -> List[Tuple[int, int]]:
    """Maximal runs as (letter index, signed exponent), rightmost first."""
    runs: List[Tuple[int, int]] = []
    for index, sign in reversed(word):
        if runs and runs[-1][0] == index:
            runs[-1] = (index, runs[-1][1] + sign)
        else:
            runs.append((index, sign))
    return runs


def build_verbal_counterexample(text: str):
    """(fa, fb, certificate) with fa(0) > 0, fb(0) > 0, W(fa, fb)(0) < 0.

    The word must be over letters a, b and mixed: at least one
    positive and one negative exponent after free reduction.
    """
    word = ALPHABET.parse(text)
    signs = {s for _, s in word}
    if signs != {1, -1}:
        raise ValueError(
            "the word must mix positive and negative exponents; "
            f"{ALPHABET.format(word) or 'the empty word'!r} does not")

    last_negative = max(i for i, (_, s) in enumerate(word) if s < 0)
    swapped = word[last_negative][0] == _B
    if swapped:
        word = tuple((1 - index, sign) for index, sign in word)

    run_end = last_negative
    run_start = last_negative
    while run_start > 0 and word[run_start - 1] == (_A, -1):
        run_start -= 1
    n = run_end - run_start + 1
    prefix, suffix = word[:run_start], word[run_end + 1:]
    assert all(s > 0 for _, s in suffix)
    assert not suffix or suffix[0][0] == _B  # reduced word: junction is b

    # right side: f steps by one unit, g compresses [0, reach] under 1/2
    reach = Fraction(len(word) + 1)
    f_points = []
    g_points = [(Fraction(0), Fraction(1, 4)), (reach, Fraction(1, 2))]

    def g_right(x: Fraction) -> Fraction:
        return Fraction(1, 4) + x * Fraction(1, 4) / reach

    point = Fraction(0)
    for index, _ in reversed(suffix):
        point = point + 1 if index == _A else g_right(point)
    suffix_value = point
    start = suffix_value - n
    anchor = start - 1
    f_points += [(anchor, anchor), (start, start + 1)]

    point = start
    stages: List[VerbalStage] = []
    runs = _runs_right_to_left(prefix)
    assert not runs or runs[0][0] == _B  # reduced word: W1 ends with b
    for index, exponent in runs:
        prev_anchor, anchor = anchor, anchor - 1
        target = anchor + Fraction(1, 2)
        points = f_points if index == _A else g_points
        gap = point - anchor
        if exponent > 0:
            points += [(anchor, anchor), (point, target)]
            slope = (target - anchor) / gap
            new_point = anchor + slope ** exponent * gap
        else:
            points += [(anchor, anchor), (target, point)]
            slope = gap / (target - anchor)
            new_point = anchor + gap / slope ** (-exponent)
        original = index if not swapped else 1 - index
        stages.append(VerbalStage(ALPHABET.names[original], exponent,
                                  anchor, point, new_point))
        point = new_point

    f_map = PLHomeo(sorted(f_points), 1, 1)
    g_map = PLHomeo(sorted(g_points), 1, 1)
    fa, fb = (g_map, f_map) if swapped else (f_map, g_map)

    original_word = ALPHABET.parse(text)
    final = evaluate_word(original_word, fa, fb, 0)
    assert final == point and final < 0
    certificate = VerbalCertificate(
        word=ALPHABET.format(original_word), swapped=swapped,
        negative_run=n, suffix_value=suffix_value, start=start,
        stages=tuple(stages), final=final,
        a_at_zero=fa(0), b_at_zero=fb(0))
    assert certificate.a_at_zero > 0 and certificate.b_at_zero > 0
    return fa, fb, certificate
