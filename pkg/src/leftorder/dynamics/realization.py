"""Dynamical realization: an ordered enumeration becomes a line action.

Elements receive rational coordinates one at a time: the identity sits
at 0, anything beyond the current span lands one unit outside it, and
anything in between takes the midpoint of its realized neighbours.
Each generator then acts by interpolating through the realized graph
points (t(g), t(kg)), which is monotone by left invariance.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from ..errors import InvariantViolation
from ..plhomeo import PLHomeo
from ..words import Word


@dataclass
class Realization:
    oracle: object
    words: List[Word]
    values: List[Fraction]
    generators: List[PLHomeo]

    def value_of(self, word: Union[str, Word]) -> Optional[Fraction]:
        """t(g) for an enumerated g (by word), else None."""
        group = self.oracle.group
        if isinstance(word, str):
            word = group.alphabet.parse(word)
        key = group.key(group.eval_word(word))
        for w, v in zip(self.words, self.values):
            if group.key(group.eval_word(w)) == key:
                return v
        return None

    def check(self) -> None:
        """Raise InvariantViolation unless this is a faithful realization.

        Verifies that t is injective and order preserving, that
        sign(g) matches sign(t(g)), and that every generator map sends
        t(g) to t(kg) whenever both elements are enumerated.
        """
        group = self.oracle.group
        payloads = [group.eval_word(w) for w in self.words]
        if len(set(self.values)) != len(self.values):
            raise InvariantViolation("realized coordinates repeat")
        for w, p, v in zip(self.words, payloads, self.values):
            s = self.oracle.sign(p)
            if (v > 0) - (v < 0) != s:
                raise InvariantViolation(
                    f"element {w} has sign {s} but coordinate {v}",
                    witness=w)
        order = sorted(range(len(payloads)), key=lambda i: self.values[i])
        for i, j in zip(order, order[1:]):
            if self.oracle.compare(payloads[i], payloads[j]) >= 0:
                raise InvariantViolation(
                    "coordinates disagree with the order",
                    witness=(self.words[i], self.words[j]))
        index = {group.key(p): i for i, p in enumerate(payloads)}
        for k, homeo in enumerate(self.generators):
            pk = group.letter_payload((k, 1))
            for i, p in enumerate(payloads):
                j = index.get(group.key(group.mul(pk, p)))
                if j is not None and homeo(self.values[i]) != self.values[j]:
                    raise InvariantViolation(
                        f"generator {group.alphabet.names[k]} breaks "
                        f"equivariance at {self.words[i]}",
                        witness=self.words[i])


def realize(oracle, enumeration: Sequence[Union[str, Word]]) -> Realization:
    """Realize an enumeration (identity first, no repeats) on the line."""
    group = oracle.group
    words = [group.alphabet.parse(w) if isinstance(w, str) else tuple(w)
             for w in enumeration]
    if not words:
        raise ValueError("enumeration is empty")
    payloads = [group.eval_word(w) for w in words]
    if not group.is_identity(payloads[0]):
        raise ValueError("enumeration must start with the identity")
    keys = [group.key(p) for p in payloads]
    if len(set(keys)) != len(keys):
        raise ValueError("enumeration repeats an element")

    values: List[Fraction] = [Fraction(0)]
    order = [0]  # indices sorted increasingly in the group order
    for i in range(1, len(payloads)):
        lo, hi = 0, len(order)
        while lo < hi:
            mid = (lo + hi) // 2
            if oracle.compare(payloads[order[mid]], payloads[i]) < 0:
                lo = mid + 1
            else:
                hi = mid
        if lo == 0:
            values.append(values[order[0]] - 1)
        elif lo == len(order):
            values.append(values[order[-1]] + 1)
        else:
            values.append((values[order[lo - 1]] + values[order[lo]]) / 2)
        order.insert(lo, i)

    index = {keys[i]: i for i in range(len(keys))}
    generators: List[PLHomeo] = []
    for k in range(group.alphabet.size):
        pk = group.letter_payload((k, 1))
        pts = sorted(
            (values[i], values[index[group.key(group.mul(pk, p))]])
            for i, p in enumerate(payloads)
            if group.key(group.mul(pk, p)) in index)
        generators.append(PLHomeo.from_pairs(pts) if pts
                          else PLHomeo.identity())
    return Realization(oracle, words, values, generators)


def ball_enumeration(group, radius: int) -> List[Word]:
    """The canonical ball enumeration (identity first)."""
    return [w for w, _ in group.ball(radius)]


def shuffled_enumeration(group, radius: int, seed: int) -> List[Word]:
    """A seeded shuffle of the ball, identity kept first."""
    import random
    words = [w for w, _ in group.ball(radius)]
    rng = random.Random(seed)
    tail = words[1:]
    rng.shuffle(tail)
    return words[:1] + tail


def realization_to_json(r: Realization) -> str:
    """Stable JSON: realized points by word text, then generator data."""
    group = r.oracle.group
    doc = {
        "group": group.name,
        "order": r.oracle.name,
        "points": [[group.alphabet.format(w) if w else "", str(v)]
                   for w, v in zip(r.words, r.values)],
        "generators": [
            {
                "name": group.alphabet.names[k],
                "points": [[str(x), str(y)] for x, y in h.breakpoints],
                "left_slope": str(h.left_slope),
                "right_slope": str(h.right_slope),
            }
            for k, h in enumerate(r.generators)
        ],
    }
    return json.dumps(doc, indent=2, separators=(", ", ": "))


_PALETTE = ("#2563eb", "#dc2626", "#059669", "#9333ea",
            "#d97706", "#0891b2", "#be185d", "#4d7c0f")


def realization_svg(r: Realization, size: int = 480) -> str:
    """Plot the generator graphs and the realized coordinates."""
    span = max(abs(v) for v in r.values) if r.values else Fraction(1)
    for h in r.generators:
        for x, y in h.breakpoints:
            span = max(span, abs(x), abs(y))
    span = span + 1
    lo, hi = -span, span

    def px(value: Fraction) -> float:
        return float((value - lo) / (hi - lo) * size)

    def py(value: Fraction) -> float:
        return float(size - (value - lo) / (hi - lo) * size)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{px(lo)}" y1="{py(lo)}" x2="{px(hi)}" y2="{py(hi)}" '
        'stroke="#9ca3af" stroke-dasharray="4 3"/>',
    ]
    for k, h in enumerate(r.generators):
        color = _PALETTE[k % len(_PALETTE)]
        pts = h.breakpoints
        ext = ([(lo, h(lo))] + pts + [(hi, h(hi))])
        coords = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in ext)
        name = r.oracle.group.alphabet.names[k]
        parts.append(f'<polyline points="{coords}" fill="none" '
                     f'stroke="{color}" stroke-width="1.5"/>')
        parts.append(f'<text x="{8 + 52 * k}" y="16" fill="{color}" '
                     f'font-size="12" font-family="monospace">{name}</text>')
    for v in r.values:
        parts.append(f'<circle cx="{px(v):.2f}" cy="{py(v):.2f}" r="2.5" '
                     'fill="#111827"/>')
    parts.append("</svg>")
    return "\n".join(parts)
