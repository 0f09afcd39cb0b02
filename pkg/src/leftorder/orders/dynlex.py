"""Orders from actions on the line: compare orbits of marked points.

Given an order-preserving action and a finite list of base points with
orientation marks, the sign of g is read at the first point its image
moves, adjusted by that point's mark.  The comparison is automatically
left-invariant because orbit vectors of increasing maps compare
lexicographically.  The point list must be long enough that only the
identity fixes every point; the invariant checker catches shortfalls.
"""

import json
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..plhomeo import PLHomeo
from .base import OrderOracle

MapPair = Tuple[Callable, Callable]


class DynLexOracle(OrderOracle):
    """Lexicographic order along the orbit of a tuple of base points."""

    def __init__(self, group, apply_fn: Callable, points: Sequence,
                 marks: Optional[Sequence[int]] = None, name: str = "dynlex"):
        super().__init__(group)
        self._apply = apply_fn
        self.points = list(points)
        self.marks = list(marks) if marks is not None else [1] * len(points)
        if len(self.marks) != len(self.points):
            raise ValueError("need one orientation mark per base point")
        if any(m not in (-1, 1) for m in self.marks):
            raise ValueError("orientation marks must be +1 or -1")
        self.name = name

    @staticmethod
    def from_action(group, action, points, marks=None, name="dynlex"):
        """Wrap an action object exposing apply(payload, x)."""
        return DynLexOracle(group, action.apply, points, marks, name)

    @staticmethod
    def from_maps(group, maps: Dict[str, Union[PLHomeo, MapPair]],
                  points, marks=None, name="dynlex"):
        """Wrap per-generator line maps; payloads must be words.

        Each generator name maps to a PLHomeo or a (forward, inverse)
        pair of callables.  Words act on the right-to-left convention
        (g h)(x) = g(h(x)).
        """
        missing = [n for n in group.generator_names if n not in maps]
        if missing:
            raise ValueError(f"no line map for generators {missing}")
        pairs = []
        for gen_name in group.generator_names:
            spec = maps[gen_name]
            if isinstance(spec, PLHomeo):
                pairs.append((spec, spec.inverse()))
            else:
                pairs.append(tuple(spec))

        def apply_word(word, x):
            for index, s in reversed(word):
                x = pairs[index][0 if s > 0 else 1](x)
            return x

        return DynLexOracle(group, apply_word, points, marks, name)

    def orbit(self, x) -> List:
        return [self._apply(x, pt) for pt in self.points]

    def sign(self, x) -> int:
        for pt, mark in zip(self.points, self.marks):
            image = self._apply(x, pt)
            if image != pt:
                return mark * (1 if image > pt else -1)
        return 0


def _parse_rational(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"rationals must be integers or strings, got {value!r}")


def _map_from_spec(spec: dict) -> PLHomeo:
    kind = spec.get("type", "pl")
    if kind == "affine":
        return PLHomeo.affine(_parse_rational(spec["slope"]),
                              _parse_rational(spec.get("intercept", 0)))
    if kind == "translation":
        return PLHomeo.translation(_parse_rational(spec["offset"]))
    if kind == "pl":
        points = [(_parse_rational(x), _parse_rational(y))
                  for x, y in spec["breakpoints"]]
        return PLHomeo(points,
                       _parse_rational(spec.get("left_slope", 1)),
                       _parse_rational(spec.get("right_slope", 1)))
    raise ValueError(f"unknown map type {kind!r}")


def load_action_file(path: str):
    """Read a JSON action description: generator maps, points, marks.

    Returns (maps, points, marks) suitable for DynLexOracle.from_maps.
    Rational numbers are written as JSON strings like "2/3".
    """
    with open(path) as fh:
        data = json.load(fh)
    maps = {name: _map_from_spec(spec)
            for name, spec in data["generators"].items()}
    points = [_parse_rational(p) for p in data["points"]]
    marks = [int(m) for m in data.get("marks", [1] * len(points))]
    return maps, points, marks
