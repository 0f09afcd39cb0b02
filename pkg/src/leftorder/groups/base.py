"""Common interface for exact group backends.

Every backend works with an opaque *payload* type (tuples, matrices,
piecewise maps, ...) that supports exact multiplication and inversion.
Words over the group's alphabet are evaluated into payloads, and balls
in the Cayley graph are enumerated breadth-first with deduplication by
a canonical hashable key.
"""

from typing import Any, Dict, List, Tuple

from ..errors import ComputationError
from ..words import Alphabet, Letter, Word, concat


class Group:
    """Base class for group backends.

    Subclasses must set ``name`` and ``generator_names`` and implement
    ``identity``, ``letter_payload``, ``mul``, ``inv`` and ``key``.
    """

    name: str = "group"
    generator_names: Tuple[str, ...] = ()

    @property
    def alphabet(self) -> Alphabet:
        cached = getattr(self, "_alphabet", None)
        if cached is None:
            cached = Alphabet(self.generator_names)
            self._alphabet = cached
        return cached

    def identity(self) -> Any:
        raise NotImplementedError

    def letter_payload(self, letter: Letter) -> Any:
        raise NotImplementedError

    def mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def inv(self, x: Any) -> Any:
        raise NotImplementedError

    def key(self, x: Any):
        """Canonical hashable key; two payloads represent the same group
        element exactly when their keys are equal."""
        raise NotImplementedError

    def is_identity(self, x: Any) -> bool:
        return self.key(x) == self.key(self.identity())

    def eval_word(self, word: Word) -> Any:
        out = self.identity()
        for letter in word:
            out = self.mul(out, self.letter_payload(letter))
        return out

    def ball(self, radius: int) -> List[Tuple[Word, Any]]:
        """Elements of the radius-``radius`` ball in the Cayley graph.

        Returns ``(word, payload)`` pairs where each word is the
        canonical geodesic representative (shortest, then first in the
        letter order of the alphabet).  The identity comes first and the
        list is sorted by that canonical word order.
        """
        if radius < 0:
            raise ValueError("radius must be non-negative")
        identity = self.identity()
        seen = {self.key(identity)}
        out: List[Tuple[Word, Any]] = [((), identity)]
        frontier: List[Tuple[Word, Any]] = [((), identity)]
        letters = self.alphabet.letters()
        payloads = [self.letter_payload(l) for l in letters]
        for _ in range(radius):
            nxt: List[Tuple[Word, Any]] = []
            for word, payload in frontier:
                for letter, lp in zip(letters, payloads):
                    child = self.mul(payload, lp)
                    ck = self.key(child)
                    if ck in seen:
                        continue
                    seen.add(ck)
                    nxt.append((word + (letter,), child))
            out.extend(nxt)
            frontier = nxt
        return out

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def semigroup_closure(group, generators, max_factors, max_size=None):
    """Products of at most ``max_factors`` generators, deduplicated.

    ``generators`` is a list of ``(word, payload)`` pairs; the returned
    dict maps canonical keys to ``(word, payload)`` where the word is
    the concatenation of generator words used (a shortest such
    expression, breadth-first).  The identity is not included unless it
    arises as a product.
    """
    result: Dict[Any, Tuple[Word, Any]] = {}
    frontier: List[Tuple[Word, Any]] = [((), group.identity())]
    for _ in range(max_factors):
        nxt = []
        for word, payload in frontier:
            for gw, gp in generators:
                child = group.mul(payload, gp)
                ck = group.key(child)
                if ck in result:
                    continue
                entry = (concat(word, gw), child)
                result[ck] = entry
                nxt.append(entry)
                if max_size is not None and len(result) > max_size:
                    raise ComputationError(
                        f"semigroup closure exceeded {max_size} elements"
                    )
        frontier = nxt
    return result
