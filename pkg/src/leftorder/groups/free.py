"""Free and free abelian groups."""

from typing import Tuple

from ..words import Word, concat, default_alphabet, inverse
from .base import Group


class FreeGroup(Group):
    """Free group of finite rank; payloads are reduced words."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        self.name = f"free:{rank}"
        self.generator_names = default_alphabet(rank).names

    def identity(self) -> Word:
        return ()

    def letter_payload(self, letter) -> Word:
        return (letter,)

    def mul(self, x: Word, y: Word) -> Word:
        return concat(x, y)

    def inv(self, x: Word) -> Word:
        return inverse(x)

    def key(self, x: Word):
        return x

    def is_identity(self, x: Word) -> bool:
        return not x

    def eval_word(self, word: Word) -> Word:
        return concat(word)


class FreeAbelianGroup(Group):
    """Z^n with exponent-vector payloads; generators e1..en."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        self.name = f"zn:{rank}"
        self.generator_names = tuple(f"e{i + 1}" for i in range(rank))

    def identity(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def letter_payload(self, letter):
        index, sign = letter
        out = [0] * self.rank
        out[index] = sign
        return tuple(out)

    def mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inv(self, x):
        return tuple(-a for a in x)

    def key(self, x):
        return x

    def is_identity(self, x) -> bool:
        return not any(x)
