"""Alphabets, freely reduced words, and word-metric ball enumeration.

A word is a tuple of letters (generator_index, sign) with sign in {+1, -1},
always stored freely reduced.  Every group in the catalog speaks this
format; the text syntax (`a b^-2 c`) is shared by the CLI and all
serialization.
"""

from typing import Iterable, List, Sequence, Tuple

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]

IDENTITY_WORD: Word = ()


def reduce_letters(letters: Iterable[Letter]) -> Word:
    """Freely reduce a raw letter sequence (cancel adjacent inverse pairs)."""
    stack: List[Letter] = []
    for index, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        if index < 0:
            raise ValueError(f"generator index must be non-negative, got {index}")
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


def inverse(word: Word) -> Word:
    return tuple((i, -s) for i, s in reversed(word))


def concat(*words: Word) -> Word:
    """Reduced concatenation: the product in the ambient free group."""
    out: List[Letter] = []
    for word in words:
        for index, sign in word:
            if out and out[-1][0] == index and out[-1][1] == -sign:
                out.pop()
            else:
                out.append((index, sign))
    return tuple(out)


def power(word: Word, k: int) -> Word:
    if k == 0:
        return IDENTITY_WORD
    base = word if k > 0 else inverse(word)
    out = base
    for _ in range(abs(k) - 1):
        out = concat(out, base)
    return out


def letter_key(letter: Letter) -> Tuple[int, int]:
    """Canonical letter order: by generator index, positive before negative."""
    index, sign = letter
    return (index, 0 if sign > 0 else 1)


def word_key(word: Word) -> Tuple:
    """Canonical enumeration key: length first, then letterwise order."""
    return (len(word), tuple(letter_key(l) for l in word))


class Alphabet:
    """A finite symmetric generating alphabet with printable names."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        for name in names:
            if not name or any(ch.isspace() for ch in name) or "^" in name:
                raise ValueError(f"invalid generator name: {name!r}")
        self.names = names
        self.size = len(names)
        self._index = {name: i for i, name in enumerate(names)}

    def __repr__(self):
        return f"Alphabet({list(self.names)})"

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def letters(self) -> List[Letter]:
        """All signed letters in canonical order."""
        out = []
        for i in range(self.size):
            out.append((i, 1))
            out.append((i, -1))
        return out

    def parse(self, text: str) -> Word:
        """Parse whitespace-separated `name` / `name^k` tokens; '' is id."""
        letters: List[Letter] = []
        for token in text.split():
            name, _, exp_text = token.partition("^")
            if name not in self._index:
                raise ValueError(f"unknown generator {name!r} (alphabet {list(self.names)})")
            if exp_text == "" and "^" not in token:
                exp = 1
            else:
                try:
                    exp = int(exp_text)
                except ValueError:
                    raise ValueError(f"bad exponent in token {token!r}") from None
            index = self._index[name]
            sign = 1 if exp > 0 else -1
            letters.extend((index, sign) for _ in range(abs(exp)))
        return reduce_letters(letters)

    def format(self, word: Word) -> str:
        """Inverse of parse, with adjacent equal letters run-length joined."""
        parts: List[str] = []
        i = 0
        while i < len(word):
            index, sign = word[i]
            j = i
            while j < len(word) and word[j] == (index, sign):
                j += 1
            run = (j - i) * sign
            name = self.names[index]
            parts.append(name if run == 1 else f"{name}^{run}")
            i = j
        return " ".join(parts)


def ball(alphabet: Alphabet, radius: int) -> List[Word]:
    """All freely reduced words of length <= radius, in canonical order.

    Order: by length, then lexicographically by (generator index, sign)
    with the positive letter before the negative one.  Downstream sign
    tables are keyed on this enumeration, so it must never change.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    letters = alphabet.letters()
    out: List[Word] = [IDENTITY_WORD]
    frontier: List[Word] = [IDENTITY_WORD]
    for _ in range(radius):
        new_frontier: List[Word] = []
        for word in frontier:
            for index, sign in letters:
                if word and word[-1][0] == index and word[-1][1] == -sign:
                    continue
                new_frontier.append(word + ((index, sign),))
        out.extend(new_frontier)
        frontier = new_frontier
    return out


def ball_count(alphabet_size: int, radius: int) -> int:
    """Closed-form size of the free ball: 1 + 2n((2n-1)^r - 1)/(2n-2)."""
    n = alphabet_size
    if n == 1:
        return 2 * radius + 1
    return 1 + 2 * n * ((2 * n - 1) ** radius - 1) // (2 * n - 2)


def default_alphabet(size: int, names: Sequence[str] = None) -> Alphabet:
    if names is not None:
        return Alphabet(names)
    base = ["a", "b", "c", "d", "e", "f", "g", "h"]
    if size <= len(base):
        return Alphabet(base[:size])
    return Alphabet([f"x{i}" for i in range(1, size + 1)])
