"""The rank-k groups with finitely many left orders.

K_k = <a1, ..., ak | a(i+1) a_i a(i+1)^-1 = a_i^-1, [a_i, a_j] = 1 for
|i - j| >= 2>.  Every element has a normal form a1^n1 ... ak^nk, stored
as the exponent tuple.  K_2 is the Klein bottle group.
"""

from .base import Group


class TararinGroup(Group):
    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        self.name = f"tararin:{rank}"
        self.generator_names = tuple(f"a{i + 1}" for i in range(rank))

    def identity(self):
        return (0,) * self.rank

    def letter_payload(self, letter):
        index, sign = letter
        out = [0] * self.rank
        out[index] = sign
        return tuple(out)

    def mul(self, x, y):
        # moving y's a_i past x's a_(i+1)-run flips its sign by parity
        out = []
        for i in range(self.rank):
            if i + 1 < self.rank and x[i + 1] % 2:
                out.append(x[i] - y[i])
            else:
                out.append(x[i] + y[i])
        return tuple(out)

    def inv(self, x):
        out = [0] * self.rank
        for i in range(self.rank - 1, -1, -1):
            if i + 1 < self.rank and x[i + 1] % 2:
                out[i] = x[i]
            else:
                out[i] = -x[i]
        return tuple(out)

    def key(self, x):
        return x

    def is_identity(self, x):
        return not any(x)
