"""Integer matrix groups: the discrete Heisenberg group and SL(3, Z).

Payloads are 3x3 integer matrices stored as nested tuples.  Inverses
use the adjugate, which is exact for determinant-one matrices.
"""

from .base import Group

Mat = tuple

I3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_det(a: Mat) -> int:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def mat_inv(a: Mat) -> Mat:
    if mat_det(a) != 1:
        raise ValueError("matrix is not in SL(3, Z)")
    # adjugate = inverse when det == 1
    cof = lambda i, j: (
        a[(i + 1) % 3][(j + 1) % 3] * a[(i + 2) % 3][(j + 2) % 3]
        - a[(i + 1) % 3][(j + 2) % 3] * a[(i + 2) % 3][(j + 1) % 3]
    )
    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


def elementary(i: int, j: int, k: int = 1) -> Mat:
    """I + k*E_ij (1-based indices)."""
    rows = [list(row) for row in I3]
    rows[i - 1][j - 1] += k
    return tuple(tuple(row) for row in rows)


class MatrixGroup(Group):
    def __init__(self, name, generator_names, generator_matrices):
        self.name = name
        self.generator_names = tuple(generator_names)
        self._gens = tuple(generator_matrices)

    def identity(self):
        return I3

    def letter_payload(self, letter):
        index, sign = letter
        g = self._gens[index]
        return g if sign > 0 else mat_inv(g)

    def mul(self, x, y):
        return mat_mul(x, y)

    def inv(self, x):
        return mat_inv(x)

    def key(self, x):
        return x

    def is_identity(self, x):
        return x == I3


class HeisenbergGroup(MatrixGroup):
    """Lower unitriangular 3x3 integer matrices, generated by
    f = I + E21, g = I + E32, h = I + E31 (the center)."""

    def __init__(self):
        super().__init__(
            "heisenberg",
            ("f", "g", "h"),
            (elementary(2, 1), elementary(3, 2), elementary(3, 1)),
        )


class SL3ZGroup(MatrixGroup):
    """SL(3, Z) with the six elementary generators g1..g6."""

    POSITIONS = ((1, 2), (1, 3), (2, 3), (2, 1), (3, 1), (3, 2))

    def __init__(self, k: int = 1):
        if k < 1:
            raise ValueError("elementary exponent must be positive")
        self.k = k
        super().__init__(
            "sl3z",
            tuple(f"g{i + 1}" for i in range(6)),
            tuple(elementary(i, j, k) for i, j in self.POSITIONS),
        )
