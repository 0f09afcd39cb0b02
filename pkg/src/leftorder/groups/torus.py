"""Torus knot groups G(m, n) = <a, b | (b a^(m-1))^(n-1) b = a>.

In this presentation delta = a^m is central and every element has a
unique normal form

    b^s0 a^r1 b^s1 ... b^s(k-1) a^rk delta^l

with s0 >= 0, interior si >= 1, interior ri in [1, m-1], trailing
rk in [0, m-1], and no occurrence of the left-hand side of the relation
(b a^(m-1) repeated n-1 times followed by b) as a subword.  Payloads
store (s, r, l) with s and r as tuples.  Multiplication replays the
right factor's letters onto the left factor's normal form; each push is
amortized O(1) thanks to the rewrite terminating with a strictly
shorter segment list.

G(2, 2) is the Klein bottle group and G(3, 2) is the trefoil group,
isomorphic to the 3-strand braid group.
"""

from .base import Group


class TorusKnotGroup(Group):
    def __init__(self, m: int, n: int):
        if m < 2 or n < 2:
            raise ValueError("both torus knot parameters must be at least 2")
        self.m = m
        self.n = n
        self.name = f"torus:{m},{n}"
        self.generator_names = ("a", "b")

    def identity(self):
        return ((0,), (0,), 0)

    # -- internal pushes on mutable state (s list, r list, l int) -----

    def _push_a(self, s, r, l):
        r[-1] += 1
        if r[-1] == self.m:
            r[-1] = 0
            l += 1
        return l

    def _reduce(self, s, r, l):
        """Rewrite trailing (b a^(m-1))^(n-1) b -> a until none remains."""
        m, n = self.m, self.n
        while True:
            k = len(s)
            if k < n or r[-1] != 0:
                return l
            if not all(s[k - t] == 1 for t in range(1, n)):
                return l
            if not all(r[k - 1 - t] == m - 1 for t in range(1, n)):
                return l
            if s[k - n] < 1:
                return l
            # consume one b from segment k-n and everything after it
            del s[k - n + 1:]
            del r[k - n + 1:]
            s[-1] -= 1
            r[-1] = 0
            if s[-1] == 0 and len(s) >= 2:
                s.pop()
                r.pop()
            l = self._push_a(s, r, l)

    def _push_b(self, s, r, l):
        if r[-1] == 0:
            s[-1] += 1
            return l
        s.append(1)
        r.append(0)
        return self._reduce(s, r, l)

    def _push_a_inv(self, s, r, l):
        # a^-1 = a^(m-1) delta^-1
        for _ in range(self.m - 1):
            l = self._push_a(s, r, l)
        return l - 1

    def _push_b_inv(self, s, r, l):
        # b^-1 = a^(m-1) delta^-1 (b a^(m-1))^(n-1)
        l = self._push_a_inv(s, r, l)
        for _ in range(self.n - 1):
            l = self._push_b(s, r, l)
            for _ in range(self.m - 1):
                l = self._push_a(s, r, l)
        return l

    def _replay(self, s, r, l, y):
        """Multiply the state on the right by normal form y."""
        ys, yr, yl = y
        for i in range(len(ys)):
            for _ in range(ys[i]):
                l = self._push_b(s, r, l)
            for _ in range(yr[i]):
                l = self._push_a(s, r, l)
        return l + yl  # delta is central

    # -- group interface ----------------------------------------------

    def letter_payload(self, letter):
        index, sign = letter
        s, r, l = [0], [0], 0
        if index == 0:
            l = self._push_a(s, r, l) if sign > 0 else self._push_a_inv(s, r, l)
        else:
            l = self._push_b(s, r, l) if sign > 0 else self._push_b_inv(s, r, l)
        return (tuple(s), tuple(r), l)

    def mul(self, x, y):
        s, r, l = list(x[0]), list(x[1]), x[2]
        l = self._replay(s, r, l, y)
        return (tuple(s), tuple(r), l)

    def inv(self, x):
        xs, xr, xl = x
        s, r, l = [0], [0], -xl
        for i in range(len(xs) - 1, -1, -1):
            for _ in range(xr[i]):
                l = self._push_a_inv(s, r, l)
            for _ in range(xs[i]):
                l = self._push_b_inv(s, r, l)
        return (tuple(s), tuple(r), l)

    def key(self, x):
        return x

    def is_identity(self, x):
        return x == ((0,), (0,), 0)
