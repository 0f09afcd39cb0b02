"""Finite-ball approximations of the space of left orders.

A ball cone is the sign table an order induces on a word-metric ball.
Two orders are close when they agree on a large ball; the induced
2^-n distance is an ultrametric.  Enumerating all sign tables that
satisfy the finite-ball axioms (antisymmetry plus in-ball product
closure) gives an upper approximation to the set of orders restricted
to the ball: every genuine order restricts to such a table, but a
table need not extend.  Counts are therefore labeled as radius-r
upper approximations.
"""

import json
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvariantViolation
from .words import Word

SCHEMA_VERSION = 1


class BallCone:
    """Sign table of an order on a ball: +1/-1 per nonidentity element."""

    def __init__(self, group, radius: int, signs: Dict[Word, int]):
        self.group = group
        self.radius = radius
        self.signs = dict(signs)

    def sign_of(self, word: Word) -> int:
        return 0 if word == () else self.signs[word]

    def table(self) -> Tuple[int, ...]:
        """Signs in canonical ball order (the serialization order)."""
        return tuple(self.signs[w] for w, _ in self.group.ball(self.radius)
                     if w != ())

    def __eq__(self, other):
        if not isinstance(other, BallCone):
            return NotImplemented
        return (self.group.name == other.group.name
                and self.radius == other.radius and self.signs == other.signs)

    def __hash__(self):
        return hash((self.group.name, self.radius, self.table()))

    def __repr__(self):
        return (f"<BallCone {self.group.name} r={self.radius} "
                f"{sum(1 for s in self.signs.values() if s > 0)}+>")

    def to_json(self) -> str:
        alphabet = self.group.alphabet
        entries = [[alphabet.format(w), self.signs[w]]
                   for w, _ in self.group.ball(self.radius) if w != ()]
        return json.dumps({
            "version": SCHEMA_VERSION,
            "group": self.group.name,
            "radius": self.radius,
            "entries": entries,
        }, separators=(", ", ": "))

    @staticmethod
    def from_json(text: str, group) -> "BallCone":
        data = json.loads(text)
        if data.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {data.get('version')}")
        if data["group"] != group.name:
            raise ValueError(
                f"cone belongs to {data['group']}, not {group.name}")
        alphabet = group.alphabet
        signs = {alphabet.parse(text): int(s) for text, s in data["entries"]}
        return BallCone(group, int(data["radius"]), signs)


def ball_cone(oracle, radius: int) -> BallCone:
    """Restrict an oracle to a ball, validating the cone axioms."""
    group = oracle.group
    signs: Dict[Word, int] = {}
    by_key = {}
    for word, payload in group.ball(radius):
        s = oracle.sign(payload)
        if group.is_identity(payload):
            if s != 0:
                raise InvariantViolation(
                    f"identity got sign {s}", witness=word)
            continue
        if s not in (-1, 1):
            raise InvariantViolation(f"{word} got sign {s}", witness=word)
        signs[word] = s
        by_key[group.key(payload)] = (word, s)
    for word, payload in group.ball(radius):
        if word == ():
            continue
        inv_key = group.key(group.inv(payload))
        if inv_key in by_key and by_key[inv_key][1] != -signs[word]:
            raise InvariantViolation(
                f"antisymmetry fails at {word}", witness=word)
    elements = [(w, p) for w, p in group.ball(radius) if w != ()]
    for w1, p1 in elements:
        if signs[w1] < 0:
            continue
        for w2, p2 in elements:
            if signs[w2] < 0:
                continue
            k = group.key(group.mul(p1, p2))
            if k in by_key and by_key[k][1] < 0:
                raise InvariantViolation(
                    f"cone closure fails at ({w1})*({w2})", witness=(w1, w2))
    return BallCone(group, radius, signs)


def distance(c1: BallCone, c2: BallCone) -> Tuple[Fraction, bool]:
    """The 2^-n order-space distance from two ball tables.

    n is the largest radius at which the tables agree (the 0-ball
    always agrees, so the distance is at most 1).  Returns (value,
    exact); when the tables agree through their full common radius the
    true distance is only bounded above, and exact is False.
    """
    if c1.group.name != c2.group.name:
        raise ValueError("cones live on different groups")
    limit = min(c1.radius, c2.radius)
    group = c1.group
    agree_through = limit
    for word, _ in group.ball(limit):
        if word == ():
            continue
        if c1.signs[word] != c2.signs[word]:
            agree_through = min(agree_through, len(word) - 1)
    if agree_through == limit:
        return Fraction(1, 2 ** limit), False
    return Fraction(1, 2 ** agree_through), True


class _BallSearch:
    """Shared tables for the sign-assignment backtracking search."""

    def __init__(self, group, radius: int):
        self.group = group
        self.radius = radius
        ball = group.ball(radius)
        self.words = [w for w, _ in ball if w != ()]
        payloads = {w: p for w, p in ball}
        index_of = {group.key(payloads[w]): i for i, w in enumerate(self.words)}
        n = len(self.words)
        self.inverse = [index_of[group.key(group.inv(payloads[w]))]
                        for w in self.words]
        # product table: index pair -> index of the product, or None
        self.product: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
        for i, wi in enumerate(self.words):
            pi = payloads[wi]
            for j, wj in enumerate(self.words):
                k = group.key(group.mul(pi, payloads[wj]))
                self.product[i][j] = index_of.get(k)
        # factorizations of each element as an in-ball product
        self.factor_pairs: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                k = self.product[i][j]
                if k is not None:
                    self.factor_pairs[k].append((i, j))

    def enumerate(self, seed: Optional[Dict[int, int]] = None,
                  cap: Optional[int] = None,
                  limit: Optional[int] = None) -> Tuple[List[Dict[int, int]], bool]:
        """All consistent full assignments extending the seed.

        Returns (assignments, complete).  ``cap`` bounds the search
        nodes (incomplete results flagged), ``limit`` stops early once
        that many assignments are found (used by isolation tests).
        """
        n = len(self.words)
        signs: List[int] = [0] * n
        results: List[Dict[int, int]] = []
        nodes = 0
        complete = True

        def violates(i: int) -> bool:
            # closure checks touching the newly assigned index i
            if signs[i] > 0:
                for j in range(n):
                    if signs[j] <= 0:
                        continue
                    for x, y in ((i, j), (j, i)):
                        k = self.product[x][y]
                        if k is not None and signs[k] < 0:
                            return True
            else:
                for x, y in self.factor_pairs[i]:
                    if signs[x] > 0 and signs[y] > 0:
                        return True
            return False

        def assign(i: int, s: int) -> bool:
            signs[i] = s
            signs[self.inverse[i]] = -s
            if violates(i) or violates(self.inverse[i]):
                signs[i] = 0
                signs[self.inverse[i]] = 0
                return False
            return True

        if seed:
            for i, s in sorted(seed.items()):
                if signs[i] == 0:
                    if not assign(i, s):
                        return [], True
                elif signs[i] != s:
                    return [], True

        def search(pos: int) -> bool:
            nonlocal nodes, complete
            if cap is not None and nodes > cap:
                complete = False
                return True
            if limit is not None and len(results) >= limit:
                return True
            while pos < n and signs[pos] != 0:
                pos += 1
            if pos == n:
                results.append({i: signs[i] for i in range(n)})
                return limit is not None and len(results) >= limit
            nodes += 1
            inv = self.inverse[pos]
            for s in (1, -1):
                if assign(pos, s):
                    if search(pos + 1):
                        return True
                    signs[pos] = 0
                    signs[inv] = 0
            return False

        search(0)
        return results, complete


def enumerate_ball_cones(group, radius: int, cap: Optional[int] = 500_000,
                         ) -> Tuple[List[BallCone], bool]:
    """All ball-consistent sign tables, in deterministic search order.

    These are upper approximations: every left order restricts to one
    of them, but a table need not extend to an order.  Returns
    (cones, complete); complete is False when the node cap was hit.
    """
    search = _BallSearch(group, radius)
    assignments, complete = search.enumerate(cap=cap)
    cones = [BallCone(group, radius,
                      {search.words[i]: s for i, s in a.items()})
             for a in assignments]
    return cones, complete


def compatible_signs(group, elements: Sequence, length_bound: int):
    """Search for exponents making the identity unreachable as a product.

    For each assignment eta of +1/-1 to the given nontrivial elements,
    consider products of at most length_bound factors drawn from
    {g^eta(g)}.  Returns (eta, None) for the first assignment whose
    product set avoids the identity, or (None, witnesses) where
    witnesses maps each eta (as a sign tuple) to a factor list whose
    product is the identity.

    Elements may be generator-word strings (parsed over the group's
    alphabet) or payloads.
    """
    payloads = [group.eval_word(group.alphabet.parse(e)) if isinstance(e, str)
                else e for e in elements]
    if any(group.is_identity(p) for p in payloads):
        raise ValueError("elements must be nontrivial")
    witnesses = {}
    for mask in range(1 << len(payloads)):
        eta = tuple(1 if not (mask >> i) & 1 else -1
                    for i in range(len(payloads)))
        gens = [p if s > 0 else group.inv(p)
                for p, s in zip(payloads, eta)]
        witness = _identity_product(group, gens, length_bound)
        if witness is None:
            return eta, None
        witnesses[eta] = witness
    return None, witnesses


def _identity_product(group, gens: Sequence, length_bound: int):
    """BFS for a product of at most length_bound gens equal to identity."""
    frontier = {group.key(group.identity()): (group.identity(), [])}
    seen = set(frontier)
    for _ in range(length_bound):
        nxt = {}
        for key, (payload, path) in frontier.items():
            for gi, gen in enumerate(gens):
                q = group.mul(payload, gen)
                qk = group.key(q)
                if group.is_identity(q):
                    return path + [gi]
                if qk not in seen:
                    seen.add(qk)
                    nxt[qk] = (q, path + [gi])
        frontier = nxt
        if not frontier:
            break
    return None


def is_isolated_at_radius(group, constraints, probe_radius: int,
                          cap: Optional[int] = 500_000) -> Tuple[bool, bool]:
    """Is there exactly one consistent cone at probe_radius extending
    the given constraints (a BallCone or a partial word->sign table)?

    Returns (isolated, complete): when complete is False the cap was
    reached and the verdict is only a lower-bound statement.
    """
    if isinstance(constraints, BallCone):
        if constraints.radius > probe_radius:
            raise ValueError("probe radius smaller than the cone radius")
        constraints = constraints.signs
    search = _BallSearch(group, probe_radius)
    word_index = {w: i for i, w in enumerate(search.words)}
    seed = {}
    for word, s in constraints.items():
        if word not in word_index:
            raise ValueError(f"constraint word {word} outside the ball")
        seed[word_index[word]] = s
    found, complete = search.enumerate(seed=seed, cap=cap, limit=2)
    return len(found) == 1, complete


def _close_positive(search: _BallSearch, in_pos: bytearray,
                    members: List[int], new_items: Sequence[int]):
    """Add elements to a positive set and close under in-ball products.

    Mutates in_pos/members; returns (ok, added) where ok is False as
    soon as some element and its inverse would both become positive.
    The added list supports rollback either way.
    """
    added: List[int] = []
    stack = list(new_items)
    while stack:
        i = stack.pop()
        if in_pos[i]:
            continue
        if in_pos[search.inverse[i]]:
            return False, added
        in_pos[i] = 1
        members.append(i)
        added.append(i)
        row = search.product[i]
        for m in members:
            k = row[m]
            if k is not None and not in_pos[k]:
                stack.append(k)
            k = search.product[m][i]
            if k is not None and not in_pos[k]:
                stack.append(k)
    return True, added


def _rollback(in_pos: bytearray, members: List[int], added: List[int]):
    for i in added:
        in_pos[i] = 0
    del members[len(members) - len(added):]


def smith_clay_extension_ok(group, cone: BallCone, new_word: Word) -> bool:
    """Adjoin a new positive element and close within the larger ball;
    report whether the closure stays antisymmetric."""
    radius = max(cone.radius, len(new_word))
    search = _BallSearch(group, radius)
    index_of = {w: i for i, w in enumerate(search.words)}
    start = [index_of[w] for w, s in cone.signs.items() if s > 0]
    start.append(index_of[new_word])
    in_pos = bytearray(len(search.words))
    ok, _ = _close_positive(search, in_pos, [], start)
    return ok


def smith_clay_sweep(group, max_length: int) -> Tuple[int, List[Tuple[int, Tuple[int, ...], Word]]]:
    """Exhaustive one-shell extension test for closed total sign sets.

    For every N <= max_length and every consistent sign table at radius
    N-1, let S be the closure of its positives under in-ball products
    at radius N (S is total at length N-1 and satisfies
    S = <S>+ within the N-ball; cones whose closure loses antisymmetry
    fall outside the hypothesis and are skipped).  Every length-N
    element g outside S and S^-1 is then adjoined and the closure of
    S with g is checked for antisymmetry.  Returns (cases, violations);
    each violation records (N, cone table, g).  An empty violation list
    supports the claim that such an S extends across the next shell
    with either sign of g.
    """
    cases = 0
    violations: List[Tuple[int, Tuple[int, ...], Word]] = []
    for length in range(2, max_length + 1):
        small = _BallSearch(group, length - 1)
        big = _BallSearch(group, length)
        if big.words[:len(small.words)] != small.words:
            raise AssertionError("ball enumeration is not nested")
        shell = range(len(small.words), len(big.words))
        assignments, complete = small.enumerate(cap=None)
        assert complete
        for assignment in assignments:
            base = [i for i, s in assignment.items() if s > 0]
            table = tuple(assignment[i] for i in range(len(small.words)))
            in_pos = bytearray(len(big.words))
            members: List[int] = []
            ok, _ = _close_positive(big, in_pos, members, base)
            if not ok:
                continue
            for g in shell:
                if in_pos[g] or in_pos[big.inverse[g]]:
                    continue
                cases += 1
                ok, added = _close_positive(big, in_pos, members, [g])
                if not ok:
                    violations.append((length, table, big.words[g]))
                _rollback(in_pos, members, added)
    return cases, violations
