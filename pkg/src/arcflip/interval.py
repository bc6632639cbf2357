"""Clique paths and interval models, plus brute-force ordering helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .graph import Graph


@dataclass(frozen=True)
class CliquePath:
    """A linear order of maximal cliques; indices lk/rk are 1-based."""
    cliques: tuple

    def __len__(self):
        return len(self.cliques)

    def lk(self, v) -> int:
        for i, c in enumerate(self.cliques, start=1):
            if v in c:
                return i
        raise KeyError(v)

    def rk(self, v) -> int:
        for i in range(len(self.cliques), 0, -1):
            if v in self.cliques[i - 1]:
                return i
        raise KeyError(v)

    def span(self, v) -> tuple:
        return self.lk(v), self.rk(v)

    def reversed(self) -> "CliquePath":
        return CliquePath(self.cliques[::-1])

    def vertices(self) -> frozenset:
        return frozenset().union(*self.cliques) if self.cliques else frozenset()

    def is_consecutive(self) -> bool:
        """True iff every vertex occupies a contiguous run of cliques."""
        return is_consecutive(self.cliques)


def is_consecutive(cliques) -> bool:
    closed = set()
    prev = frozenset()
    for c in cliques:
        if c & closed:
            return False
        closed |= prev - c
        prev = c
    return True


@dataclass(frozen=True)
class IntervalModel:
    """Closed intervals with exact rational endpoints."""
    lp: dict
    rp: dict

    def __post_init__(self):
        for v in self.lp:
            if self.lp[v] > self.rp[v]:
                raise ValueError(f"interval of {v} has lp > rp")

    @classmethod
    def from_pairs(cls, intervals: dict) -> "IntervalModel":
        return cls({v: Fraction(a) for v, (a, b) in intervals.items()},
                   {v: Fraction(b) for v, (a, b) in intervals.items()})

    def interval(self, v) -> tuple:
        return self.lp[v], self.rp[v]

    def meets(self, a, b) -> bool:
        return self.lp[a] <= self.rp[b] and self.lp[b] <= self.rp[a]

    def doubly_extends(self, v, u) -> bool:
        """lp(v) < lp(u) <= rp(u) < rp(v)."""
        return self.lp[v] < self.lp[u] and self.rp[u] < self.rp[v]

    def shifted(self, delta) -> "IntervalModel":
        delta = Fraction(delta)
        return IntervalModel({v: x + delta for v, x in self.lp.items()},
                             {v: x + delta for v, x in self.rp.items()})

    def endpoints(self) -> list:
        return list(self.lp.values()) + list(self.rp.values())

    def clique_path(self, H: Graph) -> CliquePath:
        """The clique path read off left to right at the left endpoints."""
        seen = []
        for x in sorted(set(self.lp.values())):
            c = frozenset(v for v in self.lp if self.lp[v] <= x <= self.rp[v])
            seen.append(c)
        maximal = [c for c in seen if not any(c < d for d in seen)]
        out = []
        for c in maximal:
            if not out or out[-1] != c:
                out.append(c)
        return CliquePath(tuple(out))


def realizes(H: Graph, m: IntervalModel):
    """Return None if the model realizes H exactly, else the first bad pair."""
    vs = sorted(H.vertices())
    if set(m.lp) != set(vs):
        return ("vertex-set", None)
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if m.meets(a, b) != H.has_edge(a, b):
                return (a, b)
    return None


def clique_path_to_model(p: CliquePath) -> IntervalModel:
    lp, rp = {}, {}
    for v in p.vertices():
        lp[v] = Fraction(p.lk(v))
        rp[v] = Fraction(p.rk(v))
    return IntervalModel(lp, rp)


def consecutive_orders(cliques, limit=None):
    """Yield every ordering (as index tuples) in which each vertex's cliques
    are consecutive.  Backtracking cuts a prefix as soon as some vertex
    reappears after leaving."""
    cliques = list(cliques)
    k = len(cliques)

    def rec(prefix, used, closed):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        last = cliques[prefix[-1]] if prefix else frozenset()
        for i in range(k):
            if i in used:
                continue
            c = cliques[i]
            if c & closed:
                continue
            prefix.append(i)
            yield from rec(prefix, used | {i}, closed | (last - c))
            prefix.pop()

    yield from rec([], frozenset(), frozenset())


def brute_force_is_interval(H: Graph) -> bool:
    from .graph import maximal_cliques
    cl = maximal_cliques(H)
    if not cl:
        return True
    return next(consecutive_orders(cl), None) is not None


def all_clique_orders(cliques) -> set:
    """All consecutive orders by plain permutation filtering."""
    cliques = list(cliques)
    return {perm for perm in permutations(range(len(cliques)))
            if is_consecutive([cliques[i] for i in perm])}
