"""Brute-force deciders for small instances.

Each oracle searches exhaustively with simple pruning and is used to
cross-check the structural algorithms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .aux import AuxGraph, build_aux_graph
from .errors import GuardExceeded, guard
from .graph import Graph, maximal_cliques
from .interval import CliquePath, IntervalModel, consecutive_orders

CA_LIMIT = 7
STAR_LIMIT = 8
SHARP_LIMIT = 6


def satisfies_star(A: AuxGraph, p: CliquePath):
    """Return None when every pair of A.pairs shares a left or right clique
    index in p, else the first offending pair."""
    for v, u in sorted(A.pairs):
        if p.lk(u) != p.lk(v) and p.rk(u) != p.rk(v):
            return (v, u)
    return None


# ----------------------------------------------------------- circular arc

def circular_arc_model(G: Graph):
    """Search circular sequences of the 2n arc endpoints.  The start of
    vertex 0 sits at position 0; W is the set of arcs running through the
    point just before it."""
    n = G.n
    if n > guard(CA_LIMIT):
        raise GuardExceeded(f"circular-arc oracle limited to n <= {guard(CA_LIMIT)}", n)
    if n == 0:
        return None
    from .models import ArcModel
    adj = G.adj
    edges = {frozenset(e) for e in G.edges()}

    def search(W):
        seq = [("s", 0)]
        started = {0}
        ended = set()
        is_open = set(W) | {0}
        met = set()
        for w in W:
            met.add(frozenset((0, w)))

        def rec():
            if len(seq) == 2 * n:
                return met >= edges
            for v in range(n):
                # start of v
                if v not in started and (v not in W or v in ended) and is_open <= adj[v]:
                    new = {frozenset((v, x)) for x in is_open} - met
                    seq.append(("s", v)); started.add(v); is_open.add(v); met.update(new)
                    if rec():
                        return True
                    seq.pop(); started.discard(v); is_open.discard(v); met.difference_update(new)
                # end of v
                if v in is_open and v not in ended and (v in started or v in W):
                    closing_forever = v not in W
                    if closing_forever and any(frozenset((v, x)) not in met for x in adj[v]):
                        continue
                    seq.append(("e", v)); ended.add(v); is_open.discard(v)
                    if rec():
                        return True
                    seq.pop(); ended.discard(v); is_open.add(v)
            return False

        return seq if rec() else None

    for k in range(len(adj[0]) + 1):
        for W in combinations(sorted(adj[0]), k):
            if not G.is_clique(W):
                continue
            seq = search(frozenset(W))
            if seq is not None:
                pos = {ev: i for i, ev in enumerate(seq)}
                arcs = {v: (Fraction(pos[("s", v)]), Fraction(pos[("e", v)])) for v in range(n)}
                return ArcModel(Fraction(2 * n), arcs)
    return None


def oracle_circular_arc(G: Graph) -> tuple:
    """(True, model) when G is a circular-arc graph, else (False, None)."""
    m = circular_arc_model(G)
    return m is not None, m


# ------------------------------------------------------------------- star

def star_path(A: AuxGraph):
    """First clique path of G^K satisfying the pair condition, or None."""
    cl = maximal_cliques(A.derived)
    if len(cl) > guard(STAR_LIMIT):
        raise GuardExceeded(f"star oracle limited to {guard(STAR_LIMIT)} cliques", len(cl))
    for order in consecutive_orders(cl):
        p = CliquePath(tuple(cl[i] for i in order))
        if satisfies_star(A, p) is None:
            return p
    return None


def oracle_star(A: AuxGraph) -> bool:
    return star_path(A) is not None


# ------------------------------------------------------------------ sharp

def sharp_model(G: Graph, K):
    """Search linear sequences of the 2n interval endpoints for a model of
    G^K in which K-intervals doubly extend exactly at G-non-edges."""
    n = G.n
    if n > guard(SHARP_LIMIT):
        raise GuardExceeded(f"sharp oracle limited to n <= {guard(SHARP_LIMIT)}", n)
    A = build_aux_graph(G, K)
    H, K = A.derived, A.K
    adj = H.adj
    seq, started, is_open = [], set(), set()
    lpos = {}

    def rec():
        if len(seq) == 2 * n:
            return True
        for v in range(n):
            if v not in started:
                if is_open <= adj[v]:
                    seq.append(("l", v)); started.add(v); is_open.add(v); lpos[v] = len(seq)
                    if rec():
                        return True
                    seq.pop(); started.discard(v); is_open.discard(v); del lpos[v]
            elif v in is_open:
                if any(x not in started for x in adj[v]):
                    continue
                if v not in K and any(
                        (w in is_open and lpos[w] < lpos[v]) == G.has_edge(v, w) for w in K):
                    continue
                seq.append(("r", v)); is_open.discard(v)
                if rec():
                    return True
                seq.pop(); is_open.add(v)
        return False

    if not rec():
        return None
    pos = {ev: Fraction(i + 1) for i, ev in enumerate(seq)}
    return IntervalModel({v: pos[("l", v)] for v in range(n)},
                         {v: pos[("r", v)] for v in range(n)})


def oracle_sharp(G: Graph, K) -> bool:
    return sharp_model(G, K) is not None
