"""Deciding the pair condition bottom-up over the PQ-tree of G^K, and
turning a satisfying clique path into an interval model with the
doubly-extends property when G has no C4."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .aux import AuxGraph
from .configs import CATALOG, ConfigWitness, find_config, verify_witness
from .errors import PreconditionError
from .graph import find_c4, shortest_path
from .interval import CliquePath, IntervalModel, realizes
from .oracle import satisfies_star
from .pqtree import PQNode, PQTree, build_pqtree, node_sets


@dataclass(frozen=True)
class AdmissibleState:
    node: PQNode
    path: CliquePath
    extreme: frozenset


@dataclass(frozen=True)
class QNodeFrame:
    """Children of a Q-node in order; V[0] and V[l+1] are empty sentinels."""
    children: tuple
    V: tuple
    lc: dict
    rc: dict
    s: tuple


class _Failure(Exception):
    def __init__(self, witness):
        self.witness = witness


# ------------------------------------------------------------ admissibility

def extreme(A: AuxGraph, T: PQTree, X: PQNode) -> frozenset:
    ns = node_sets(T, X)
    return frozenset(u for v, u in A.pairs if u in ns.inner and v in ns.encomp)


def admissibility_violation(A: AuxGraph, T: PQTree, X: PQNode, p: CliquePath):
    """None when p is admissible for X, else (tag, v, u): tag "inner" for a
    pair inside X sharing no end index, "end" for an inner u of an
    encompassing v that misses both end cliques."""
    ns = node_sets(T, X)
    last = len(p)
    for v, u in sorted(A.pairs):
        if u not in ns.inner:
            continue
        if v in ns.inner:
            if p.lk(u) != p.lk(v) and p.rk(u) != p.rk(v):
                return ("inner", v, u)
        elif p.lk(u) != 1 and p.rk(u) != last:
            return ("end", v, u)
    return None


# ----------------------------------------------------------- witness helpers

def fit(A: AuxGraph, cid, vertices):
    """Try every bijection of a fixed configuration onto `vertices`."""
    cfg = CATALOG[cid]
    vs = sorted(set(vertices))
    names = sorted(cfg.vertices)
    if len(vs) != len(names):
        return None
    ks = [x for x in vs if x in A.K]
    pk = [p for p in names if cfg.vertices[p] == "K"]
    pn = [p for p in names if cfg.vertices[p] == "N"]
    pu = [p for p in names if cfg.vertices[p] == "U"]
    if len(ks) < len(pk):
        return None
    for kimg in permutations(ks, len(pk)):
        rest = [x for x in vs if x not in kimg]
        for nimg in permutations([x for x in rest if x not in A.K], len(pn)):
            left = [x for x in rest if x not in nimg]
            for uimg in permutations(left):
                w = ConfigWitness(cid, dict(zip(pk + pn + pu, kimg + nimg + uimg)))
                if verify_witness(A, w):
                    return w
    return None


def _search(A: AuxGraph, scope, anchors):
    """Anchored finder within scope, then unanchored, then anywhere."""
    for v, u in anchors:
        w = find_config(A, restrict=scope, anchor=(v, u))
        if w is not None:
            return w
    w = find_config(A, restrict=scope)
    if w is None:
        w = find_config(A, restrict=A.base.vertices())
    return w


# ------------------------------------------------------------------ P-nodes

def _crowded_ends_witness(A, T, X, cands):
    """Three children each with an extreme vertex."""
    picks = [sorted(c) for c in cands]
    for (v1, u1), (v2, u2), (v3, u3) in product(*picks):
        us = (u1, u2, u3)
        vs = sorted({v1, v2, v3})
        if len(vs) == 1:
            w = fit(A, "a", vs + list(us))
        elif len(vs) == 2:
            w = fit(A, "b", vs + list(us)) or fit(A, "a", [vs[0]] + list(us)) \
                or fit(A, "a", [vs[1]] + list(us))
        else:
            w = fit(A, "c", vs + list(us))
            for v in vs:
                w = w or fit(A, "a", [v] + list(us))
            for a, b in combinations(vs, 2):
                w = w or fit(A, "b", [a, b] + list(us))
        if w is not None:
            return w
    return None


def _split_extremes_witness(A, T, X, B, pairs, first, last, x0s):
    """Extreme vertices of child B at both ends and at no common end."""
    H = A.derived
    inner = node_sets(T, B).inner
    lefts = sorted(u for _, u in pairs if u in first and u not in last)
    rights = sorted(u for _, u in pairs if u in last and u not in first)
    wit = {}
    for v, u in pairs:
        wit.setdefault(u, []).append(v)
    for u1, u2, x0 in product(lefts, rights, x0s):
        for v1, v2 in product(sorted(wit[u1]), sorted(wit[u2])):
            if not H.has_edge(u1, u2):
                p = shortest_path(H, u1, u2, set(inner))
                if p is None:
                    continue
                if v1 == v2:
                    w = ConfigWitness("m", {"v": v1, "x0": x0, "u1": u1, "x1": p[1], "u2": u2},
                                      tuple(p[1:]))
                    cands = [w]
                else:
                    cands = [ConfigWitness("p", {"v1": v1, "v2": v2, "x0": x0, "x2": u1,
                                                 "u": p[1], "x1": u2}, tuple(p[1:])),
                             ConfigWitness("m", {"v": v1, "x0": x0, "u1": u1, "x1": p[1],
                                                 "u2": u2}, tuple(p[1:])),
                             ConfigWitness("m", {"v": v2, "x0": x0, "u1": u1, "x1": p[1],
                                                 "u2": u2}, tuple(p[1:]))]
                for w in cands:
                    if verify_witness(A, w):
                        return w
            else:
                for x1 in sorted(inner & H.adj[u1] - H.adj[u2] - {u2}):
                    for x2 in sorted(inner & H.adj[u2] - H.adj[u1] - H.adj[x1] - {u1, x1}):
                        core = [x0, x1, u1, u2, x2]
                        w = fit(A, "i", core + [v1]) if v1 == v2 else (
                            fit(A, "r", core + [v1, v2]) or fit(A, "i", core + [v1])
                            or fit(A, "i", core + [v2]))
                        if w is not None:
                            return w
    return None


def p_node_combine(A: AuxGraph, T: PQTree, X: PQNode, states) -> AdmissibleState:
    ext = [(st, extreme(A, T, st.node)) for st in states]
    heavy = [(st, e) for st, e in ext if e]
    light = [st for st, e in ext if not e]
    scope = T.vertex_set(X)

    def pairs_of(st):
        ns = node_sets(T, st.node)
        return sorted((v, u) for v, u in A.pairs if u in ns.inner and v in ns.encomp)

    if len(heavy) > 2:
        cands = [pairs_of(st) for st, _ in heavy[:3]]
        w = _crowded_ends_witness(A, T, X, cands)
        if w is None:
            w = _search(A, scope, [p for c in cands for p in c])
        raise _Failure(w)
    oriented = []
    for st, e in heavy:
        first, last = st.path.cliques[0], st.path.cliques[-1]
        if e <= first:
            oriented.append(st.path)
        elif e <= last:
            oriented.append(st.path.reversed())
        else:
            others = [o for o in states if o is not st]
            x0s = sorted(node_sets(T, others[0].node).inner)
            ps = pairs_of(st)
            w = _split_extremes_witness(A, T, X, st.node, ps, first, last, x0s)
            if w is None:
                w = _search(A, scope, ps)
            raise _Failure(w)
    seq = []
    if oriented:
        seq += list(oriented[0].cliques)
    for st in light:
        seq += list(st.path.cliques)
    if len(oriented) == 2:
        seq += list(oriented[1].reversed().cliques)
    return _finish(A, T, X, CliquePath(tuple(seq)))


# ------------------------------------------------------------------ Q-nodes

def q_frame(T: PQTree, X: PQNode) -> QNodeFrame:
    V = [frozenset()] + [T.vertex_set(c) for c in X.children] + [frozenset()]
    lc, rc = {}, {}
    for i in range(1, len(V) - 1):
        for v in V[i]:
            lc.setdefault(v, i)
            rc[v] = i
    s = tuple(len(c.leaves) for c in X.children)
    return QNodeFrame(tuple(X.children), tuple(V), lc, rc, s)


def q_node_combine(A: AuxGraph, T: PQTree, X: PQNode, frame: QNodeFrame, states) -> AdmissibleState:
    scope = T.vertex_set(X)
    seq = []
    for t, st in enumerate(states, start=1):
        ns = node_sets(T, st.node)
        demands = []
        for v, u in sorted(A.pairs):
            if u not in ns.inner or v not in ns.encomp:
                continue
            if frame.lc[v] != t and frame.rc[v] != t:
                raise _Failure(_search(A, scope, [(v, u)]))
            if frame.lc[v] == t:
                demands.append((v, u, 0))
            if frame.rc[v] == t:
                demands.append((v, u, -1))
        for p in (st.path, st.path.reversed()):
            if all(u in p.cliques[end] for _, u, end in demands):
                seq += list(p.cliques)
                break
        else:
            raise _Failure(_search(A, scope, [(v, u) for v, u, _ in demands]))
    return _finish(A, T, X, CliquePath(tuple(seq)))


def _finish(A, T, X, p: CliquePath) -> AdmissibleState:
    bad = admissibility_violation(A, T, X, p)
    if bad is not None:
        raise _Failure(_search(A, T.vertex_set(X), [bad[1:]]))
    return AdmissibleState(X, p, extreme(A, T, X))


# ------------------------------------------------------------------- driver

def _solve(A: AuxGraph, T: PQTree, X: PQNode) -> AdmissibleState:
    if X.is_leaf:
        p = CliquePath((T.cliques[X.clique],))
        return AdmissibleState(X, p, extreme(A, T, X))
    states = [_solve(A, T, c) for c in X.children]
    if X.kind == "P":
        return p_node_combine(A, T, X, states)
    return q_node_combine(A, T, X, q_frame(T, X), states)


def check_star(A: AuxGraph, tree: PQTree = None):
    """A clique path of G^K satisfying the pair condition, or a verified
    configuration witness."""
    T = build_pqtree(A.derived) if tree is None else tree
    if T is None:
        raise PreconditionError("not-interval", "G^K is not an interval graph")
    if T.root is None:
        return CliquePath(())
    try:
        st = _solve(A, T, T.root)
    except _Failure as f:
        w = f.witness
        if w is None or not verify_witness(A, w):
            raise AssertionError("combine failed but no configuration was found")
        return w
    if satisfies_star(A, st.path) is not None:
        raise AssertionError("admissible root path violates the pair condition")
    return st.path


# ---------------------------------------------------------------- sharpness

def _left_order(A: AuxGraph, group, L) -> list:
    """u before v exactly when u is in L(v); K vertices by growing L."""
    ks = sorted((v for v in group if v in A.K), key=lambda v: (len(L[v]), v))
    out = []
    placed = set()
    for v in ks:
        for u in sorted(x for x in group if x not in A.K and x not in placed and x in L[v]):
            out.append(u)
            placed.add(u)
        out.append(v)
    out += sorted(x for x in group if x not in A.K and x not in placed)
    return out


def _spread(order, lo, hi) -> dict:
    step = (hi - lo) / (len(order) + 1)
    return {x: lo + step * (j + 1) for j, x in enumerate(order)}


def star_to_sharp(A: AuxGraph, p: CliquePath) -> IntervalModel:
    """Interval model of G^K in which every K-interval doubly extends
    exactly the intervals of its G-non-neighbours."""
    G = A.base
    c4 = find_c4(G)
    if c4 is not None:
        raise PreconditionError("c4-present", "G contains an induced C4", c4)
    bad = satisfies_star(A, p)
    if bad is not None:
        raise PreconditionError("not-star", "clique path violates the pair condition", bad)
    cl = list(p.cliques)
    t = len(cl)
    third = Fraction(1, 3)
    lp, rp = {}, {}
    for i in range(1, t + 1):
        prev = cl[i - 2] if i > 1 else frozenset()
        nxt = cl[i] if i < t else frozenset()
        for group, side in ((cl[i - 1] - prev, "l"), (cl[i - 1] - nxt, "r")):
            L = {v: frozenset(u for u in G.adj[v] - A.K if u in group) for v in group if v in A.K}
            chain = sorted(L.values(), key=len)
            for a, b in zip(chain, chain[1:]):
                if not a <= b:
                    raise PreconditionError("chain-violation",
                                            "neighbourhood chain broken; G has a C4", sorted(b - a))
            order = _left_order(A, group, L)
            if side == "l":
                lp.update(_spread(order, i - third, Fraction(i)))
            else:
                rp.update(_spread(order[::-1], Fraction(i), i + third))
    m = IntervalModel(lp, rp)
    if realizes(A.derived, m) is not None:
        raise AssertionError("constructed model does not realize G^K")
    return m
