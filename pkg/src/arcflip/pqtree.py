"""Interval recognition through PQ-trees over maximal cliques.

The tree is built by recursive decomposition of the clique sets of the
vertices: overlap components whose union is the whole current clique set
give Q-nodes (children are the classes of their Venn partition, in order);
otherwise the current node is a P-node whose children are the maximal
unions below it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import factorial
from typing import Optional

import networkx as nx

from .errors import GuardExceeded, guard
from .graph import Graph, find_hole, maximal_cliques, shortest_path
from .interval import CliquePath, is_consecutive

PATH_LIMIT = 100_000


class NotC1P(Exception):
    pass


@dataclass(eq=False)
class PQNode:
    kind: str                    # "P", "Q" or "L"
    children: tuple = ()
    clique: Optional[int] = None
    leaves: frozenset = field(default=frozenset())

    @property
    def is_leaf(self):
        return self.kind == "L"

    def __repr__(self):
        if self.is_leaf:
            return f"K{self.clique}"
        return f"({self.kind} " + " ".join(map(repr, self.children)) + ")"


def _leaf(i):
    return PQNode("L", (), i, frozenset([i]))


def _inner(kind, children):
    return PQNode(kind, tuple(children), None, frozenset().union(*(c.leaves for c in children)))


@dataclass
class PQTree:
    graph: Graph
    cliques: list
    root: Optional[PQNode]

    def nodes(self) -> list:
        """All nodes in post-order."""
        out = []

        def walk(x):
            for c in x.children:
                walk(c)
            out.append(x)
        if self.root is not None:
            walk(self.root)
        return out

    def internal_nodes(self) -> list:
        return [x for x in self.nodes() if not x.is_leaf]

    def frontier(self, node=None) -> list:
        node = self.root if node is None else node
        if node is None:
            return []
        if node.is_leaf:
            return [node.clique]
        return [i for c in node.children for i in self.frontier(c)]

    def default_path(self) -> CliquePath:
        return CliquePath(tuple(self.cliques[i] for i in self.frontier()))

    def clique_sets(self, node) -> list:
        return [self.cliques[i] for i in sorted(node.leaves)]

    def vertex_set(self, node) -> frozenset:
        return frozenset().union(*self.clique_sets(node))

    def path_count(self) -> int:
        total = 1
        for x in self.internal_nodes():
            total *= factorial(len(x.children)) if x.kind == "P" else 2
        return total

    def canonical(self, name=None) -> str:
        """A string equal for two trees iff they agree up to P-node child
        permutation and Q-node reversal.  `name` maps clique index to text."""
        name = name or (lambda i: "{" + ",".join(sorted(self.graph.names(self.cliques[i]))) + "}")

        def canon(x):
            if x.is_leaf:
                return name(x.clique)
            parts = [canon(c) for c in x.children]
            if x.kind == "P":
                parts.sort()
            else:
                parts = min(parts, parts[::-1])
            return f"({x.kind} " + " ".join(parts) + ")"
        return canon(self.root) if self.root is not None else "()"

    def sexpr(self) -> str:
        """Nested s-expression with cliques numbered K1.. in frontier order."""
        order = {c: i + 1 for i, c in enumerate(self.frontier())}

        def show(x):
            if x.is_leaf:
                return f"K{order[x.clique]}"
            return f"({x.kind} " + " ".join(show(c) for c in x.children) + ")"
        return show(self.root) if self.root is not None else "()"


@dataclass(frozen=True)
class NodeSets:
    inner: frozenset
    encomp: frozenset
    univ: frozenset


@dataclass(frozen=True)
class NonIntervalWitness:
    vertices: frozenset
    kind: str


@dataclass(frozen=True)
class EndCliqueWitness:
    """An induced subgraph that keeps `u` out of both end cliques.

    `roles` maps role names to vertices; `path` lists the induced path from
    u for shape (c)."""
    shape: str
    u: int
    roles: dict
    path: tuple = ()

    def vertices(self) -> frozenset:
        return frozenset(self.roles.values()) | frozenset(self.path)


# ------------------------------------------------------------ construction

def _order_component(sets) -> list:
    """Order the Venn classes of an overlap component consecutively."""
    todo = list(sets)
    first = todo.pop(0)
    seq = [frozenset(first)]
    union = set(first)
    while todo:
        idx = next(i for i, z in enumerate(todo) if any(_overlap(z, y) for y in sets if y not in todo))
        z = todo.pop(idx)
        seq = _insert(seq, union, z)
        union |= z
    return seq


def _overlap(a, b):
    return bool(a & b) and not a <= b and not b <= a


def _insert(seq, union, z):
    new = z - union
    hit = [i for i, c in enumerate(seq) if c & z]
    a, b = hit[0], hit[-1]
    for i in range(a + 1, b):
        if not seq[i] <= z:
            raise NotC1P()
    options = []
    if new:
        options = [("right", seq), ("left", seq[::-1])]
    else:
        options = [("none", seq)]
    for side, s in options:
        hit = [i for i, c in enumerate(s) if c & z]
        a, b = hit[0], hit[-1]
        if side != "none" and b != len(s) - 1:
            continue
        if side != "none" and a != b and not s[b] <= z:
            continue
        out = list(s[:a])
        if a == b:
            c = s[a]
            if side == "none":
                if c <= z:
                    out.append(c)
                else:
                    raise NotC1P()  # z strictly inside one class cannot overlap the component
            else:
                if c - z:
                    out.append(c - z)
                out.append(c & z)
        else:
            if s[a] - z:
                out.append(s[a] - z)
            out.append(s[a] & z)
            out.extend(s[a + 1:b])
            out.append(s[b] & z)
            if side == "none" and s[b] - z:
                out.append(s[b] - z)
        out.extend(s[b + 1:])
        if new:
            out.append(frozenset(new))
        if side == "left":
            out = out[::-1]
        return out
    raise NotC1P()


def _build(S, sets):
    if len(S) == 1:
        return _leaf(next(iter(S)))
    sets = list({z for z in sets if z < S and len(z) >= 2})
    sets.sort(key=lambda z: (len(z), sorted(z)))
    # overlap components
    comp = {}
    for i, z in enumerate(sets):
        comp[i] = i

    def find(i):
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i
    for i, j in combinations(range(len(sets)), 2):
        if _overlap(sets[i], sets[j]):
            comp[find(i)] = find(j)
    groups = {}
    for i in range(len(sets)):
        groups.setdefault(find(i), []).append(sets[i])
    unions = []
    for members in groups.values():
        u = frozenset().union(*members)
        if len(members) >= 2 and u == S:
            classes = _order_component(members)
            if frozenset().union(*classes) != S:
                raise NotC1P()
            kids = [_build(c, [z for z in sets if z <= c]) for c in classes]
            return _inner("Q", kids)
        unions.append(u)
    tops = [u for u in set(unions) if not any(u < w for w in unions)]
    covered = frozenset().union(*tops) if tops else frozenset()
    parts = sorted(tops, key=min) + [frozenset([x]) for x in sorted(S - covered)]
    parts.sort(key=min)
    if len(parts) < 2:
        raise NotC1P()
    kids = [_build(c, [z for z in sets if z <= c]) for c in parts]
    return _inner("P", kids)


def build_pqtree(H: Graph, cliques=None) -> Optional[PQTree]:
    """Return the PQ-tree of H, or None when H is not an interval graph."""
    cliques = maximal_cliques(H) if cliques is None else list(cliques)
    if not cliques:
        return PQTree(H, [], None)
    if len(cliques) > max(H.n, 1):
        return None
    member = {}
    for i, c in enumerate(cliques):
        for v in c:
            member.setdefault(v, set()).add(i)
    sets = {frozenset(s) for s in member.values()}
    try:
        root = _build(frozenset(range(len(cliques))), sets)
    except NotC1P:
        return None
    tree = PQTree(H, cliques, root)
    if not tree.default_path().is_consecutive():
        return None
    return tree


def is_interval(H: Graph) -> bool:
    return build_pqtree(H) is not None


# -------------------------------------------------------------- witnesses

def _is_hole(H: Graph) -> bool:
    return H.n >= 4 and all(H.degree(v) == 2 for v in H.vertices()) and H.is_connected()


def classify(H: Graph) -> str:
    if _is_hole(H):
        return "hole"
    g = H.to_networkx()
    from . import fixtures
    shapes = [("long-claw", fixtures.long_claw()), ("whipping-top", fixtures.whipping_top())]
    if H.n >= 6:
        shapes += [("dagger", fixtures.dagger(H.n)), ("double-dagger", fixtures.double_dagger(H.n))]
    for kind, F in shapes:
        if F.n == H.n and F.m == H.m and nx.is_isomorphic(g, F.to_networkx()):
            return kind
    return "unclassified-minimal"


def minimal_non_interval(H: Graph) -> NonIntervalWitness:
    """Deletion-minimal non-interval induced subgraph of a non-interval H."""
    hole = find_hole(H)
    if hole is not None:
        return NonIntervalWitness(frozenset(hole), "hole")
    keep = set(H.vertices())
    for v in sorted(H.vertices()):
        sub, _ = H.induced(keep - {v})
        if not is_interval(sub):
            keep.discard(v)
    sub, _ = H.induced(keep)
    return NonIntervalWitness(frozenset(keep), classify(sub))


def recognize_interval(H: Graph):
    """PQTree when H is interval, otherwise a NonIntervalWitness."""
    tree = build_pqtree(H)
    if tree is not None:
        return tree
    return minimal_non_interval(H)


def verify_non_interval_witness(H: Graph, w: NonIntervalWitness) -> bool:
    sub, _ = H.induced(w.vertices)
    if is_interval(sub):
        return False
    for v in w.vertices:
        s2, _ = H.induced(w.vertices - {v})
        if not is_interval(s2):
            return False
    return True


# ----------------------------------------------------------- clique paths

def _frontiers(x):
    if x.is_leaf:
        yield (x.clique,)
        return
    if x.kind == "Q":
        for combo in product(*[list(_frontiers(c)) for c in x.children]):
            seq = tuple(i for part in combo for i in part)
            yield seq
        for combo in product(*[list(_frontiers(c)) for c in x.children[::-1]]):
            yield tuple(i for part in combo for i in part)
        return
    kids = [list(_frontiers(c)) for c in x.children]
    for perm in permutations(range(len(kids))):
        for combo in product(*[kids[i] for i in perm]):
            yield tuple(i for part in combo for i in part)


def clique_paths(T: PQTree, limit=None) -> list:
    limit = guard(PATH_LIMIT) if limit is None else limit
    if T.root is None:
        return [CliquePath(())]
    total = T.path_count()
    if total > limit:
        raise GuardExceeded(f"{total} clique paths exceed the limit {limit}", total)
    return [CliquePath(tuple(T.cliques[i] for i in seq)) for seq in _frontiers(T.root)]


def node_sets(T: PQTree, A: PQNode) -> NodeSets:
    H = T.graph
    VA = T.vertex_set(A)
    member = {v: frozenset(i for i, c in enumerate(T.cliques) if v in c) for v in VA}
    inner = frozenset(v for v in VA if member[v] <= A.leaves)
    univ = frozenset(v for v in VA if VA - {v} <= H.adj[v])
    return NodeSets(inner, VA - inner, univ)


def parent_map(T: PQTree) -> dict:
    out = {}
    for x in T.nodes():
        for c in x.children:
            out[id(c)] = x
    return out


# ------------------------------------------------------------ end cliques

def _can_start(T: PQTree, x, u) -> bool:
    if x.is_leaf:
        return u in T.cliques[x.clique]
    if x.kind == "P":
        return any(_can_start(T, c, u) for c in x.children)
    return _can_start(T, x.children[0], u) or _can_start(T, x.children[-1], u)


def end_clique_feasible(H: Graph, u, tree: PQTree = None):
    """True when some clique path puts u in an end clique, else a witness."""
    tree = build_pqtree(H) if tree is None else tree
    if tree is None:
        raise ValueError("graph is not an interval graph")
    if tree.root is None or _can_start(tree, tree.root, u):
        return True
    w = find_end_clique_witness(H, u)
    if w is None:
        raise AssertionError("end-clique infeasible but no obstruction found")
    return w


def find_end_clique_witness(H: Graph, u) -> Optional[EndCliqueWitness]:
    adj = H.adj
    nu = adj[u]
    # (a) u is the centre of an induced P5
    for x1, x3 in combinations(sorted(nu), 2):
        if x3 in adj[x1]:
            continue
        for x0 in sorted(adj[x1] - adj[u] - adj[x3] - {u, x3}):
            for x4 in sorted(adj[x3] - adj[u] - adj[x1] - adj[x0] - {u, x1, x0}):
                return EndCliqueWitness("a", u, {"x0": x0, "x1": x1, "x3": x3, "x4": x4})
    # (b) u hangs off the centre of an induced P5
    for c in sorted(nu):
        cand = sorted(adj[c] - adj[u] - {u})
        for x1, x3 in combinations(cand, 2):
            if x3 in adj[x1]:
                continue
            bad0 = adj[c] | adj[u] | adj[x3] | {c, u, x3}
            for x0 in sorted(adj[x1] - bad0):
                bad4 = adj[c] | adj[u] | adj[x1] | adj[x0] | {c, u, x1, x0}
                for x4 in sorted(adj[x3] - bad4):
                    return EndCliqueWitness("b", u, {"c": c, "x0": x0, "x1": x1, "x3": x3, "x4": x4})
    # (c) an induced path from u inside N(c), a pendant t on c, a pendant w at the far end
    for c in sorted(nu):
        for t in sorted(adj[c] - adj[u] - {u}):
            inside = (adj[c] - adj[t]) - {t}
            for pk in sorted(inside - {u}):
                for w in sorted(adj[pk] - adj[c] - adj[t] - adj[u] - {c, t, u}):
                    allowed = {x for x in inside if w not in adj[x]} | {pk}
                    p = shortest_path(H, u, pk, allowed)
                    if p is not None:
                        return EndCliqueWitness("c", u, {"c": c, "t": t, "w": w}, tuple(p))
    return None


def verify_end_clique_witness(H: Graph, w: EndCliqueWitness) -> bool:
    """Check the induced structure of a EndCliqueWitness."""
    r = w.roles
    if w.shape == "a":
        seq = [r["x0"], r["x1"], w.u, r["x3"], r["x4"]]
        edges = {frozenset(p) for p in zip(seq, seq[1:])}
        vs = seq
    elif w.shape == "b":
        seq = [r["x0"], r["x1"], r["c"], r["x3"], r["x4"]]
        edges = {frozenset(p) for p in zip(seq, seq[1:])} | {frozenset((r["c"], w.u))}
        vs = seq + [w.u]
    else:
        p = list(w.path)
        if len(p) < 2 or p[0] != w.u:
            return False
        edges = {frozenset(e) for e in zip(p, p[1:])}
        edges |= {frozenset((r["c"], x)) for x in p}
        edges |= {frozenset((r["c"], r["t"])), frozenset((p[-1], r["w"]))}
        vs = p + [r["c"], r["t"], r["w"]]
    if len(set(vs)) != len(vs):
        return False
    return all(H.has_edge(a, b) == (frozenset((a, b)) in edges) for a, b in combinations(vs, 2))
