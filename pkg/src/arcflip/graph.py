"""Immutable simple graphs and the structural predicates used everywhere else.

Vertices are dense integer indices ``0..n-1``; labels are a parallel tuple of
strings used only for input and output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

import networkx as nx

from .errors import GuardExceeded, ParseError, guard

CLIQUE_GUARD = 10 ** 6


@dataclass(frozen=True)
class Graph:
    labels: tuple
    adj: tuple
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adj):
            raise ValueError("labels and adjacency differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at {self.labels[v]}")
            for u in nbrs:
                if v not in self.adj[u]:
                    raise ValueError("adjacency is not symmetric")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_edges(cls, labels, edges: Iterable) -> "Graph":
        """Build a graph from labels (or a vertex count) and index pairs."""
        if isinstance(labels, int):
            labels = [str(i + 1) for i in range(labels)]
        labels = tuple(str(x) for x in labels)
        adj = [set() for _ in labels]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {labels[u]}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(labels, tuple(frozenset(a) for a in adj))

    @classmethod
    def from_labeled_edges(cls, labels, edges) -> "Graph":
        """Build a graph from labels and pairs of labels."""
        labels = [str(x) for x in labels]
        pos = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(labels, [(pos[str(a)], pos[str(b)]) for a, b in edges])

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = list(g.nodes())
        pos = {x: i for i, x in enumerate(nodes)}
        return cls.from_edges([str(x) for x in nodes], [(pos[a], pos[b]) for a, b in g.edges()])

    @property
    def n(self) -> int:
        return len(self.labels)

    def vertices(self):
        return range(self.n)

    def has_edge(self, u, v) -> bool:
        return v in self.adj[u]

    def degree(self, v) -> int:
        return len(self.adj[v])

    def closed(self, v) -> frozenset:
        return self.adj[v] | {v}

    def edges(self):
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def indices(self, labels) -> frozenset:
        return frozenset(self.index(x) for x in labels)

    def name(self, v) -> str:
        return self.labels[v]

    def names(self, vs) -> list:
        return [self.labels[v] for v in sorted(vs)]

    def is_clique(self, vs) -> bool:
        vs = list(vs)
        return all(b in self.adj[a] for a, b in combinations(vs, 2))

    def induced(self, vs) -> tuple:
        """Return ``(H, order)`` where H is the induced subgraph and
        ``order[i]`` is the vertex of this graph that became vertex i of H."""
        order = sorted(vs)
        pos = {v: i for i, v in enumerate(order)}
        edges = [(pos[a], pos[b]) for a in order for b in self.adj[a] if b in pos and a < b]
        return Graph.from_edges([self.labels[v] for v in order], edges), order

    def complement(self) -> "Graph":
        edges = [(u, v) for u, v in combinations(range(self.n), 2) if v not in self.adj[u]]
        return Graph.from_edges(self.labels, edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def is_connected(self, vs=None) -> bool:
        vs = set(range(self.n)) if vs is None else set(vs)
        if not vs:
            return True
        return len(component(self, next(iter(vs)), vs)) == len(vs)


def component(G: Graph, start, allowed) -> set:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in G.adj[x]:
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def components(G: Graph, allowed=None) -> list:
    allowed = set(range(G.n)) if allowed is None else set(allowed)
    out = []
    left = set(allowed)
    while left:
        c = component(G, min(left), allowed)
        out.append(frozenset(c))
        left -= c
    return out


def shortest_path(G: Graph, a, b, allowed) -> Optional[list]:
    """BFS path from a to b using only vertices in `allowed` (plus a, b)."""
    allowed = set(allowed) | {a, b}
    prev = {a: None}
    queue = [a]
    for x in queue:
        if x == b:
            break
        for y in sorted(G.adj[x]):
            if y in allowed and y not in prev:
                prev[y] = x
                queue.append(y)
    if b not in prev:
        return None
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


# ---------------------------------------------------------------- parsing

def load_graph(text) -> Graph:
    """Parse an edge-list payload or a graph6 string."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    body = [ln.strip() for ln in text.splitlines()]
    first = next((ln for ln in body if ln and not ln.startswith("#")), None)
    if first is None:
        raise ParseError("empty input")
    if first.split()[0].lstrip('-').isdigit():
        return _parse_edge_list(text)
    return _parse_graph6(first)


def _parse_edge_list(text) -> Graph:
    header = None
    labels = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if parts and parts[0] == "label":
                if len(parts) != 3:
                    raise ParseError("expected '#label i name'", lineno)
                try:
                    labels[int(parts[1])] = parts[2].strip()
                except ValueError:
                    raise ParseError(f"bad label index {parts[1]!r}", lineno) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative header value", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"vertex out of range 1..{n}: {line!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        edges.append((a - 1, b - 1))
    if header is None:
        raise ParseError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    for i in labels:
        if not 1 <= i <= n:
            raise ParseError(f"label index {i} out of range")
    names = [labels.get(i + 1, str(i + 1)) for i in range(n)]
    if len(set(names)) != n:
        raise ParseError("duplicate vertex labels")
    return Graph.from_edges(names, set(tuple(sorted(e)) for e in edges))


def _parse_graph6(line) -> Graph:
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    try:
        g = nx.from_graph6_bytes(line.encode("ascii"))
    except Exception as exc:  # networkx raises a bare NetworkXError here
        raise ParseError(f"invalid graph6 data: {exc}", 1) from None
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def render(G: Graph, fmt="edgelist") -> str:
    """Serialize to ``edgelist`` or ``graph6`` text."""
    if fmt == "graph6":
        return nx.to_graph6_bytes(G.to_networkx(), header=False).decode("ascii").strip() + "\n"
    lines = [f"{G.n} {G.m}"]
    default = all(lab == str(i + 1) for i, lab in enumerate(G.labels))
    if not default:
        lines += [f"#label {i + 1} {lab}" for i, lab in enumerate(G.labels)]
    lines += [f"{u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- structure

@dataclass(frozen=True)
class StructureReport:
    universal_vertices: frozenset
    twin_classes: tuple
    is_c4_free: bool
    is_chordal: bool
    c4_witness: Optional[tuple] = None
    hole_witness: Optional[tuple] = None


def universal_vertices(G: Graph) -> frozenset:
    return frozenset(v for v in G.vertices() if G.degree(v) == G.n - 1)


def twin_classes(G: Graph) -> tuple:
    groups = {}
    for v in G.vertices():
        groups.setdefault(G.closed(v), []).append(v)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def find_c4(G: Graph, allowed=None) -> Optional[tuple]:
    """Return an induced 4-cycle (a, b, c, d) in cyclic order, or None."""
    vs = range(G.n) if allowed is None else sorted(allowed)
    ok = set(vs)
    for a in vs:
        for b, d in combinations(sorted(G.adj[a] & ok), 2):
            if G.has_edge(b, d):
                continue
            for c in sorted((G.adj[b] & G.adj[d] & ok) - {a}):
                if c > a and not G.has_edge(a, c):
                    return (a, b, c, d)
    return None


def c4_through_edge(G: Graph, v, w) -> Optional[tuple]:
    """An induced C4 using the edge vw, as (v, w, a, b), or None."""
    only_v = G.adj[v] - G.closed(w)
    only_w = G.adj[w] - G.closed(v)
    for b in sorted(only_v):
        for a in sorted(only_w & G.adj[b]):
            return (v, w, a, b)
    return None


def find_hole(G: Graph, allowed=None) -> Optional[tuple]:
    """Return an induced cycle of length at least four, or None."""
    ok = set(range(G.n)) if allowed is None else set(allowed)
    for v in sorted(ok):
        nbrs = sorted(G.adj[v] & ok)
        for a, b in combinations(nbrs, 2):
            if G.has_edge(a, b):
                continue
            avoid = (G.closed(v) & ok) - {a, b}
            path = shortest_path(G, a, b, ok - avoid)
            if path is not None:
                return tuple([v] + path)
    return None


def simplicial_vertices(G: Graph, allowed=None) -> frozenset:
    ok = set(range(G.n)) if allowed is None else set(allowed)
    return frozenset(v for v in ok if G.is_clique(G.adj[v] & ok))


def is_chordal(G: Graph) -> bool:
    """Repeatedly strip simplicial vertices; chordal iff everything goes."""
    left = set(range(G.n))
    while left:
        simp = simplicial_vertices(G, left)
        if not simp:
            return False
        left -= {min(simp)}
    return True


def structure_report(G: Graph) -> StructureReport:
    c4 = find_c4(G)
    hole = c4 if c4 is not None else find_hole(G)
    return StructureReport(
        universal_vertices=universal_vertices(G),
        twin_classes=twin_classes(G),
        is_c4_free=c4 is None,
        is_chordal=hole is None,
        c4_witness=c4,
        hole_witness=hole,
    )


# --------------------------------------------------------------- cliques

def maximal_cliques(G: Graph, allowed=None, limit=None) -> list:
    """Maximal cliques via Bron-Kerbosch with pivoting, sorted for stability."""
    limit = guard(CLIQUE_GUARD) if limit is None else limit
    ok = frozenset(range(G.n)) if allowed is None else frozenset(allowed)
    if not ok:
        return []
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            if len(out) > limit:
                raise GuardExceeded(f"more than {limit} maximal cliques")
            return
        pivot = max(p | x, key=lambda w: len(G.adj[w] & p))
        for v in sorted(p - G.adj[pivot]):
            expand(r | {v}, p & G.adj[v], x & G.adj[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), ok, frozenset())
    return sorted(out, key=lambda c: sorted(c))


def all_cliques(G: Graph, limit=None) -> list:
    """Every nonempty clique, ordered by decreasing size then lexicographically."""
    limit = guard(CLIQUE_GUARD) if limit is None else limit
    out = []

    def grow(clique, cand):
        for v in sorted(cand):
            c = clique + (v,)
            out.append(frozenset(c))
            if len(out) > limit:
                raise GuardExceeded(f"more than {limit} cliques")
            grow(c, {w for w in cand & G.adj[v] if w > v})

    grow((), set(range(G.n)))
    return sorted(out, key=lambda c: (-len(c), sorted(c)))
