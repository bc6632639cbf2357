"""The eighteen annotated interval configurations that obstruct the pair
condition, with an embedding verifier and a backtracking finder.

Vertex annotations: "K" (in K), "N" (not in K), "U" (uncertain).
Edge annotations between a K vertex and an N vertex: "T" (in G), "t" (not
in G), "?" (uncertain).  Growth families replace one edge by an induced path
whose inner vertices are adjacent to the attach vertices and to nothing else
in the fixed part.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .aux import AuxGraph, build_aux_graph
from .errors import GuardExceeded, PreconditionError, guard
from .graph import Graph, shortest_path
from .models import Check

FINDER_LIMIT = 12


@dataclass(frozen=True)
class Configuration:
    id: str
    name: str
    vertices: dict          # pattern vertex -> "K" | "N" | "U"
    edges: tuple            # pattern edges, growth edge included
    marks: dict             # frozenset((k, n)) -> "T" | "t" | "?"
    growth: Optional[tuple] = None   # (a, b, attach vertices)
    min_size: int = 0

    def adjacent(self, a, b) -> bool:
        return frozenset((a, b)) in self._edge_set

    @property
    def _edge_set(self):
        return frozenset(frozenset(e) for e in self.edges)

    def mark(self, a, b):
        return self.marks.get(frozenset((a, b)))

    def thick(self) -> list:
        """Pattern (k, n) pairs annotated in G."""
        out = []
        for e, m in sorted(self.marks.items(), key=lambda kv: sorted(kv[0])):
            if m == "T":
                a, b = sorted(e)
                out.append((a, b) if self.vertices[a] == "K" else (b, a))
        return out


def _cfg(id, name, ks, ns, us, edges, marks, growth=None, min_size=0):
    verts = {**{v: "K" for v in ks}, **{v: "N" for v in ns}, **{v: "U" for v in us}}
    edges = tuple(tuple(e.split("-")) for e in edges.split())
    mk = {}
    for tok in marks.split():
        e, m = tok.split("=")
        a, b = e.split("-")
        mk[frozenset((a, b))] = m
    for a, b in edges:
        if {verts[a], verts[b]} == {"K", "N"} and frozenset((a, b)) not in mk:
            mk[frozenset((a, b))] = "t"
    return Configuration(id, name, verts, edges, mk, growth, min_size)


CATALOG = {c.id: c for c in [
    _cfg("a", "claw", ["v"], ["u1", "u2", "u3"], [],
         "v-u1 v-u2 v-u3", "v-u1=T v-u2=T v-u3=T"),
    _cfg("b", "double-claw", ["v1", "v2"], ["u1", "u2", "u3"], [],
         "v1-v2 v1-u1 v2-u2 v2-u3 v1-u3 v2-u1 v1-u2",
         "v1-u1=T v2-u2=T v2-u3=T v1-u2=?"),
    _cfg("c", "triple-claw", ["v1", "v2", "v3"], ["u1", "u2", "u3"], [],
         "v1-v2 v2-v3 v1-v3 " + " ".join(f"v{i}-u{j}" for i in (1, 2, 3) for j in (1, 2, 3)),
         "v1-u1=T v2-u2=T v3-u3=T"),
    _cfg("d", "p5+1", ["v"], ["u"], ["x1", "a", "b", "x2"],
         "x1-a a-v v-b b-x2 v-u", "v-u=T"),
    _cfg("e", "fork", ["v"], ["u1", "u2"], ["x1", "x2"],
         "v-u1 v-u2 v-x2 x2-x1", "v-u1=T v-u2=T"),
    _cfg("f", "double-fork", ["v1", "v2"], ["u1", "u2"], ["x1", "x2"],
         "x1-x2 x2-v1 x2-v2 v1-v2 v1-u1 v2-u2 v1-u2 v2-u1",
         "v1-u1=T v2-u2=T v2-u1=?"),
    _cfg("g", "double-fork+1", ["v1", "v2"], ["u1", "u2"], ["x1", "x2"],
         "x1-x2 x2-v1 x2-v2 x1-v2 v1-v2 v1-u1 v2-u2 v1-u2 v2-u1",
         "v1-u1=T v2-u2=T v2-u1=?"),
    _cfg("h", "p5x1", ["v"], ["u"], ["x1", "x2", "x3", "x4"],
         "x1-x2 x2-u u-x3 x3-x4 v-x1 v-x2 v-u v-x3 v-x4", "v-u=T"),
    _cfg("i", "(p4+p1)*1", ["v"], ["u1", "u2"], ["x1", "x2", "x0"],
         "x1-u1 u1-u2 u2-x2 v-x1 v-u1 v-u2 v-x2 v-x0", "v-u1=T v-u2=T"),
    _cfg("j", "ab-wheel", ["v1", "v2"], ["u"], ["x1", "x2", "x3"],
         "x1-v1 v1-v2 v2-x2 u-v1 u-v2 x3-v1 x3-v2", "v1-u=T v2-u=T"),
    _cfg("k", "whipping-top-1", ["v"], ["u"], ["x1", "x2", "c", "p"],
         "x1-x2 x2-v v-u c-x1 c-x2 c-v c-u v-p", "v-u=T"),
    _cfg("l", "bent-whipping-top", ["v"], ["u"], ["x1", "x2", "x3", "x4", "x5"],
         "x1-x2 x2-x3 x3-x4 x4-x5 v-x1 v-x2 v-x3 v-x4 v-x5 v-u u-x3", "v-u=T"),
    _cfg("m", "dag+2e", ["v"], ["u1", "u2"], ["x0", "x1"],
         "v-x0 u1-x1 x1-u2 v-u1 v-x1 v-u2", "v-u1=T v-u2=T",
         growth=("x1", "u2", ("v",)), min_size=5),
    _cfg("n", "dag+e", ["v"], ["u"], ["x0", "x1", "x2", "x3"],
         "v-x0 x1-x2 x2-x3 x3-u v-x2 v-x3 v-u", "v-u=T",
         growth=("x3", "u", ("v",)), min_size=6),
    _cfg("o", "ddag+e", ["v"], ["x5"], ["x1", "x2", "x3", "x4"],
         "v-x2 x1-v x1-x2 x3-x4 x4-x5 v-x3 v-x4 v-x5 x2-x4 x2-x5", "v-x5=T",
         growth=("x4", "x5", ("v", "x2")), min_size=6),
    _cfg("p", "ddag+2e", ["v1", "v2"], ["x1", "x2"], ["u", "x0"],
         "v1-v2 x0-v1 x0-v2 x2-u u-x1 v1-u v2-u v1-x1 v1-x2 v2-x1 v2-x2",
         "v1-x2=T v2-x1=T",
         growth=("u", "x1", ("v1", "v2")), min_size=6),
    _cfg("q", "add-1", ["v1", "v2"], ["u1", "u2"], ["x0", "x1", "x2"],
         "x1-v1 v1-v2 v2-x2 x0-v1 x0-v2 u1-u2 v1-u1 v2-u2 v2-u1 v1-u2",
         "v1-u1=T v2-u2=T"),
    _cfg("r", "add-2", ["v1", "v2"], ["u1", "u2"], ["x0", "x1", "x2"],
         "v1-v2 x0-v1 x0-v2 x1-u1 u1-u2 u2-x2 "
         + " ".join(f"v{i}-{y}" for i in (1, 2) for y in ("u1", "u2", "x1", "x2")),
         "v1-u1=T v2-u2=T"),
]}

BY_NAME = {c.name: c for c in CATALOG.values()}


def get_config(key) -> Configuration:
    if key in CATALOG:
        return CATALOG[key]
    if key in BY_NAME:
        return BY_NAME[key]
    raise KeyError(f"unknown configuration {key!r}")


@dataclass(frozen=True)
class ConfigWitness:
    """An annotated copy of a configuration in G^K.

    `path` is empty for fixed configurations; for growth families it is the
    full host path from the image of the first growth vertex to the image of
    the second, inclusive.
    """
    config_id: str
    mapping: dict
    path: tuple = ()

    def vertices(self) -> frozenset:
        return frozenset(self.mapping.values()) | frozenset(self.path)

    def to_json(self, G: Graph = None) -> dict:
        name = (lambda v: G.name(v)) if G is not None else (lambda v: v)
        return {"config": CATALOG[self.config_id].name,
                "map": {k: name(v) for k, v in sorted(self.mapping.items())},
                "path": [name(v) for v in self.path]}


def witness_from_json(G: Graph, data: dict) -> ConfigWitness:
    cfg = get_config(data["config"])
    return ConfigWitness(cfg.id, {k: G.index(v) for k, v in data["map"].items()},
                         tuple(G.index(v) for v in data.get("path", [])))


# --------------------------------------------------------------- verifier

def expand(cfg: Configuration, w: ConfigWitness):
    """The pattern grown along w.path, as (host vertex -> annotation,
    set of host edges, marks keyed by host pairs)."""
    ann = {w.mapping[p]: a for p, a in cfg.vertices.items()}
    edges = set()
    for a, b in cfg.edges:
        edges.add(frozenset((w.mapping[a], w.mapping[b])))
    marks = {frozenset(w.mapping[p] for p in e): m for e, m in cfg.marks.items()}
    if cfg.growth and len(w.path) > 2:
        a, b, attach = cfg.growth
        edges.discard(frozenset((w.mapping[a], w.mapping[b])))
        edges |= {frozenset(e) for e in zip(w.path, w.path[1:])}
        for x in w.path[1:-1]:
            ann[x] = "U"
            edges |= {frozenset((x, w.mapping[t])) for t in attach}
    return ann, edges, marks


def verify_witness(A: AuxGraph, w: ConfigWitness) -> Check:
    """Check an annotated copy clause by clause; the violation names the
    clause and the offending host vertices."""
    if w.config_id not in CATALOG:
        return Check(False, ("unknown-config", w.config_id))
    cfg = CATALOG[w.config_id]
    if set(w.mapping) != set(cfg.vertices):
        return Check(False, ("malformed", "mapping does not cover the pattern"))
    images = list(w.mapping.values())
    if len(set(images)) != len(images) or any(not 0 <= x < A.n for x in images):
        return Check(False, ("malformed", "mapping is not injective"))
    if cfg.growth:
        a, b, _ = cfg.growth
        if len(w.path) < 2 or w.path[0] != w.mapping[a] or w.path[-1] != w.mapping[b]:
            return Check(False, ("malformed", "growth path has the wrong ends"))
        if set(w.path[1:-1]) & set(images) or len(set(w.path)) != len(w.path):
            return Check(False, ("malformed", "growth path repeats a vertex"))
    elif w.path:
        return Check(False, ("malformed", "fixed configuration with a path"))
    ann, edges, marks = expand(cfg, w)
    if len(ann) < cfg.min_size:
        return Check(False, ("malformed", "configuration below its minimum size"))
    H, G = A.derived, A.base
    for x in sorted(ann):
        if ann[x] == "K" and x not in A.K:
            return Check(False, ("in-K", x))
        if ann[x] == "N" and x in A.K:
            return Check(False, ("not-in-K", x))
    for x, y in combinations(sorted(ann), 2):
        if H.has_edge(x, y) != (frozenset((x, y)) in edges):
            return Check(False, ("induced", x, y))
    for e, m in sorted(marks.items(), key=lambda kv: sorted(kv[0])):
        x, y = sorted(e)
        if m == "T" and not G.has_edge(x, y):
            return Check(False, ("in-G", x, y))
        if m == "t" and G.has_edge(x, y):
            return Check(False, ("not-in-G", x, y))
    return Check(True)


# ----------------------------------------------------------------- finder

def _order(cfg: Configuration, first) -> list:
    skip = frozenset(cfg.growth[:2]) if cfg.growth else None
    nbrs = {v: set() for v in cfg.vertices}
    for a, b in cfg.edges:
        if frozenset((a, b)) != skip:
            nbrs[a].add(b)
            nbrs[b].add(a)
    order = list(first)
    while len(order) < len(cfg.vertices):
        nxt = max((v for v in sorted(cfg.vertices) if v not in order),
                  key=lambda v: (len(nbrs[v] & set(order)), -sorted(cfg.vertices).index(v)))
        order.append(nxt)
    return order


def _embed(A: AuxGraph, cfg: Configuration, allowed, first=None, anchor=None):
    """Yield mappings of the fixed pattern, the growth edge left free."""
    H, G = A.derived, A.base
    skip = frozenset(cfg.growth[:2]) if cfg.growth else None
    thick = cfg.thick()
    starts = [first] if first else thick[:1] or [tuple(sorted(cfg.vertices))[:1]]
    for start in starts:
        order = _order(cfg, start)
        mapping = {}

        def ok(p, x):
            a = cfg.vertices[p]
            if a == "K" and x not in A.K or a == "N" and x in A.K:
                return False
            for q, y in mapping.items():
                if y == x:
                    return False
                if frozenset((p, q)) != skip and H.has_edge(x, y) != cfg.adjacent(p, q):
                    return False
                m = cfg.mark(p, q)
                if m == "T" and not G.has_edge(x, y) or m == "t" and G.has_edge(x, y):
                    return False
            return True

        def rec(i):
            if i == len(order):
                yield dict(mapping)
                return
            p = order[i]
            if anchor is not None and i < 2:
                cands = [anchor[i]]
            else:
                cands = sorted(allowed)
            for x in cands:
                if x in allowed and ok(p, x):
                    mapping[p] = x
                    yield from rec(i + 1)
                    del mapping[p]

        yield from rec(0)


def _grow(A: AuxGraph, cfg: Configuration, mapping, allowed):
    a, b, attach = cfg.growth
    H = A.derived
    x, y = mapping[a], mapping[b]
    if H.has_edge(x, y):
        return (x, y)
    used = set(mapping.values())
    others = [mapping[p] for p in cfg.vertices if p not in attach and p not in (a, b)]
    W = {z for z in allowed - used
         if all(H.has_edge(z, mapping[t]) for t in attach)
         and not any(H.has_edge(z, o) for o in others)}
    p = shortest_path(H, x, y, W | {x, y})
    return tuple(p) if p is not None else None


def find_config(A: AuxGraph, restrict=None, anchor=None, ids=None) -> Optional[ConfigWitness]:
    """First annotated copy of any configuration, scanning ids in catalog
    order.  `restrict` limits host vertices; `anchor` = (v, u) forces a
    thick pattern edge onto that host pair."""
    allowed = frozenset(A.base.vertices()) if restrict is None else frozenset(restrict)
    if len(allowed) > guard(FINDER_LIMIT) and restrict is None:
        raise GuardExceeded(f"configuration finder limited to n <= {guard(FINDER_LIMIT)}", len(allowed))
    for cid in ids or CATALOG:
        cfg = CATALOG[cid]
        firsts = cfg.thick() if anchor is not None else [None]
        for first in firsts:
            for mapping in _embed(A, cfg, allowed, first, anchor):
                path = ()
                if cfg.growth:
                    path = _grow(A, cfg, mapping, allowed)
                    if path is None:
                        continue
                w = ConfigWitness(cid, mapping, path)
                if verify_witness(A, w):
                    return w
    return None


# ------------------------------------------------------------ self hosts

def canonical_host(key) -> tuple:
    """A small graph G and clique K such that G^K contains the configuration
    literally, returned as (G, K, witness).  Uncertain vertices stay outside
    K and pattern non-edges between K and the rest become G-edges.  Each
    pattern edge from K to the rest that is not forced out of G is tried
    both ways; every G-edge that must survive in G^K gets a private pendant."""
    cfg = get_config(key)
    names = sorted(cfg.vertices)
    ks = [p for p in names if cfg.vertices[p] == "K"]
    rest = [p for p in names if p not in ks]
    free = [frozenset((v, x)) for v in ks for x in rest
            if cfg.adjacent(v, x) and cfg.marks.get(frozenset((v, x)), "?") == "?"]
    for choice in product((False, True), repeat=len(free)):
        pick = dict(zip(free, choice))
        gedges = set(frozenset(e) for e in combinations(ks, 2))
        for a, b in cfg.edges:
            if a not in ks and b not in ks:
                gedges.add(frozenset((a, b)))
        need = set()
        for v in ks:
            for x in rest:
                e = frozenset((v, x))
                if not cfg.adjacent(v, x):
                    gedges.add(e)
                elif cfg.marks.get(e) == "T" or pick.get(e):
                    gedges.add(e)
                    need.add(x)
        labels = names + [f"w_{x}" for x in sorted(need)]
        gedges |= {frozenset((x, f"w_{x}")) for x in need}
        G = Graph.from_labeled_edges(labels, [tuple(e) for e in gedges])
        try:
            A = build_aux_graph(G, G.indices(ks))
        except PreconditionError:
            continue
        mapping = {p: G.index(p) for p in names}
        path = (mapping[cfg.growth[0]], mapping[cfg.growth[1]]) if cfg.growth else ()
        w = ConfigWitness(cfg.id, mapping, path)
        if verify_witness(A, w):
            return G, A.K, w
    raise ValueError(f"no literal host for configuration {cfg.id}")
