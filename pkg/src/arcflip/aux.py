"""The auxiliary graph G^K of a graph at a clique K, and its dominance pairs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .graph import Graph, c4_through_edge, universal_vertices


@dataclass(frozen=True)
class AuxGraph:
    """The flipped graph together with its source.

    `pairs` holds every (v, u) with v in K, u outside K, uv an edge of G and
    N[u] contained in N[v] in the derived graph.
    """
    base: Graph
    K: frozenset
    derived: Graph
    pairs: frozenset

    @property
    def n(self):
        return self.base.n

    def in_g(self, a, b) -> bool:
        return self.base.has_edge(a, b)

    def in_k(self, v) -> bool:
        return v in self.K


def _aux_edges(G: Graph, K: frozenset):
    V = frozenset(G.vertices())
    edges = []
    for a, b in combinations(range(G.n), 2):
        ka, kb = a in K, b in K
        if not ka and not kb:
            adj = G.has_edge(a, b)
        elif ka and kb:
            adj = (G.closed(a) | G.closed(b)) != V or c4_through_edge(G, a, b) is not None
        else:
            v, u = (a, b) if ka else (b, a)
            adj = not G.closed(u) <= G.closed(v)
        if adj:
            edges.append((a, b))
    return edges


def build_aux_graph(G: Graph, K) -> AuxGraph:
    K = frozenset(K)
    if not G.is_clique(K):
        raise PreconditionError("not-a-clique", "K is not a clique of G", sorted(K))
    uni = universal_vertices(G)
    if uni:
        raise PreconditionError("universal-vertex", "G has a universal vertex", sorted(uni))
    H = Graph.from_edges(G.labels, _aux_edges(G, K))
    partial = AuxGraph(G, K, H, frozenset())
    return AuxGraph(G, K, H, dominance_pairs(partial))


def dominance_pairs(A: AuxGraph) -> frozenset:
    G, H = A.base, A.derived
    out = set()
    for v in A.K:
        for u in G.adj[v] - A.K:
            if H.closed(u) <= H.closed(v):
                out.add((v, u))
    return frozenset(out)
