import pytest

from arcflip import fixtures
from arcflip.aux import build_aux_graph
from arcflip.errors import PreconditionError
from arcflip.graph import all_cliques, c4_through_edge, universal_vertices
from arcflip.pqtree import build_pqtree, clique_paths

from sweeps import atlas


def test_gd_aux():
    G = fixtures.load_fixture("gd")
    A = build_aux_graph(G, G.indices(fixtures.GD_K))
    D = A.derived
    want = {("u1", "u2"), ("u3", "u4"), ("v1", "v2")}
    want |= {(v, u) for v in ("v1", "v2") for u in ("u1", "u2", "u3", "u4")}
    assert {tuple(sorted(G.names(e))) for e in D.edges()} == {tuple(sorted(e)) for e in want}
    assert {(G.name(v), G.name(u)) for v, u in A.pairs} == {
        ("v1", "u1"), ("v1", "u3"), ("v2", "u2"), ("v2", "u4")}


def test_gm_v2_u3_nonedge():
    G = fixtures.load_fixture("gm")
    A = build_aux_graph(G, G.indices(fixtures.GM_K))
    assert not A.derived.has_edge(G.index("v2"), G.index("u3"))
    assert A.derived.has_edge(G.index("v2"), G.index("u2"))


def test_p4_pairs():
    # a-b-c-d with K = {b}: a drops out of N[b] in G^K, but c keeps
    # N[c] = {b, c, d} = N[b], so (b, c) is a dominance pair.
    G = fixtures.path(4)
    A = build_aux_graph(G, {1})
    assert not A.derived.has_edge(0, 1)
    assert A.derived.closed(2) == A.derived.closed(1) == {1, 2, 3}
    assert A.pairs == {(1, 2)}


def test_preconditions():
    G = fixtures.path(4)
    with pytest.raises(PreconditionError) as exc:
        build_aux_graph(G, {0, 2})
    assert exc.value.kind == "not-a-clique"
    with pytest.raises(PreconditionError) as exc:
        build_aux_graph(fixtures.complete(3), {0})
    assert exc.value.kind == "universal-vertex"


def test_properties_on_sweep():
    """Edge rules, non-neighbour containment, pair definition and clique nesting."""
    checked = 0
    for G in atlas(3, 6):
        if universal_vertices(G):
            continue
        V = frozenset(G.vertices())
        for K in [frozenset()] + list(all_cliques(G)):
            A = build_aux_graph(G, K)
            D = A.derived
            for a in G.vertices():
                for b in range(a + 1, G.n):
                    if a not in K and b not in K:
                        want = G.has_edge(a, b)
                    elif a in K and b in K:
                        want = (G.closed(a) | G.closed(b)) != V or c4_through_edge(G, a, b) is not None
                    else:
                        v, u = (a, b) if a in K else (b, a)
                        want = not G.has_edge(u, v) or not G.closed(u) <= G.closed(v)
                    assert D.has_edge(a, b) == want
            for v in K:
                for u in V - K:
                    if not G.has_edge(u, v):
                        assert D.closed(u) <= D.closed(v)
                    pair = G.has_edge(u, v) and D.closed(u) <= D.closed(v)
                    assert ((v, u) in A.pairs) == pair
            T = build_pqtree(D)
            if T is not None and T.path_count() <= 120:
                for p in clique_paths(T):
                    for v, u in A.pairs:
                        assert p.lk(v) <= p.lk(u) and p.rk(u) <= p.rk(v)
            checked += 1
    assert checked > 1000
