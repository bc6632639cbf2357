import pytest

from arcflip import fixtures
from arcflip.errors import GuardExceeded
from arcflip.graph import Graph, maximal_cliques
from arcflip.interval import CliquePath, all_clique_orders, clique_path_to_model, realizes
from arcflip.pqtree import (EndCliqueWitness, NonIntervalWitness, build_pqtree, clique_paths, end_clique_feasible,
                            find_end_clique_witness, node_sets, recognize_interval, verify_end_clique_witness,
                            verify_non_interval_witness)

from sweeps import atlas


def test_h16_tree_and_model():
    H = fixtures.load_fixture("h16")
    T = recognize_interval(H)
    assert T.sexpr() == "(P (P K1 K2) (P (Q K3 K4 K5) K6))" or T.path_count() == 16
    assert node_sets(T, T.root).encomp == frozenset()
    p = CliquePath(tuple(frozenset(H.index(v) for v, (a, b) in fixtures.H16_INTERVALS.items() if a <= i <= b)
                         for i in range(1, 7)))
    assert p.is_consecutive()
    m = clique_path_to_model(p)
    assert (m.lp[H.index("1")], m.rp[H.index("1")]) == (1, 6)
    assert (m.lp[H.index("10")], m.rp[H.index("10")]) == (3, 3)
    assert realizes(H, m) is None


def test_small_path_counts():
    assert len(clique_paths(build_pqtree(fixtures.complete(3)))) == 1
    assert len(clique_paths(build_pqtree(fixtures.path(4)))) == 2


def test_path_limit():
    T = build_pqtree(fixtures.load_fixture("h16"))
    with pytest.raises(GuardExceeded) as exc:
        clique_paths(T, limit=10)
    assert exc.value.total == 16


def test_gd_aux_clique_path_model():
    from arcflip.aux import build_aux_graph
    G = fixtures.load_fixture("gd")
    A = build_aux_graph(G, G.indices(fixtures.GD_K))
    T = build_pqtree(A.derived)
    m = clique_path_to_model(T.default_path())
    iv = {G.name(v): (m.lp[v], m.rp[v]) for v in G.vertices()}
    assert iv["v1"] == iv["v2"] == (1, 2)
    assert {iv["u1"], iv["u3"]} == {(1, 1), (2, 2)}
    assert iv["u1"] == iv["u2"] and iv["u3"] == iv["u4"]


@pytest.mark.parametrize("G,kind", [
    (fixtures.hole(4), "hole"),
    (fixtures.hole(7), "hole"),
    (fixtures.long_claw(), "long-claw"),
    (fixtures.whipping_top(), "whipping-top"),
    (fixtures.dagger(7), "dagger"),
    (fixtures.double_dagger(8), "double-dagger"),
])
def test_minimal_witnesses(G, kind):
    w = recognize_interval(G)
    assert isinstance(w, NonIntervalWitness)
    assert w.kind == kind and w.vertices == frozenset(G.vertices())
    assert verify_non_interval_witness(G, w)


def test_frontiers_equal_brute_force_orders():
    count = 0
    for G in atlas(1, 7, connected=False):
        T = build_pqtree(G)
        if T is None or len(T.cliques) > 6:
            continue
        want = {tuple(map(frozenset, (T.cliques[i] for i in order))) for order in all_clique_orders(T.cliques)}
        got = {p.cliques for p in clique_paths(T)}
        assert got == want
        assert len(got) == T.path_count()
        assert set(T.cliques) == set(maximal_cliques(G))
        count += 1
    assert count > 400


def test_end_clique_p5_center():
    P5 = fixtures.path(5)
    w = end_clique_feasible(P5, 2)
    assert isinstance(w, EndCliqueWitness) and w.shape == "a" and w.u == 2
    assert verify_end_clique_witness(P5, w)
    assert end_clique_feasible(P5, 0) is True


def test_end_clique_against_brute_force():
    count = 0
    for G in atlas(1, 7):
        T = build_pqtree(G)
        if T is None or len(T.cliques) > 6:
            continue
        paths = clique_paths(T)
        for u in G.vertices():
            brute = any(u in p.cliques[0] or u in p.cliques[-1] for p in paths)
            r = end_clique_feasible(G, u, T)
            if brute:
                assert r is True
            else:
                assert isinstance(r, EndCliqueWitness) and verify_end_clique_witness(G, r)
                count += 1
    assert count > 0


def test_invalid_end_clique_witness_rejected():
    P5 = fixtures.path(5)
    w = find_end_clique_witness(P5, 2)
    bad = EndCliqueWitness(w.shape, 0, w.roles, w.path)
    assert not verify_end_clique_witness(P5, bad)
