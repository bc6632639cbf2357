"""Acceptance criteria.  Each test records one PASS/FAIL line that is
printed in the terminal summary."""

import time

from arcflip import fixtures
from arcflip.aux import build_aux_graph
from arcflip.configs import ConfigWitness, find_config, verify_witness
from arcflip.graph import find_c4, find_hole, is_chordal, simplicial_vertices, universal_vertices
from arcflip.interval import brute_force_is_interval, realizes
from arcflip.models import flip_to_arcs, verify_arc_model, verify_sharp
from arcflip.oracle import oracle_circular_arc, oracle_sharp, oracle_star, satisfies_star
from arcflip.pqtree import NonIntervalWitness, build_pqtree, clique_paths, node_sets, recognize_interval
from arcflip.recognizer import (CIRCULAR_ARC, HELLY, NOT_CIRCULAR_ARC, NOT_HELLY, OUT_OF_SCOPE,
                                evaluate, recognize, verify_failure)
from arcflip.star import check_star, star_to_sharp

from sweeps import (atlas, c4free_corpus, chordal_corpus, clique_instances, cut_flip_violation,
                    node_set_violations, vset_violations, round_trip_violation)

# Arc models collected by criteria 1-9 for the model checks of criterion 10.
PRODUCED = []


def _names(G, vs):
    return set(G.names(vs))


def test_criterion_01_flip_example(criterion):
    start, detail = criterion
    start(1, "G_M example: G^K, dominance pairs, sharp model and flip")
    t = time.perf_counter()
    G = fixtures.load_fixture("gm")
    K = G.indices(fixtures.GM_K)
    A = build_aux_graph(G, K)
    D = A.derived
    idx = G.index
    expected = {"s": {"u1", "u2", "u3", "u4", "v1", "v2", "v3"},
                "v1": {"u1", "u2", "u3", "u4", "s", "v2", "v3"},
                "v2": {"u1", "u2", "s", "v1", "v3"},
                "v3": {"u1", "u2", "u3", "s", "v1", "v2"}}
    for v, nbrs in expected.items():
        assert _names(G, D.adj[idx(v)]) == nbrs, v
    for a in ("u1", "u2", "u3", "u4"):
        for b in ("u1", "u2", "u3", "u4"):
            if a != b:
                assert D.has_edge(idx(a), idx(b)) == G.has_edge(idx(a), idx(b))
    assert {(G.name(v), G.name(u)) for v, u in A.pairs} == {("v1", "u1"), ("v1", "u3")}
    m = fixtures.labeled_intervals(G, fixtures.GM_INTERVALS)
    assert verify_sharp(G, K, m)
    arcs = flip_to_arcs(m.shifted(1), K)
    assert verify_arc_model(G, arcs)
    PRODUCED.append((G, arcs))
    elapsed = time.perf_counter() - t
    assert elapsed < 1
    detail(f"{elapsed:.3f}s")


def _canon(tree):
    if isinstance(tree, str):
        return tree
    kind, *kids = tree
    parts = [_canon(k) for k in kids]
    parts = sorted(parts) if kind == "P" else min(parts, parts[::-1])
    return f"({kind} " + " ".join(parts) + ")"


def test_criterion_02_h16_pqtree(criterion):
    start, detail = criterion
    start(2, "H_16 PQ-tree, node sets of the Q-node and 16 clique paths")
    t = time.perf_counter()
    H = fixtures.load_fixture("h16")
    T = recognize_interval(H)
    expected_cliques = [frozenset(H.index(v) for v, (a, b) in fixtures.H16_INTERVALS.items()
                                  if a <= i <= b) for i in range(1, 7)]
    assert sorted(map(sorted, T.cliques)) == sorted(map(sorted, expected_cliques))
    label = {T.cliques.index(c): f"K{i + 1}" for i, c in enumerate(expected_cliques)}
    want = _canon(("P", ("P", "K1", "K2"), ("P", ("Q", "K3", "K4", "K5"), "K6")))
    assert T.canonical(lambda i: label[i]) == want
    (Q,) = [x for x in T.internal_nodes() if x.kind == "Q"]
    s = node_sets(T, Q)
    as_ints = lambda vs: {int(x) for x in H.names(vs)}
    assert as_ints(s.inner) == set(range(8, 14))
    assert as_ints(s.encomp) == {1, 2, 7}
    assert as_ints(s.univ) == {1, 2, 7, 8}
    paths = clique_paths(T)
    assert len(paths) == 16 == T.path_count()
    assert all(p.is_consecutive() for p in paths)
    elapsed = time.perf_counter() - t
    assert elapsed < 1
    detail(f"{elapsed:.3f}s")


def test_criterion_03_domino_separation(criterion):
    start, detail = criterion
    start(3, "G_D separates the pair condition from the sharp condition")
    t = time.perf_counter()
    G = fixtures.load_fixture("gd")
    K = G.indices(fixtures.GD_K)
    A = build_aux_graph(G, K)
    assert oracle_star(A)
    p = check_star(A)
    assert not isinstance(p, ConfigWitness)
    assert p.is_consecutive() and satisfies_star(A, p) is None
    assert set(p.cliques) == set(build_pqtree(A.derived).cliques)
    assert not oracle_sharp(G, K)
    ok, _ = oracle_circular_arc(G)
    assert not ok
    elapsed = time.perf_counter() - t
    assert elapsed < 10
    detail(f"{elapsed:.3f}s")


def _check_certificate(G, cert):
    if cert.model is not None:
        assert verify_arc_model(G, cert.model)
        PRODUCED.append((G, cert.model))
    for K, w in cert.failures.items():
        assert verify_failure(G, K, w), (G.edges(), K, w)


SWEEP4 = {}


def test_criterion_04_c4free_equivalence(criterion):
    start, detail = criterion
    start(4, "c4free verdict equals the brute-force oracle")
    t = time.perf_counter()
    graphs = c4free_corpus()
    agree = 0
    for G in graphs:
        cert = recognize(G, "c4free")
        ok, _ = oracle_circular_arc(G)
        assert cert.verdict in (CIRCULAR_ARC, NOT_CIRCULAR_ARC)
        assert (cert.verdict == CIRCULAR_ARC) == ok, G.edges()
        _check_certificate(G, cert)
        SWEEP4[tuple(G.edges())] = cert.verdict
        agree += 1
    detail(f"{agree}/{len(graphs)} graphs agree, {time.perf_counter() - t:.1f}s")


def test_criterion_05_chordal_consistency(criterion):
    start, detail = criterion
    start(5, "chordal pivots agree and match the c4free and oracle verdicts")
    graphs = chordal_corpus()
    for G in graphs:
        U = universal_vertices(G)
        H, _ = G.induced(sorted(set(G.vertices()) - U))
        pivots = {H.closed(s) for s in simplicial_vertices(H)}
        results = {evaluate(H, K).model is not None for K in pivots}
        assert len(results) <= 1, G.edges()
        cert = recognize(G, "chordal")
        _check_certificate(G, cert)
        ok, _ = oracle_circular_arc(G)
        assert (cert.verdict == CIRCULAR_ARC) == ok
        if results:
            assert results == {ok}
        key = tuple(G.edges())
        if key in SWEEP4:
            assert SWEEP4[key] == cert.verdict
    detail(f"{len(graphs)} chordal graphs")


def test_criterion_06_configurations(criterion):
    start, detail = criterion
    start(6, "configuration finder agrees with the pair-condition oracle")
    count = found = 0
    for G, K, A, T in clique_instances(atlas(4, 6)):
        count += 1
        w = find_config(A)
        assert (w is not None) == (not oracle_star(A)), (G.edges(), K)
        if w is not None:
            found += 1
            assert verify_witness(A, w)
        r = check_star(A, T)
        if isinstance(r, ConfigWitness):
            assert verify_witness(A, r)
        else:
            assert satisfies_star(A, r) is None
    detail(f"{count} instances, {found} with a configuration")


def test_criterion_07_interval_layer(criterion):
    start, detail = criterion
    start(7, "interval recognition against brute force with classified witnesses")
    graphs = atlas(1, 7, connected=False)
    non = 0
    for G in graphs:
        r = recognize_interval(G)
        assert isinstance(r, NonIntervalWitness) != brute_force_is_interval(G)
        if isinstance(r, NonIntervalWitness):
            non += 1
            sub, _ = G.induced(r.vertices)
            assert not brute_force_is_interval(sub)
            for v in r.vertices:
                assert brute_force_is_interval(G.induced(r.vertices - {v})[0])
            assert r.kind != "unclassified-minimal"
    detail(f"{len(graphs)} graphs, {non} non-interval, 0 unclassified")


def test_criterion_08_pq_invariants(criterion):
    start, detail = criterion
    start(8, "node-set and V-set invariants on every PQ-tree of the sweeps")
    trees = [T for *_, T in clique_instances(atlas(4, 6))]
    trees += [T for G in atlas(1, 7, connected=False) if (T := build_pqtree(G)) is not None]
    bad = [v for T in trees for v in node_set_violations(T) + vset_violations(T)]
    assert not bad
    detail(f"{len(trees)} trees, 0 violations")


def test_criterion_09_helly_fixtures(criterion):
    start, detail = criterion
    start(9, "Helly fixtures")
    sun = fixtures.load_fixture("sun3")
    cert = recognize(sun, "helly")
    assert cert.verdict == HELLY
    _check_certificate(sun, cert)

    net = fixtures.load_fixture("sun3bar")
    cert = recognize(net, "helly")
    assert cert.verdict == NOT_HELLY
    _check_certificate(net, cert)
    rim = frozenset(v for v in net.vertices() if net.degree(v) == 3)
    assert net.is_clique(rim) and len(rim) == 3
    w = cert.failures[rim]
    assert isinstance(w, NonIntervalWitness)
    # G^K for the rim is the 3-sun: chordal, so no hole can be reported.
    D = build_aux_graph(net, rim).derived
    assert is_chordal(D) and find_hole(D) is None
    assert w.kind == "double-dagger" and len(w.vertices) == 6
    cert = recognize(net, "c4free")
    assert cert.verdict == CIRCULAR_ARC
    _check_certificate(net, cert)

    octa = fixtures.load_fixture("octahedron")
    cert = recognize(octa, "helly")
    assert cert.verdict == OUT_OF_SCOPE and cert.c4 is not None
    assert any("C4" in n for n in cert.notes)
    detail("deviation: the net witness is a double-dagger, not a hole; its G^K is the "
           "chordal 3-sun, which has no hole")


def test_criterion_10_flip_properties(criterion):
    start, detail = criterion
    start(10, "flip round trips and the cut-and-flip property on produced models")
    G = fixtures.load_fixture("gm")
    K = G.indices(fixtures.GM_K)
    models = [(G, K, fixtures.labeled_intervals(G, fixtures.GM_INTERVALS).shifted(1))]
    for G, K, A, T in clique_instances(atlas(4, 6)):
        r = check_star(A, T)
        if isinstance(r, ConfigWitness) or find_c4(G) is not None:
            continue
        m = star_to_sharp(A, r)
        assert realizes(A.derived, m) is None
        assert verify_sharp(G, K, m)
        models.append((G, K, m))
    for G, K, m in models:
        assert round_trip_violation(G, K, m) is None, (G.edges(), K)
    sun = fixtures.load_fixture("sun3")
    arcs = list(PRODUCED) + [(sun, fixtures.labeled_arcs(sun, fixtures.SUN3_ARCS_NORMALIZED))]
    arcs += [(G, flip_to_arcs(m, K)) for G, K, m in models]
    for G, a in arcs:
        assert cut_flip_violation(G, a) is None
    detail(f"{len(models)} interval models, {len(arcs)} arc models")
