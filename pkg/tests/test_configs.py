import pytest

from arcflip import fixtures
from arcflip.aux import build_aux_graph
from arcflip.configs import (BY_NAME, CATALOG, ConfigWitness, canonical_host, find_config, get_config,
                             verify_witness, witness_from_json)
from arcflip.errors import GuardExceeded
from arcflip.graph import Graph
from arcflip.oracle import oracle_star
from arcflip.pqtree import build_pqtree, clique_paths

NAMES = ["claw", "double-claw", "triple-claw", "p5+1", "fork", "double-fork", "double-fork+1", "p5x1",
         "(p4+p1)*1", "ab-wheel", "whipping-top-1", "bent-whipping-top", "dag+2e", "dag+e", "ddag+e",
         "ddag+2e", "add-1", "add-2"]


@pytest.fixture
def claw_host():
    G = fixtures.long_claw()
    K = G.indices(["c"])
    return G, build_aux_graph(G, K)


def test_catalog_shape():
    assert list(CATALOG) == list("abcdefghijklmnopqr")
    assert [c.name for c in CATALOG.values()] == NAMES
    assert set(BY_NAME) == set(NAMES)
    assert get_config("ab-wheel") is get_config("j")
    for cfg in CATALOG.values():
        for e in cfg.marks:
            a, b = sorted(e)
            assert {cfg.vertices[a], cfg.vertices[b]} == {"K", "N"}
        assert cfg.thick()
    assert get_config("m").min_size == 5
    assert all(get_config(k).min_size == 6 for k in "nop")


def test_claw_on_long_claw(claw_host):
    G, A = claw_host
    w = ConfigWitness("a", {"v": G.index("c"), "u1": G.index("v1"), "u2": G.index("v2"), "u3": G.index("v3")})
    assert verify_witness(A, w)
    found = find_config(A)
    assert found is not None and found.config_id == "a" and verify_witness(A, found)


def test_claw_violations(claw_host):
    G, A = claw_host
    idx = G.index
    # the "in K" pattern vertex lands on v1, which is outside K
    bad = ConfigWitness("a", {"v": idx("v1"), "u1": idx("u1"), "u2": idx("c"), "u3": idx("v2")})
    r = verify_witness(A, bad)
    assert not r and r.violation[0] in ("in-K", "not-in-K")
    bad = ConfigWitness("a", {"v": idx("v1"), "u1": idx("u1"), "u2": idx("u2"), "u3": idx("u3")})
    assert verify_witness(A, bad).violation == ("in-K", idx("v1"))
    bad = ConfigWitness("a", {"v": idx("c"), "u1": idx("c"), "u2": idx("v2"), "u3": idx("v3")})
    assert verify_witness(A, bad).violation[0] == "malformed"
    # u1, u2 mapped onto adjacent host vertices: the pattern is not induced
    bad = ConfigWitness("a", {"v": idx("c"), "u1": idx("v1"), "u2": idx("u1"), "u3": idx("v3")})
    assert verify_witness(A, bad).violation[0] == "induced"


def test_not_in_k_rejected():
    G = fixtures.long_claw()
    A = build_aux_graph(G, G.indices(["c", "v1"]))
    idx = G.index
    w = ConfigWitness("a", {"v": idx("c"), "u1": idx("v1"), "u2": idx("v2"), "u3": idx("v3")})
    assert verify_witness(A, w).violation == ("not-in-K", idx("v1"))


def test_no_config_on_gd_and_gm():
    for name, K in (("gd", fixtures.GD_K), ("gm", fixtures.GM_K)):
        G = fixtures.load_fixture(name)
        assert find_config(build_aux_graph(G, G.indices(K))) is None


def test_json_round_trip(claw_host):
    G, A = claw_host
    w = find_config(A)
    data = w.to_json(G)
    assert data["config"] == "claw" and data["path"] == []
    assert witness_from_json(G, data) == w


@pytest.mark.parametrize("key", list(CATALOG))
def test_canonical_hosts(key):
    G, K, w = canonical_host(key)
    A = build_aux_graph(G, K)
    assert verify_witness(A, w)
    assert not oracle_star(A)
    found = find_config(A)
    assert found is not None and verify_witness(A, found)
    # in every clique path some thick pair of the copy is strictly nested
    cfg = CATALOG[key]
    thick = [(w.mapping[v], w.mapping[u]) for v, u in cfg.thick()]
    T = build_pqtree(A.derived)
    if T is None:
        # the pattern itself is not interval (the whipping-top family)
        assert key in "klo"
        return
    for p in clique_paths(T):
        assert any(p.lk(v) < p.lk(u) <= p.rk(u) < p.rk(v) for v, u in thick)


def test_growth_path_checks():
    G, K, w = canonical_host("m")
    A = build_aux_graph(G, K)
    assert len(w.path) >= 2
    broken = ConfigWitness(w.config_id, w.mapping, tuple(reversed(w.path)))
    assert verify_witness(A, broken).violation[0] == "malformed"


def test_guard():
    G = fixtures.hole(13)
    with pytest.raises(GuardExceeded):
        find_config(build_aux_graph(G, {0}))
