"""Named graphs and models used throughout the tests and the CLI.

Edge-list files for the named graphs live next to this module in
``data/``; the small families below are generated on demand.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .graph import Graph, load_graph

FILES = {
    "gm": "flip example: 8 vertices, clique {s, v1, v2, v3}",
    "gd": "domino-like graph where star holds but sharp fails",
    "h16": "16-vertex interval graph given as a six-clique path",
    "sun3": "the 3-sun",
    "sun3bar": "complement of the 3-sun (the net)",
    "longclaw": "long claw",
    "whippingtop": "whipping top",
    "octahedron": "complement of 3K2",
}


def fixture_text(name) -> str:
    return resources.files("arcflip").joinpath("data").joinpath(f"{name}.el").read_text()


def load_fixture(name) -> Graph:
    if name not in FILES:
        raise KeyError(f"unknown fixture {name!r}")
    return load_graph(fixture_text(name))


# --------------------------------------------------------------- families

def hole(n) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def long_claw() -> Graph:
    # c, v1..v3, u1..u3
    return Graph.from_labeled_edges(
        ["c", "v1", "v2", "v3", "u1", "u2", "u3"],
        [("c", "v1"), ("c", "v2"), ("c", "v3"), ("v1", "u1"), ("v2", "u2"), ("v3", "u3")])


def whipping_top() -> Graph:
    labels = ["c", "x1", "v1", "v2", "v3", "x3", "t"]
    edges = [("x1", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "x3"), ("v2", "t")]
    edges += [("c", x) for x in ["x1", "v1", "v2", "v3", "x3"]]
    return Graph.from_labeled_edges(labels, edges)


def dagger(n) -> Graph:
    """The dagger family member on n >= 6 vertices: an induced path
    p1..pk (k = n-2), a vertex c adjacent to p2..p(k-1), and a pendant t on c."""
    if n < 6:
        raise ValueError("dagger graphs have at least six vertices")
    k = n - 2
    labels = [f"p{i}" for i in range(1, k + 1)] + ["c", "t"]
    edges = [(f"p{i}", f"p{i + 1}") for i in range(1, k)]
    edges += [("c", f"p{i}") for i in range(2, k)] + [("c", "t")]
    return Graph.from_labeled_edges(labels, edges)


def double_dagger(n) -> Graph:
    """The double-dagger family member on n >= 6 vertices: an induced path
    p1..pk (k = n-3), c1 adjacent to p1..p(k-1), c2 adjacent to p2..pk,
    c1c2 an edge, and x adjacent to both c1 and c2."""
    if n < 6:
        raise ValueError("double-dagger graphs have at least six vertices")
    k = n - 3
    labels = [f"p{i}" for i in range(1, k + 1)] + ["c1", "c2", "x"]
    edges = [(f"p{i}", f"p{i + 1}") for i in range(1, k)]
    edges += [("c1", f"p{i}") for i in range(1, k)]
    edges += [("c2", f"p{i}") for i in range(2, k + 1)]
    edges += [("c1", "c2"), ("x", "c1"), ("x", "c2")]
    return Graph.from_labeled_edges(labels, edges)


def sun(k) -> Graph:
    """The k-sun on vertices 1..2k: a 2k-cycle plus a clique on the even vertices."""
    n = 2 * k
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    evens = [i for i in range(n) if (i + 1) % 2 == 0]
    edges |= {(a, b) for a in evens for b in evens if a < b}
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------- models

# Interval model of G_M^K for K = {s, v1, v2, v3}.
GM_INTERVALS = {
    "u1": (3, 6), "u2": (5, 9), "u3": (8, 14), "u4": (11, 12),
    "s": (0, 15), "v1": (4, 13), "v2": (2, 7), "v3": (1, 10),
}
GM_K = ("s", "v1", "v2", "v3")

# Clique path model of the flipped domino-like graph (K = {v1, v2}).
GD_INTERVALS = {"v1": (1, 2), "v2": (1, 2), "u1": (1, 1), "u2": (1, 1),
                "u3": (2, 2), "u4": (2, 2)}
GD_K = ("v1", "v2")

# The six-clique path of H_16, as (first clique, last clique) per vertex.
H16_INTERVALS = {
    "1": (1, 6), "2": (1, 6), "3": (1, 2), "4": (1, 1), "5": (1, 1), "6": (2, 2),
    "7": (3, 6), "8": (3, 5), "9": (3, 4), "10": (3, 3), "11": (5, 5), "12": (4, 5),
    "13": (4, 5), "14": (6, 6), "15": (6, 6), "16": (6, 6),
}

# Two arc models of the 3-sun on a circle of 360 degrees.  Each arc is
# (start, end) read counterclockwise; start > end means the arc crosses 0.
SUN3_ARCS_NORMALIZED = {
    "1": (40, 80), "2": (240, 120), "3": (280, 320),
    "4": (100, 10), "5": (160, 200), "6": (350, 260),
}
SUN3_ARCS_NON_HELLY = {
    "6": (60, 240), "3": (320, 340), "2": (300, 120),
    "5": (200, 220), "4": (180, 0), "1": (80, 100),
}


def labeled_intervals(G: Graph, table):
    from .interval import IntervalModel
    return IntervalModel.from_pairs({G.index(k): v for k, v in table.items()})


def labeled_arcs(G: Graph, table, circumference=360):
    from .models import ArcModel
    return ArcModel(Fraction(circumference),
                    {G.index(k): (Fraction(a), Fraction(b)) for k, (a, b) in table.items()})
