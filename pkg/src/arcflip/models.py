"""Circular-arc models, the flips between arcs and intervals, and verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .aux import build_aux_graph
from .errors import PreconditionError
from .graph import Graph, c4_through_edge
from .interval import IntervalModel, realizes


@dataclass(frozen=True)
class Check:
    """Outcome of a verifier: `violation` names the first offending pair."""
    ok: bool
    violation: Optional[tuple] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class ArcModel:
    """Closed arcs on a circle of the given circumference.

    Each arc is (start, end) read counterclockwise; start > end means the
    arc passes through 0.
    """
    circumference: Fraction
    arcs: dict

    def __post_init__(self):
        c = self.circumference
        if c <= 0:
            raise ValueError("circumference must be positive")
        for v, (s, e) in self.arcs.items():
            if not (0 <= s < c and 0 <= e < c):
                raise ValueError(f"arc of {v} has an endpoint outside [0, {c})")
            if s == e:
                raise ValueError(f"arc of {v} has zero length")

    def length(self, v) -> Fraction:
        s, e = self.arcs[v]
        return (e - s) % self.circumference

    def contains(self, v, p) -> bool:
        s, e = self.arcs[v]
        return s <= p <= e if s <= e else (p >= s or p <= e)

    def intersect(self, a, b) -> bool:
        return self.contains(a, self.arcs[b][0]) or self.contains(b, self.arcs[a][0])

    def _offset(self, base, x) -> Fraction:
        return (x - base) % self.circumference

    def subset(self, a, b) -> bool:
        """A(a) is contained in A(b)."""
        sa, ea = self.arcs[a]
        sb, _ = self.arcs[b]
        oa, oe = self._offset(sb, sa), self._offset(sb, ea)
        return oa <= oe <= self.length(b)

    def covers(self, a, b) -> bool:
        """A(a) and A(b) together cover the circle, i.e. A(b) holds the
        closed gap running counterclockwise from the end of A(a) to its start."""
        sa, ea = self.arcs[a]
        sb, _ = self.arcs[b]
        return self._offset(sb, ea) <= self._offset(sb, sa) <= self.length(b)

    def endpoints(self) -> list:
        return [p for arc in self.arcs.values() for p in arc]

    def to_json(self, G: Graph = None) -> dict:
        name = (lambda v: G.name(v)) if G is not None else str
        return {"circumference": str(self.circumference),
                "arcs": {name(v): [str(s), str(e)] for v, (s, e) in sorted(self.arcs.items())}}


def arcs_from_json(G: Graph, data: dict) -> ArcModel:
    return ArcModel(Fraction(data["circumference"]),
                    {G.index(k): (Fraction(s), Fraction(e)) for k, (s, e) in data["arcs"].items()})


def intervals_to_json(G: Graph, m: IntervalModel) -> dict:
    return {"intervals": {G.name(v): [str(m.lp[v]), str(m.rp[v])] for v in sorted(m.lp)}}


def intervals_from_json(G: Graph, data: dict) -> IntervalModel:
    return IntervalModel.from_pairs({G.index(k): (Fraction(a), Fraction(b))
                                     for k, (a, b) in data["intervals"].items()})


# ------------------------------------------------------------------ flips

def flip_to_arcs(m: IntervalModel, K) -> ArcModel:
    """Bend the line into a circle of length max endpoint + 1 and turn every
    interval of K inside out."""
    K = frozenset(K)
    pts = m.endpoints()
    if pts and min(pts) <= 0:
        raise PreconditionError("nonpositive-endpoint", "all endpoints must be strictly positive")
    c = (max(pts) if pts else 0) + 1
    arcs = {}
    for v in m.lp:
        lp, rp = m.lp[v], m.rp[v]
        if v in K:
            if lp == rp:
                raise PreconditionError("degenerate-interval",
                                        f"interval of {v} in K is a single point", v)
            arcs[v] = (rp, lp)
        else:
            if lp == rp:
                raise PreconditionError("degenerate-interval",
                                        f"interval of {v} is a single point", v)
            arcs[v] = (lp, rp)
    return ArcModel(Fraction(c), arcs)


def flip_to_intervals(m: ArcModel, P=0) -> tuple:
    """Cut the circle at P and flip every arc through P.  Returns the
    interval model together with K, the set of flipped vertices."""
    P = Fraction(P)
    c = m.circumference
    if P in m.endpoints():
        raise PreconditionError("point-on-endpoint", f"point {P} is an arc endpoint")
    K = frozenset(v for v in m.arcs if m.contains(v, P))
    lp, rp = {}, {}
    for v, (s, e) in m.arcs.items():
        s2, e2 = (s - P) % c, (e - P) % c
        if v in K:
            lp[v], rp[v] = e2, s2
        else:
            lp[v], rp[v] = s2, e2
    return IntervalModel(lp, rp), K


# -------------------------------------------------------------- verifiers

def verify_arc_model(G: Graph, m: ArcModel) -> Check:
    if set(m.arcs) != set(G.vertices()):
        return Check(False, ("vertex-set", None))
    for a, b in combinations(G.vertices(), 2):
        if m.intersect(a, b) != G.has_edge(a, b):
            return Check(False, (a, b))
    return Check(True)


def verify_sharp(G: Graph, K, m: IntervalModel) -> Check:
    """Check (sharp): I(v) doubly extends I(u) exactly at the non-edges of G."""
    K = frozenset(K)
    A = build_aux_graph(G, K)
    bad = realizes(A.derived, m)
    if bad is not None:
        raise PreconditionError("model-does-not-realize", "model does not realize G^K", bad)
    for v in sorted(K):
        for u in G.vertices():
            if u in K:
                continue
            if m.doubly_extends(v, u) != (not G.has_edge(u, v)):
                return Check(False, (v, u))
    return Check(True)


@dataclass(frozen=True)
class NormalizedReport:
    endpoints: Check
    containment: Check
    cover: Check

    @property
    def ok(self) -> bool:
        return self.endpoints.ok and self.containment.ok and self.cover.ok

    def __bool__(self):
        return self.ok


def verify_normalized(G: Graph, m: ArcModel) -> NormalizedReport:
    """Check the three normalized-model conditions, each with its first
    violating pair."""
    V = frozenset(G.vertices())
    ends, cont, cover = Check(True), Check(True), Check(True)
    for a, b in combinations(sorted(V), 2):
        twins = G.closed(a) == G.closed(b)
        shared = bool(set(m.arcs[a]) & set(m.arcs[b]))
        if ends.ok and shared != twins:
            ends = Check(False, (a, b))
        if not G.has_edge(a, b):
            continue
        for x, y in ((a, b), (b, a)):
            if cont.ok and G.closed(x) <= G.closed(y) and not m.subset(x, y):
                cont = Check(False, (x, y))
        if cover.ok and (G.closed(a) | G.closed(b)) == V and c4_through_edge(G, a, b) is None:
            if not m.covers(a, b):
                cover = Check(False, (a, b))
    return NormalizedReport(ends, cont, cover)
