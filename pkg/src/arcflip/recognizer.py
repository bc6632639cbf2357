"""End-to-end recognition: choose candidate cliques K, evaluate G^K, and
assemble a certificate carrying either a verified arc model or witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .aux import build_aux_graph
from .configs import ConfigWitness, verify_witness
from .errors import GuardExceeded, guard
from .graph import (Graph, all_cliques, find_c4, find_hole, is_chordal, maximal_cliques,
                    simplicial_vertices, universal_vertices)
from .models import ArcModel, flip_to_arcs, verify_arc_model
from .pqtree import NonIntervalWitness, recognize_interval, verify_non_interval_witness
from .star import check_star, star_to_sharp

CIRCULAR_ARC = "CIRCULAR_ARC"
NOT_CIRCULAR_ARC = "NOT_CIRCULAR_ARC"
HELLY = "HELLY"
NOT_HELLY = "NOT_HELLY"
OUT_OF_SCOPE = "OUT_OF_SCOPE"
INCONCLUSIVE = "INCONCLUSIVE"

MODES = ("c4free", "chordal", "helly", "auto")
CLIQUE_LIMIT = 10 ** 6
ORACLE_FALLBACK = 6


@dataclass
class Certificate:
    verdict: str
    mode: str
    model: Optional[ArcModel] = None
    K: Optional[frozenset] = None
    failures: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    stripped: frozenset = frozenset()
    c4: Optional[tuple] = None

    def to_json(self, G: Graph) -> dict:
        out = {"verdict": self.verdict, "mode": self.mode, "notes": list(self.notes),
               "stripped": G.names(sorted(self.stripped))}
        if self.model is not None:
            out["K"] = G.names(sorted(self.K))
            out["model"] = self.model.to_json(G)
        if self.c4 is not None:
            out["c4"] = G.names(self.c4)
        out["failures"] = [{"K": G.names(sorted(K)), "witness": witness_json(G, w)}
                           for K, w in self.failures.items()]
        return out


def witness_json(G: Graph, w) -> dict:
    if isinstance(w, ConfigWitness):
        return {"type": "configuration", **w.to_json(G)}
    return {"type": "non-interval", "kind": w.kind, "vertices": G.names(sorted(w.vertices))}


def verify_failure(G: Graph, K, w) -> bool:
    """Re-check one per-K failure witness against G^K."""
    A = build_aux_graph(G, K)
    if isinstance(w, ConfigWitness):
        return bool(verify_witness(A, w))
    return verify_non_interval_witness(A.derived, w)


@dataclass(frozen=True)
class Outcome:
    """Result of evaluating one clique K: a model or a witness."""
    K: frozenset
    model: Optional[ArcModel] = None
    witness: object = None


def evaluate(G: Graph, K, sharp=True) -> Outcome:
    """Run the pipeline on G^K.  With sharp=False the model step is skipped
    (used when G has C4s and only the pair condition is asked for)."""
    K = frozenset(K)
    A = build_aux_graph(G, K)
    r = recognize_interval(A.derived)
    if isinstance(r, NonIntervalWitness):
        return Outcome(K, witness=r)
    res = check_star(A, r)
    if isinstance(res, ConfigWitness):
        return Outcome(K, witness=res)
    if not sharp:
        return Outcome(K)
    m = star_to_sharp(A, res)
    arcs = flip_to_arcs(m, K)
    if not verify_arc_model(G, arcs):
        raise AssertionError("flipped model does not realize G")
    return Outcome(K, model=arcs)


# ---------------------------------------------------------- universal vertices

def _strip(G: Graph):
    U = universal_vertices(G)
    keep = sorted(set(G.vertices()) - U)
    H, order = G.induced(keep)
    return U, H, order


def lift_model(G: Graph, U, order, m: Optional[ArcModel]) -> ArcModel:
    """Re-add universal vertices as arcs covering all but a small gap
    between two consecutive endpoints of the stripped model."""
    U = sorted(U)
    if m is None or not m.arcs:
        c = Fraction(1)
        arcs = {u: (Fraction(0), Fraction(1, 2)) for u in U}
        return ArcModel(c, arcs)
    c = m.circumference
    pts = sorted(set(m.endpoints()))
    lo, hi = (pts[0], pts[1]) if len(pts) > 1 else (pts[0], c)
    step = (hi - lo) / (2 * len(U) + 2)
    arcs = {order[i]: a for i, a in m.arcs.items()}
    for j, u in enumerate(U, start=1):
        arcs[u] = (hi - j * step, lo + j * step)
    return ArcModel(c, arcs)


# ------------------------------------------------------------- candidates

def candidate_cliques(G: Graph, mode, limit=None) -> list:
    """Candidate cliques K per mode; c4free lists maximal cliques first,
    then every remaining nonempty clique, then the empty clique."""
    if mode == "chordal":
        seen, out = set(), []
        for s in sorted(simplicial_vertices(G)):
            K = G.closed(s)
            if K not in seen:
                seen.add(K)
                out.append(K)
        return out
    if mode == "helly":
        return list(maximal_cliques(G, limit=limit))
    if mode == "c4free":
        maxi = list(maximal_cliques(G, limit=limit))
        rest = [K for K in all_cliques(G, limit=limit) if K not in set(maxi)]
        return maxi + rest + [frozenset()]
    raise ValueError(f"unknown mode {mode!r}")


# -------------------------------------------------------------- pipelines

def recognize(G: Graph, mode="auto") -> Certificate:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    U, H, order = _strip(G)
    notes = []
    if U:
        notes.append(f"stripped universal vertices: {', '.join(G.names(sorted(U)))}")
    if mode == "auto":
        cert = _auto(H, notes)
    else:
        cert = {"c4free": _c4free, "chordal": _chordal, "helly": _helly}[mode](H, notes)
    return _lift(G, U, order, cert)


def _lift(G, U, order, cert: Certificate) -> Certificate:
    back = lambda vs: frozenset(order[v] for v in vs)
    cert.stripped = frozenset(U)
    if cert.verdict in (CIRCULAR_ARC, HELLY):
        cert.model = lift_model(G, U, order, cert.model)
        cert.K = back(cert.K or ())
        if not verify_arc_model(G, cert.model):
            raise AssertionError("lifted model does not realize G")
    if cert.c4 is not None:
        cert.c4 = tuple(order[v] for v in cert.c4)
    cert.failures = {back(K): _remap(w, order) for K, w in cert.failures.items()}
    return cert


def _remap(w, order):
    if isinstance(w, ConfigWitness):
        return ConfigWitness(w.config_id, {p: order[x] for p, x in w.mapping.items()},
                             tuple(order[x] for x in w.path))
    return NonIntervalWitness(frozenset(order[x] for x in w.vertices), w.kind)


def _trivial(H: Graph, mode, notes, verdict=CIRCULAR_ARC) -> Optional[Certificate]:
    if H.n == 0:
        return Certificate(verdict, mode, None, frozenset(), notes=notes + ["graph is complete"])
    return None


def _c4free(H: Graph, notes) -> Certificate:
    t = _trivial(H, "c4free", notes)
    if t:
        return t
    c4 = find_c4(H)
    if c4 is not None:
        return Certificate(OUT_OF_SCOPE, "c4free", notes=notes + ["graph contains an induced C4"], c4=c4)
    failures = {}
    limit = guard(CLIQUE_LIMIT)
    try:
        cands = candidate_cliques(H, "c4free", limit)
    except GuardExceeded:
        cands = None
    for K in cands if cands is not None else maximal_cliques(H, limit=limit):
        out = evaluate(H, K)
        if out.model is not None:
            return Certificate(CIRCULAR_ARC, "c4free", out.model, K, notes=notes)
        failures[K] = out.witness
    if cands is None:
        return Certificate(INCONCLUSIVE, "c4free", failures=failures,
                           notes=notes + ["clique enumeration truncated by the guard"])
    return Certificate(NOT_CIRCULAR_ARC, "c4free", failures=failures, notes=notes)


def _chordal(H: Graph, notes) -> Certificate:
    t = _trivial(H, "chordal", notes)
    if t:
        return t
    if not is_chordal(H):
        hole = find_hole(H)
        return Certificate(OUT_OF_SCOPE, "chordal", notes=notes + [
            "graph is not chordal; hole: " + " ".join(H.names(hole))])
    failures, model, K0 = {}, None, None
    for K in candidate_cliques(H, "chordal"):
        out = evaluate(H, K)
        if out.model is None:
            failures[K] = out.witness
        elif model is None:
            model, K0 = out.model, K
    if failures:
        return Certificate(NOT_CIRCULAR_ARC, "chordal", failures=failures, notes=notes)
    return Certificate(CIRCULAR_ARC, "chordal", model, K0, notes=notes)


def _helly(H: Graph, notes) -> Certificate:
    t = _trivial(H, "helly", notes, HELLY)
    if t:
        return t
    c4 = find_c4(H)
    if c4 is not None:
        return Certificate(OUT_OF_SCOPE, "helly", c4=c4, notes=notes + [
            "graph contains an induced C4; the maximal-clique test is not sufficient here"])
    failures, model, K0 = {}, None, None
    for K in candidate_cliques(H, "helly", guard(CLIQUE_LIMIT)):
        out = evaluate(H, K)
        if out.model is None:
            failures[K] = out.witness
        elif model is None:
            model, K0 = out.model, K
    if failures:
        return Certificate(NOT_HELLY, "helly", failures=failures, notes=notes)
    return Certificate(HELLY, "helly", model, K0, notes=notes)


def _auto(H: Graph, notes) -> Certificate:
    if H.n and is_chordal(H):
        cert = _chordal(H, notes)
    else:
        cert = _c4free(H, notes)
    cert.mode = "auto"
    if cert.verdict == OUT_OF_SCOPE and H.n <= ORACLE_FALLBACK:
        from .oracle import oracle_circular_arc
        ok, m = oracle_circular_arc(H)
        cert.notes.append("decided by the brute-force oracle")
        if ok:
            return Certificate(CIRCULAR_ARC, "auto", m, frozenset(), notes=cert.notes, c4=cert.c4)
        cert.verdict = NOT_CIRCULAR_ARC
    return cert
