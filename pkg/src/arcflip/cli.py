"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 out of scope or
inconclusive, 64 usage error, 66 input error, 69 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures
from .aux import build_aux_graph
from .configs import ConfigWitness, verify_witness, witness_from_json
from .errors import ArcflipError, GuardExceeded, ParseError, PreconditionError
from .graph import Graph, load_graph, render
from .models import (arcs_from_json, flip_to_arcs, intervals_from_json, intervals_to_json,
                     verify_arc_model, verify_sharp)
from .pqtree import NonIntervalWitness, clique_paths, recognize_interval

EX_OK, EX_NO, EX_SCOPE = 0, 1, 2
EX_USAGE, EX_NOINPUT, EX_UNAVAILABLE = 64, 66, 69


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


# ------------------------------------------------------------------ input

def read_graph(path) -> Graph:
    """Read a graph file; paths of the form fixtures/NAME.el (or a bare
    fixture name) fall back to the shipped fixture corpus."""
    if os.path.exists(path):
        with open(path, "rb") as fh:
            return load_graph(fh.read())
    stem = os.path.splitext(os.path.basename(path))[0]
    if stem in fixtures.FILES and (path == stem or os.path.dirname(path) in ("fixtures", "")):
        return fixtures.load_fixture(stem)
    raise FileNotFoundError(path)


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def parse_clique(G: Graph, text):
    if text is None:
        raise UsageError("--clique is required")
    names = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return G.indices(names)
    except KeyError as exc:
        raise UsageError(f"unknown vertex {exc.args[0]!r}") from None


def emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def names(G, vs):
    return G.names(sorted(vs))


# --------------------------------------------------------------- commands

def cmd_recognize(args):
    from .recognizer import CIRCULAR_ARC, HELLY, NOT_CIRCULAR_ARC, NOT_HELLY, recognize
    G = read_graph(args.file)
    cert = recognize(G, args.mode)
    if args.format == "json":
        emit(args, dump(cert.to_json(G)))
    else:
        lines = [f"verdict: {cert.verdict}"]
        lines += [f"note: {n}" for n in cert.notes]
        if cert.model is not None:
            lines.append("K: " + " ".join(names(G, cert.K)))
            for v in sorted(cert.model.arcs):
                s, e = cert.model.arcs[v]
                lines.append(f"arc {G.name(v)}: {s} {e}")
        for K, w in cert.failures.items():
            lines.append("K = {" + ",".join(names(G, K)) + "}: " + _witness_text(G, w))
        emit(args, "\n".join(lines) + "\n")
    if cert.verdict in (CIRCULAR_ARC, HELLY):
        return EX_OK
    if cert.verdict in (NOT_CIRCULAR_ARC, NOT_HELLY):
        return EX_NO
    return EX_SCOPE


def _witness_text(G, w):
    if isinstance(w, NonIntervalWitness):
        return f"non-interval {w.kind} on " + " ".join(names(G, w.vertices))
    return json.dumps(w.to_json(G), sort_keys=True)


def cmd_aux(args):
    G = read_graph(args.file)
    A = build_aux_graph(G, parse_clique(G, args.clique))
    pairs = sorted(A.pairs)
    if args.format == "json":
        emit(args, dump({"edges": [[G.name(a), G.name(b)] for a, b in A.derived.edges()],
                         "pairs": [[G.name(v), G.name(u)] for v, u in pairs]}))
    else:
        text = render(A.derived)
        text += "".join(f"{G.name(v)}>{G.name(u)}\n" for v, u in pairs)
        emit(args, text)
    return EX_OK


def cmd_pqtree(args):
    G = read_graph(args.file)
    r = recognize_interval(G)
    if isinstance(r, NonIntervalWitness):
        emit(args, f"not interval: {r.kind} on " + " ".join(names(G, r.vertices)) + "\n")
        return EX_NO
    text = r.sexpr() + "\n"
    text += "".join(f"K{i + 1}: " + " ".join(names(G, c)) + "\n"
                    for i, c in enumerate(r.default_path().cliques))
    if args.limit is not None:
        for p in clique_paths(r, args.limit):
            text += " | ".join(",".join(names(G, c)) for c in p.cliques) + "\n"
    emit(args, text)
    return EX_OK


def cmd_interval(args):
    G = read_graph(args.file)
    r = recognize_interval(G)
    if isinstance(r, NonIntervalWitness):
        if args.format == "json":
            emit(args, dump({"interval": False, "kind": r.kind, "vertices": names(G, r.vertices)}))
        else:
            emit(args, f"not interval\nwitness {r.kind}: " + " ".join(names(G, r.vertices)) + "\n")
        return EX_NO
    if args.format == "json":
        emit(args, dump({"interval": True, "path": [names(G, c) for c in r.default_path().cliques]}))
    else:
        emit(args, "interval\n")
    return EX_OK


def cmd_star(args):
    from .star import check_star
    G = read_graph(args.file)
    A = build_aux_graph(G, parse_clique(G, args.clique))
    r = check_star(A)
    if isinstance(r, ConfigWitness):
        emit(args, dump(r.to_json(G)))
        return EX_NO
    if args.format == "json":
        emit(args, dump({"path": [names(G, c) for c in r.cliques]}))
    else:
        emit(args, "".join(" ".join(names(G, c)) + "\n" for c in r.cliques))
    return EX_OK


def cmd_model(args):
    from .star import check_star, star_to_sharp
    G = read_graph(args.file)
    K = parse_clique(G, args.clique)
    A = build_aux_graph(G, K)
    r = check_star(A)
    if isinstance(r, ConfigWitness):
        emit(args, dump({"witness": r.to_json(G)}))
        return EX_NO
    m = star_to_sharp(A, r)
    arcs = flip_to_arcs(m, K)
    out = {**intervals_to_json(G, m), "arc_model": arcs.to_json(G), "K": names(G, K)}
    emit(args, dump(out))
    return EX_OK


def cmd_oracle(args):
    from .oracle import oracle_circular_arc, oracle_sharp, star_path
    G = read_graph(args.file)
    if args.kind == "ca":
        ok, m = oracle_circular_arc(G)
        text = dump({"circular_arc": ok, "model": m.to_json(G) if m else None})
    elif args.kind == "star":
        p = star_path(build_aux_graph(G, parse_clique(G, args.clique)))
        ok = p is not None
        text = dump({"star": ok, "path": [names(G, c) for c in p.cliques] if ok else None})
    else:
        ok = oracle_sharp(G, parse_clique(G, args.clique))
        text = dump({"sharp": ok})
    emit(args, text)
    return EX_OK if ok else EX_NO


def cmd_verify_witness(args):
    """Check a witness, a model or a whole certificate against the graph."""
    from .recognizer import verify_failure
    G = read_graph(args.file)
    data = read_json(args.witness)
    if "verdict" in data:
        problems = []
        if "model" in data:
            if not verify_arc_model(G, arcs_from_json(G, data["model"])):
                problems.append("model")
        for f in data.get("failures", []):
            K = G.indices(f["K"])
            w = f["witness"]
            if w["type"] == "configuration":
                ok = verify_witness(build_aux_graph(G, K), witness_from_json(G, w))
            else:
                ok = verify_failure(G, K, NonIntervalWitness(G.indices(w["vertices"]), w["kind"]))
            if not ok:
                problems.append("failure for K = " + ",".join(f["K"]))
        emit(args, "ok\n" if not problems else "invalid: " + "; ".join(problems) + "\n")
        return EX_OK if not problems else EX_NO
    if "arcs" in data:
        res = verify_arc_model(G, arcs_from_json(G, data))
    elif "intervals" in data:
        res = verify_sharp(G, parse_clique(G, args.clique), intervals_from_json(G, data))
    else:
        A = build_aux_graph(G, parse_clique(G, args.clique))
        res = verify_witness(A, witness_from_json(G, data.get("witness", data)))
    if res:
        emit(args, "ok\n")
        return EX_OK
    emit(args, f"invalid: {_violation_text(G, res.violation)}\n")
    return EX_NO


def _violation_text(G, v):
    return " ".join(G.name(x) if isinstance(x, int) else str(x) for x in v)


def cmd_render(args):
    from .render import arcs_svg, intervals_svg, to_dot
    G = read_graph(args.file)
    K = parse_clique(G, args.clique) if args.clique else frozenset()
    if args.format == "dot":
        emit(args, to_dot(G, K))
        return EX_OK
    if args.model:
        data = read_json(args.model)
        if not K and "K" in data:
            K = G.indices(data["K"])
        if "arc_model" in data:
            data = data["arc_model"]
        if "arcs" in data:
            emit(args, arcs_svg(G, arcs_from_json(G, data), K))
        else:
            emit(args, intervals_svg(G, intervals_from_json(G, data), K))
        return EX_OK
    from .recognizer import recognize
    cert = recognize(G, args.mode)
    if cert.model is None:
        print(f"no model: verdict {cert.verdict}", file=sys.stderr)
        return EX_NO
    emit(args, arcs_svg(G, cert.model, cert.K))
    return EX_OK


def cmd_fixtures(args):
    if args.list or not args.name:
        emit(args, "".join(f"{k}\t{v}\n" for k, v in fixtures.FILES.items()))
        return EX_OK
    if args.name not in fixtures.FILES:
        raise UsageError(f"unknown fixture {args.name!r}")
    emit(args, fixtures.fixture_text(args.name))
    return EX_OK


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arcflip", description="Certifying circular-arc recognition via flipping.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help, clique=False, fmt=("text", "json")):
        q = sub.add_parser(name, help=help)
        q.set_defaults(fn=fn)
        q.add_argument("--format", choices=fmt, default=fmt[0])
        q.add_argument("--out", help="write output to this file")
        if clique:
            q.add_argument("--clique", help="comma-separated vertex names of K")
        return q

    q = add("recognize", cmd_recognize, "decide circular-arc membership")
    q.add_argument("file")
    q.add_argument("--mode", choices=("c4free", "chordal", "helly", "auto"), default="auto")
    q = add("aux", cmd_aux, "print G^K and its dominance pairs", clique=True)
    q.add_argument("file")
    q = add("pqtree", cmd_pqtree, "print the PQ-tree of an interval graph")
    q.add_argument("file")
    q.add_argument("--limit", type=int, help="also list up to this many clique paths")
    q = add("interval", cmd_interval, "interval recognition with witness")
    q.add_argument("file")
    q = add("star", cmd_star, "pair-condition clique path or configuration", clique=True)
    q.add_argument("file")
    q = add("model", cmd_model, "interval and arc models from a clique", clique=True)
    q.add_argument("file")
    q = add("oracle", cmd_oracle, "brute-force deciders for small graphs", clique=True)
    q.add_argument("kind", choices=("ca", "star", "sharp"))
    q.add_argument("file")
    q = add("verify-witness", cmd_verify_witness, "check a witness, model or certificate",
            clique=True)
    q.add_argument("file")
    q.add_argument("witness", help="JSON file")
    q = add("render", cmd_render, "draw a model as SVG or the graph as DOT", clique=True,
            fmt=("svg", "dot"))
    q.add_argument("file")
    q.add_argument("--model", help="model JSON file")
    q.add_argument("--mode", choices=("c4free", "chordal", "helly", "auto"), default="auto")
    q = add("fixtures", cmd_fixtures, "list or print the shipped fixtures")
    q.add_argument("name", nargs="?")
    q.add_argument("--list", action="store_true")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"arcflip: {exc}", file=sys.stderr)
        return EX_USAGE
    except (OSError, ParseError, json.JSONDecodeError) as exc:
        print(f"arcflip: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except GuardExceeded as exc:
        print(f"arcflip: {exc}", file=sys.stderr)
        return EX_UNAVAILABLE
    except PreconditionError as exc:
        print(f"arcflip: {exc.kind}: {exc}", file=sys.stderr)
        return EX_SCOPE
    except (ArcflipError, KeyError, ValueError) as exc:
        print(f"arcflip: {exc}", file=sys.stderr)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())
