"""SVG and DOT output for graphs, interval models and arc models."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .graph import Graph
from .interval import IntervalModel
from .models import ArcModel

TINT = "#c0392b"
INK = "#2c3e50"


def to_dot(G: Graph, K=(), name="G") -> str:
    K = frozenset(K)
    lines = [f"graph {name} {{"]
    for v in G.vertices():
        shape = "box" if v in K else "ellipse"
        lines.append(f'  "{G.name(v)}" [shape={shape}];')
    for a, b in G.edges():
        lines.append(f'  "{G.name(a)}" -- "{G.name(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _svg(width, height, body) -> str:
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">\n'
            + "\n".join(body) + "\n</svg>\n")


def intervals_svg(G: Graph, m: IntervalModel, K=()) -> str:
    """Stacked interval tracks over a dashed baseline."""
    K = frozenset(K)
    vs = sorted(m.lp, key=lambda v: (m.lp[v], m.rp[v], v))
    lo = float(min(m.lp.values()))
    hi = float(max(m.rp.values()))
    span = max(hi - lo, 1.0)
    left, scale, row = 60, 500 / span, 18
    height = row * (len(vs) + 2)
    base = height - row
    body = [f'<line x1="{left}" y1="{base}" x2="{left + 500}" y2="{base}" '
            f'stroke="{INK}" stroke-dasharray="4 3"/>']
    for i, v in enumerate(vs):
        y = row * (i + 1)
        x1 = left + (float(m.lp[v]) - lo) * scale
        x2 = left + (float(m.rp[v]) - lo) * scale
        colour = TINT if v in K else INK
        body.append(f'<line x1="{x1:.2f}" y1="{y}" x2="{max(x2, x1 + 2):.2f}" y2="{y}" '
                    f'stroke="{colour}" stroke-width="3"/>')
        body.append(f'<text x="{left - 8}" y="{y + 4}" text-anchor="end">'
                    f'{escape(G.name(v))}</text>')
    return _svg(left + 540, height, body)


def arcs_svg(G: Graph, m: ArcModel, K=()) -> str:
    """Arcs drawn on concentric rings around a dashed circle."""
    K = frozenset(K)
    c = float(m.circumference)
    vs = sorted(m.arcs)
    r0, gap = 80, 14
    size = 2 * (r0 + gap * (len(vs) + 2))
    cx = cy = size / 2
    body = [f'<circle cx="{cx}" cy="{cy}" r="{r0}" fill="none" stroke="{INK}" '
            f'stroke-dasharray="4 3"/>']

    def point(t, r):
        ang = 2 * math.pi * t / c
        return cx + r * math.cos(ang), cy - r * math.sin(ang)

    for i, v in enumerate(vs):
        s, e = (float(x) for x in m.arcs[v])
        length = (e - s) % c
        r = r0 + gap * (i + 1)
        x1, y1 = point(s, r)
        x2, y2 = point(e, r)
        large = 1 if length > c / 2 else 0
        colour = TINT if v in K else INK
        body.append(f'<path d="M {x1:.2f} {y1:.2f} A {r} {r} 0 {large} 0 {x2:.2f} {y2:.2f}" '
                    f'fill="none" stroke="{colour}" stroke-width="3"/>')
        lx, ly = point(s + length / 2, r + gap / 2)
        body.append(f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="middle">'
                    f'{escape(G.name(v))}</text>')
    return _svg(int(size), int(size), body)
