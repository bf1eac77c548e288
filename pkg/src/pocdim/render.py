"""Static SVG pictures of triangle families on the plane x1 + x2 + x3 = 0.

Floating point is used here and nowhere else. The chart basis is
u = (1, -1, 0)/sqrt(2), w = (1, 1, -2)/sqrt(6), so a Type-3 run drifts
horizontally across the picture.
"""

from __future__ import annotations

import math
from typing import Mapping, Optional, Sequence
from xml.sax.saxutils import escape, quoteattr

from .exactgeom import Apex, corners

_U = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_W = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf")
SIZE = 640.0
MARGIN = 24.0


def chart(q: Sequence) -> tuple[float, float]:
    """Orthonormal 2-D coordinates of a point of H (second axis flipped for SVG)."""
    x = [float(c) for c in q]
    return (sum(a * b for a, b in zip(x, _U)), -sum(a * b for a, b in zip(x, _W)))


def _fmt(x: float) -> str:
    s = "%.6f" % x
    return "0.000000" if s == "-0.000000" else s


def render_svg(apexes: Mapping[str, Apex], highlight: Optional[str] = None, title: str = "") -> str:
    """One polygon per triangle, a text label at each centroid and, for the
    highlighted apex, its three side lines stretched across the picture so the
    corner cones and side slabs around it can be read off."""
    if highlight is not None and highlight not in apexes:
        raise ValueError("unknown highlight label %r" % highlight)
    tris = {lab: [chart(c.point) for c in corners(v)] for lab, v in apexes.items()}
    xs = [p[0] for t in tris.values() for p in t] or [0.0]
    ys = [p[1] for t in tris.values() for p in t] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (SIZE - 2 * MARGIN) / span

    def px(p):
        return (MARGIN + (p[0] - x0) * scale, MARGIN + (p[1] - y0) * scale)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">'
        % (SIZE, SIZE, SIZE, SIZE),
    ]
    if title:
        lines.append("<title>%s</title>" % escape(title))
    lines.append('<rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (SIZE, SIZE))
    for n, (lab, tri) in enumerate(tris.items()):
        pts = " ".join("%s,%s" % tuple(map(_fmt, px(p))) for p in tri)
        color = PALETTE[n % len(PALETTE)]
        width = "2.5" if lab == highlight else "1.2"
        lines.append('<polygon points="%s" fill="%s" fill-opacity="0.15" stroke="%s" stroke-width="%s" data-label=%s/>'
                     % (pts, color, color, width, quoteattr(lab)))
    if highlight is not None:
        tri = [px(p) for p in tris[highlight]]
        reach = 2 * SIZE
        for a, b in ((0, 1), (1, 2), (0, 2)):
            (ax, ay), (bx, by) = tri[a], tri[b]
            dx, dy = bx - ax, by - ay
            norm = math.hypot(dx, dy) or 1.0
            dx, dy = dx / norm * reach, dy / norm * reach
            lines.append('<line class="region" x1="%s" y1="%s" x2="%s" y2="%s" stroke="#444" '
                         'stroke-dasharray="4 3" stroke-width="0.8"/>'
                         % (_fmt(ax - dx), _fmt(ay - dy), _fmt(bx + dx), _fmt(by + dy)))
    for lab, tri in tris.items():
        cx = sum(p[0] for p in tri) / 3
        cy = sum(p[1] for p in tri) / 3
        x, y = px((cx, cy))
        lines.append('<text x="%s" y="%s" font-size="12" text-anchor="middle">%s</text>'
                     % (_fmt(x), _fmt(y), escape(lab)))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
