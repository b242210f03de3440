"""Deterministic SVG pictures of regions, cells and certificates."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .geom import Point
from .region import PuncturedRegion

PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
           "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac")
SIZE = 480
MARGIN = 16


class _Frame:
    def __init__(self, X: PuncturedRegion):
        x0, y0, x1, y1 = X.bbox()
        span = max(x1 - x0, y1 - y0) or Fraction(1)
        self.x0, self.y1 = x0, y1
        self.k = Fraction(SIZE - 2 * MARGIN) / span
        self.w = int((x1 - x0) * self.k) + 2 * MARGIN
        self.h = int((y1 - y0) * self.k) + 2 * MARGIN

    def xy(self, p: Point) -> str:
        # y grows downwards in SVG
        x = (p.x - self.x0) * self.k + MARGIN
        y = (self.y1 - p.y) * self.k + MARGIN
        return "%.3f,%.3f" % (float(x), float(y))

    def path(self, pts: Sequence[Point], close: bool = True) -> str:
        d = "M" + " L".join(self.xy(p) for p in pts)
        return d + (" Z" if close else "")


def _point(f: _Frame, p: Point, r: float, style: str) -> str:
    x, y = f.xy(p).split(",")
    return '<circle cx="%s" cy="%s" r="%.1f" %s/>' % (x, y, r, style)


def render_svg(X: PuncturedRegion, cells: Sequence = (), certificates: Sequence = (),
               title: Optional[str] = None) -> str:
    f = _Frame(X)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (f.w, f.h, f.w, f.h)]
    if title:
        out.append("<title>%s</title>" % escape(title))
    out.append('<g id="region">')
    for P in X.components:
        out.append('<path d="%s" fill="#eeeeee" stroke="#222222" stroke-width="1.5"/>'
                   % f.path(P.vertices))
    for s in X.antennae:
        out.append('<path d="%s" fill="none" stroke="#222222" stroke-width="1.5"/>'
                   % f.path((s.a, s.b), close=False))
    out.append("</g>")
    if cells:
        out.append('<g id="cells">')
        for i, c in enumerate(cells):
            color = PALETTE[i % len(PALETTE)]
            if len(c.base) >= 3:
                out.append('<path d="%s" fill="%s" fill-opacity="0.45" stroke="%s" '
                           'stroke-width="1"/>' % (f.path(c.base), color, color))
            elif len(c.base) == 2:
                out.append('<path d="%s" fill="none" stroke="%s" stroke-width="3"/>'
                           % (f.path(c.base, close=False), color))
            else:
                out.append(_point(f, c.base[0], 3.5, 'fill="%s"' % color))
        out.append("</g>")
    out.append('<g id="missing">')
    for feat in X.features:
        s = feat.segment
        if s.a == s.b:
            out.append(_point(f, s.a, 3.0, 'fill="#ffffff" stroke="#c00000" stroke-width="1.2"'))
        else:
            out.append('<path d="%s" fill="none" stroke="#c00000" stroke-width="1.5" '
                       'stroke-dasharray="4 3"/>' % f.path((s.a, s.b), close=False))
    out.append("</g>")
    if certificates:
        out.append('<g id="certificates">')
        for c in certificates:
            pts = list(c.points)
            if c.kind in ("clique", "odd_circuit") and len(pts) >= 2:
                out.append('<path d="%s" fill="none" stroke="#000000" stroke-width="0.8" '
                           'stroke-dasharray="2 2"/>' % f.path(pts, close=len(pts) > 2))
            for p in pts:
                out.append(_point(f, p, 2.0, 'fill="#000000"'))
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
