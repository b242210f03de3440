"""Shared types and helpers for the constructive decompositions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .. import geom
from ..cells import ConvexCell, hull_cell
from ..errors import ColoringConflict, InvalidInput
from ..geom import HalfPlane, Line, Point, Segment
from ..intervals import Interval, IntervalSet
from ..region import PuncturedRegion, normalize
from ..verify import verify_cell

BOUNDS = {"A": 2, "B": 2, "C": 3, "D": 4, "E": 3, "F": 6, "G": 4, "MT3": 4}


@dataclass
class Decomposition:
    cells: list
    case_tag: str
    claimed_bound: int
    coloring: Optional["Coloring"] = None
    notes: list = field(default_factory=list)

    @property
    def route(self) -> str:
        return self.case_tag.split("/")[0]

    def __len__(self):
        return len(self.cells)


@dataclass
class Coloring:
    """Colors in {0, 1, 2} of the structural pieces, keyed by label."""
    colors: dict = field(default_factory=dict)
    rotation: int = 0
    mode: str = "schedule"
    notes: list = field(default_factory=list)
    cases: dict = field(default_factory=dict)
    forbidden: dict = field(default_factory=dict)
    requirements: list = field(default_factory=list)
    cCD: dict = field(default_factory=dict)
    cE: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.colors[key]


@dataclass
class LeafPartition:
    index: int
    l_line: Line
    m_line: Line
    l_convex: bool
    m_convex: bool
    CD: object = None
    E: object = None
    H: object = None
    F: object = None
    G: list = field(default_factory=list)


# ---------------------------------------------------------------- cells

def open_interior(base: Sequence[Point], label: str = "") -> ConvexCell:
    """Interior of a convex polygon as a cell."""
    base = tuple(base)
    ex = tuple(Segment(a, b) for a, b in zip(base, base[1:] + base[:1]))
    return ConvexCell(base, ex, label)


def interval_cell(line: Line, iv, label: str = "") -> ConvexCell:
    a = line.at(iv.lo)
    if iv.is_point:
        return ConvexCell((a,), (), label)
    b = line.at(iv.hi)
    base = geom.convex_hull([a, b])
    ex = []
    if not iv.lo_closed:
        ex.append(Segment(a, a))
    if not iv.hi_closed:
        ex.append(Segment(b, b))
    return ConvexCell(base, tuple(ex), label)


def class_cells(classes: Sequence[Sequence], X: PuncturedRegion, labels=None,
                strict: bool = True) -> list:
    """One hull cell per nonempty class; verifies each cell."""
    out = []
    for k, pieces in enumerate(classes):
        pieces = [p for p in pieces if p is not None]
        if not pieces:
            continue
        label = labels[k] if labels else "class%d" % k
        cell = hull_cell(pieces, label)
        if strict:
            rep = verify_cell(cell, X)
            if not rep.ok:
                raise ColoringConflict("class %s does not give a convex subset of X: %s"
                                       % (label, rep.violations[0]["detail"]),
                                       [getattr(p, "label", "") for p in pieces])
        out.append(cell)
    return out


# ---------------------------------------------------------------- split lines

def stern_brocot_slopes(limit: int = 4000):
    """0, vertical, then +-q for the positive rationals q in breadth-first
    (Calkin-Wilf) order: 1, 1/2, 2, 1/3, 3/2, ..."""
    yield Fraction(0)
    yield None
    q = Fraction(1)
    for _ in range(limit):
        yield q
        yield -q
        q = 1 / (2 * (q.numerator // q.denominator) + 1 - q)


def direction_of(slope) -> Point:
    return Point(Fraction(0), Fraction(1)) if slope is None else Point(Fraction(1), slope)


def choose_split_direction(X: PuncturedRegion, p: Point, avoid: Sequence[Point] = (),
                           through: Sequence[Point] = ()) -> Point:
    """First direction in the slope scan whose line through p misses every
    vertex of S, every feature endpoint other than p and the points in
    ``avoid``; when ``through`` is given the line must also separate two of
    those points (so it crosses the interior of their hull)."""
    pts = [q for q in list(X.critical_points) + list(avoid) if q != p]
    for slope in stern_brocot_slopes():
        d = direction_of(slope)
        if not all(geom.cross(d, q - p) != 0 for q in pts):
            continue
        if through:
            sides = {geom.sign(geom.cross(d, q - p)) for q in through}
            if not {-1, 1} <= sides:
                continue
        return d
    raise InvalidInput("no admissible split direction")  # pragma: no cover


def _clip_segment(seg: Segment, h: HalfPlane):
    line = geom.line_through(seg.a, seg.b) if seg.a != seg.b else None
    if line is None:
        return [seg] if h.contains(seg.a) else []
    s = geom.segment_set_on_line(seg, line) & geom.halfplane_line_set(h, line)
    out = []
    for iv in s:
        if iv.is_point:
            q = line.at(iv.lo)
            out.append(Segment(q, q))
        else:
            name = {(True, True): "closed", (False, False): "open",
                    (False, True): "half_open_a", (True, False): "half_open_b"}
            out.append(Segment(line.at(iv.lo), line.at(iv.hi), name[(iv.lo_closed, iv.hi_closed)]))
    return out


def split_half(X: PuncturedRegion, p: Point, d: Point) -> Optional[PuncturedRegion]:
    """X intersected with the half-open half-plane T = (open left side of the
    directed line through p along d) plus the open ray from p along d."""
    h = HalfPlane.left_of(p, p + d)
    parts = []
    for P in X.components:
        parts.extend(geom.clip(P, h))
    if not parts:
        return None
    feats = []
    for f in X.features:
        feats.extend(_clip_segment(f.segment, h))
    line = Line(p, d)
    on = IntervalSet()
    for P in parts:
        on = on | geom.polygon_line_set(P, line)
    for iv in on & IntervalSet([Interval(None, Fraction(0), False, True)]):
        a, b = line.at(iv.lo), line.at(iv.hi)
        feats.append(Segment(a, b))
    return normalize(parts if len(parts) > 1 else parts[0], feats)


def split_pair(X: PuncturedRegion, p: Point, d: Point):
    return split_half(X, p, d), split_half(X, p, Point(-d.x, -d.y))
