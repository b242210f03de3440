"""Exact one-dimensional interval sets.

Every line in the plane is parametrised as ``origin + t * direction``; the
subsets of a line that show up here (a polygon cut by a line, a removed
segment, the retained part of a cell edge) are finite unions of intervals in
``t`` with individually open or closed ends.  ``None`` stands for an infinite
bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

Bound = Optional[Fraction]


@dataclass(frozen=True)
class Interval:
    lo: Bound
    hi: Bound
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo is None:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is None:
            object.__setattr__(self, "hi_closed", False)

    @property
    def empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        if self.lo > self.hi:
            return True
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed)
        return False

    @property
    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi and not self.empty

    def __contains__(self, t) -> bool:
        if self.lo is not None and (t < self.lo or (t == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (t > self.hi or (t == self.hi and not self.hi_closed)):
            return False
        return True

    def midpoint(self) -> Fraction:
        if self.lo is None and self.hi is None:
            return Fraction(0)
        if self.lo is None:
            return self.hi - 1
        if self.hi is None:
            return self.lo + 1
        return (self.lo + self.hi) / 2


def _lo_key(iv: Interval):
    # sort by lower bound; closed before open at equal value
    if iv.lo is None:
        return (0, Fraction(0), 0)
    return (1, iv.lo, 0 if iv.lo_closed else 1)


def _intersect(a: Interval, b: Interval) -> Interval:
    if a.lo is None:
        lo, lc = b.lo, b.lo_closed
    elif b.lo is None or a.lo > b.lo:
        lo, lc = a.lo, a.lo_closed
    elif b.lo > a.lo:
        lo, lc = b.lo, b.lo_closed
    else:
        lo, lc = a.lo, a.lo_closed and b.lo_closed
    if a.hi is None:
        hi, hc = b.hi, b.hi_closed
    elif b.hi is None or a.hi < b.hi:
        hi, hc = a.hi, a.hi_closed
    elif b.hi < a.hi:
        hi, hc = b.hi, b.hi_closed
    else:
        hi, hc = a.hi, a.hi_closed and b.hi_closed
    return Interval(lo, hi, lc, hc)


class IntervalSet:
    """An immutable finite union of intervals, kept sorted and merged."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        items = sorted((iv for iv in intervals if not iv.empty), key=_lo_key)
        merged: list[Interval] = []
        for iv in items:
            if merged:
                last = merged[-1]
                touch = last.hi is None or (
                    iv.lo is not None
                    and (iv.lo < last.hi or (iv.lo == last.hi and (iv.lo_closed or last.hi_closed)))
                )
                if touch:
                    if last.hi is None or (iv.hi is not None and iv.hi < last.hi):
                        continue
                    if iv.hi is not None and iv.hi == last.hi:
                        merged[-1] = Interval(last.lo, last.hi, last.lo_closed,
                                              last.hi_closed or iv.hi_closed)
                    else:
                        merged[-1] = Interval(last.lo, iv.hi, last.lo_closed, iv.hi_closed)
                    continue
            merged.append(iv)
        self.intervals: tuple[Interval, ...] = tuple(merged)

    @classmethod
    def point(cls, t) -> "IntervalSet":
        t = Fraction(t)
        return cls([Interval(t, t)])

    @classmethod
    def closed(cls, lo, hi) -> "IntervalSet":
        return cls([Interval(Fraction(lo), Fraction(hi))])

    @classmethod
    def line(cls) -> "IntervalSet":
        return cls([Interval(None, None, False, False)])

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self) -> str:
        parts = []
        for iv in self.intervals:
            parts.append("%s%s, %s%s" % ("[" if iv.lo_closed else "(", iv.lo, iv.hi,
                                         "]" if iv.hi_closed else ")"))
        return "IntervalSet(%s)" % " u ".join(parts)

    def __contains__(self, t) -> bool:
        return any(t in iv for iv in self.intervals)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.intervals + other.intervals)

    __or__ = union

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(_intersect(a, b) for a in self.intervals for b in other.intervals)

    __and__ = intersection

    def complement(self) -> "IntervalSet":
        out = []
        lo, lc = None, False
        for iv in self.intervals:
            if iv.lo is not None:
                out.append(Interval(lo, iv.lo, lc, not iv.lo_closed))
            if iv.hi is None:
                return IntervalSet(out)
            lo, lc = iv.hi, not iv.hi_closed
        out.append(Interval(lo, None, lc, False))
        return IntervalSet(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        if not other:
            return self
        return self.intersection(other.complement())

    __sub__ = difference

    def is_convex(self) -> bool:
        return len(self.intervals) <= 1

    def hull(self) -> "IntervalSet":
        if not self.intervals:
            return self
        a, b = self.intervals[0], self.intervals[-1]
        return IntervalSet([Interval(a.lo, b.hi, a.lo_closed, b.hi_closed)])

    def covers(self, other: "IntervalSet") -> bool:
        return not other.difference(self)

    def covers_open(self, lo, hi) -> bool:
        """True iff the open interval (lo, hi) is contained in the set."""
        if lo == hi:
            return True
        return self.covers(IntervalSet([Interval(Fraction(lo), Fraction(hi), False, False)]))

    def open_hull_covered(self) -> bool:
        """True iff the set contains the interior of its own hull."""
        if not self.intervals:
            return True
        a, b = self.intervals[0], self.intervals[-1]
        return self.covers(IntervalSet([Interval(a.lo, b.hi, False, False)]))
