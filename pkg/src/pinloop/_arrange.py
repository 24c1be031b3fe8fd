"""Compile an arrangement of closed polylines into a multiloop encoding.

Input curves are closed polylines over exact rationals, each embedded, in
generic position pairwise (transverse interior crossings only, no triple
points, no tangencies).  The compiler recovers the 4-valent map — darts,
counterclockwise local order, arc involution — and keeps enough geometry to
answer point-location queries, which fixtures use to label regions.

Curves with no crossings become free circles hosted in the region containing
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import loopcore
from ._geom import Point, cross, orient, point_in_polygon, seg_intersection, signed_area2, sub

__all__ = ["compile_arrangement", "CompiledArrangement", "DegenerateArrangement"]


class DegenerateArrangement(ValueError):
    """Arrangement violates the generic-position requirements."""


class _CrossKey:
    """Sort key for directions within one open half-plane (CCW order)."""

    def __init__(self, item):
        self.v = item[0]

    def __lt__(self, other):
        c = cross(self.v, other.v)
        if c == 0:
            raise DegenerateArrangement("parallel directions at a crossing")
        return c > 0


def _sort_ccw(tagged: list[tuple[Point, object]]) -> list[object]:
    """Order tagged direction vectors counterclockwise starting in the upper
    half-plane boundary at the +x axis."""
    upper, lower = [], []
    for item in tagged:
        (x, y), _ = item
        (upper if y > 0 or (y == 0 and x > 0) else lower).append(item)
    out = []
    for bucket in (upper, lower):
        bucket.sort(key=_CrossKey)
        out.extend(tag for _, tag in bucket)
    return out


def _on_open_segment(p: Point, a: Point, b: Point) -> bool:
    if p == a or p == b or orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and \
        min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


@dataclass
class CompiledArrangement:
    multiloop: loopcore.Multiloop
    curves: list[list[Point]]
    crossing_positions: list[Point]
    dart_samples: dict[int, tuple[int, Point, Point]]  # out-dart -> (curve, point, forward dir)
    free_circle_curves: dict[int, int] = field(default_factory=dict)
    _arc_spans: dict[int, list[tuple[int, tuple, tuple]]] = field(default_factory=dict)

    def curve_is_ccw(self, curve_idx: int) -> bool:
        return signed_area2(self.curves[curve_idx]) > 0

    def region_sample(self, region_id: int) -> tuple[int, Point, bool]:
        """(curve, on-curve point, is_left) for some arc bounding the region."""
        for d in sorted(self.dart_samples):
            if self.multiloop.left_region(d) == region_id:
                ci, m, _ = self.dart_samples[d]
                return ci, m, True
        for d in sorted(self.dart_samples):
            if self.multiloop.right_region(d) == region_id:
                ci, m, _ = self.dart_samples[d]
                return ci, m, False
        raise KeyError(region_id)

    def region_signature(self, region_id: int) -> frozenset[int]:
        """Indices of the input curves whose interior contains the region."""
        curve_idx, m, is_left = self.region_sample(region_id)
        inside = set()
        for j, poly in enumerate(self.curves):
            if j == curve_idx:
                if self.curve_is_ccw(j) == is_left:
                    inside.add(j)  # interior lies left of CCW forward travel
            elif point_in_polygon(m, poly):
                inside.add(j)
        return frozenset(inside)

    def _crossing_segments(self):
        segs = []
        crossing_curves = {ct for ct, _, _ in self.dart_samples.values()}
        for ci, poly in enumerate(self.curves):
            if ci not in crossing_curves:
                continue
            for si in range(len(poly)):
                segs.append((ci, si, poly[si], poly[(si + 1) % len(poly)]))
        return segs

    def region_of_point(self, p: Point) -> int:
        """Region of the crossing map containing p (p not on a crossing curve).

        Casts a ray from p toward successive candidate targets until one ray
        is generic, then reads the region off the first arc hit.
        """
        m = self.multiloop
        if m.crossing_count == 0:
            return 0
        segments = self._crossing_segments()
        targets = sorted(segments, key=lambda s: _dist2_to_seg(p, s[2], s[3]))
        for frac in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)):
            for _, _, a, b in targets:
                mid = (a[0] + frac * (b[0] - a[0]), a[1] + frac * (b[1] - a[1]))
                u = sub(mid, p)
                if u == (Fraction(0), Fraction(0)):
                    continue
                hit = self._first_hit(p, u, segments)
                if hit is None:
                    continue
                ci, si, _s, dart = hit
                poly = self.curves[ci]
                v = sub(poly[(si + 1) % len(poly)], poly[si])
                side = cross(v, u)
                if side > 0:  # ray enters from the right side of forward travel
                    return m.right_region(dart)
                return m.left_region(dart)
        raise DegenerateArrangement("point location failed; no generic ray found")

    def _first_hit(self, p, u, segments):
        best = None
        tie = False
        for ci, si, a, b in segments:
            d = sub(b, a)
            denom = cross(u, d)
            w = sub(a, p)
            if denom == 0:
                if cross(u, w) == 0:
                    return None  # ray collinear with a segment: not generic
                continue
            t = cross(w, d) / denom
            s = cross(w, u) / denom
            if t <= 0:
                continue
            if s <= 0 or s >= 1:
                if s == 0 or s == 1:
                    return None  # ray through a polyline vertex: not generic
                continue
            if best is None or t < best[0]:
                best = (t, ci, si, s)
                tie = False
            elif t == best[0]:
                tie = True  # ray through a crossing point
        if best is None or tie:
            return None
        t, ci, si, s = best
        try:
            dart = self._dart_at(ci, si, s)
        except DegenerateArrangement:
            return None
        return ci, si, s, dart

    def _dart_at(self, curve_idx: int, seg_idx: int, s: Fraction) -> int:
        """Forward out-dart of the arc of ``curve_idx`` covering (seg_idx, s)."""
        pos = (seg_idx, s)
        for dart, start, end in self._arc_spans[curve_idx]:
            if start < end:
                if start < pos < end:
                    return dart
            else:  # span wraps around the polyline's closing vertex
                if pos > start or pos < end:
                    return dart
        raise DegenerateArrangement("query point sits on a crossing")


def _dist2_to_seg(p, a, b):
    from ._geom import seg_point_dist2
    return seg_point_dist2(p, a, b)


def compile_arrangement(curves: Sequence[Sequence[Point]],
                        ambient: str = loopcore.SPHERE,
                        free_circle_ids: Sequence[int] | None = None) -> CompiledArrangement:
    """Build the multiloop of an arrangement of closed polylines.

    Raises :class:`DegenerateArrangement` when the input is not generic; the
    randomized generators catch it and resample.
    """
    curves = [[(Fraction(x), Fraction(y)) for x, y in poly] for poly in curves]
    for poly in curves:
        if len(poly) < 3:
            raise DegenerateArrangement("closed polyline needs at least 3 vertices")

    def segs(i):
        poly = curves[i]
        return [(k, poly[k], poly[(k + 1) % len(poly)]) for k in range(len(poly))]

    crossings: list[tuple[Point, int, int]] = []
    per_curve: dict[int, list[tuple[int, Fraction, int]]] = {i: [] for i in range(len(curves))}

    for i in range(len(curves)):
        s_i = segs(i)
        for k, a, b in s_i:
            for k2, a2, b2 in s_i:
                if k2 <= k or (k2 - k) % len(curves[i]) in (1, len(curves[i]) - 1):
                    continue
                if seg_intersection(a, b, a2, b2) is not None:
                    raise DegenerateArrangement(f"curve {i} is not embedded")
        for j in range(i + 1, len(curves)):
            for k, a, b in s_i:
                for k2, a2, b2 in segs(j):
                    hit = seg_intersection(a, b, a2, b2)
                    if hit is None:
                        if any(_on_open_segment(p, a, b) for p in (a2, b2)) or \
                           any(_on_open_segment(p, a2, b2) for p in (a, b)) or \
                           a in (a2, b2) or b in (a2, b2):
                            raise DegenerateArrangement("curves touch non-transversally")
                        continue
                    t, u = hit
                    pos = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                    cid = len(crossings)
                    crossings.append((pos, i, j))
                    per_curve[i].append((k, t, cid))
                    per_curve[j].append((k2, u, cid))

    positions = [pos for pos, _, _ in crossings]
    if len(set(positions)) != len(positions):
        raise DegenerateArrangement("coincident crossings (triple point)")

    c = len(crossings)
    dir_at: dict[tuple[int, int], Point] = {}
    for ci, items in per_curve.items():
        poly = curves[ci]
        for seg_idx, _, cid in items:
            a, b = poly[seg_idx], poly[(seg_idx + 1) % len(poly)]
            dir_at[(ci, cid)] = sub(b, a)

    # darts: the four directions at a crossing, sorted CCW, take local slots 0..3
    dart_of: dict[tuple[int, int, int], int] = {}
    for cid, (_pos, ci, cj) in enumerate(crossings):
        di, dj = dir_at[(ci, cid)], dir_at[(cj, cid)]
        tagged = [(di, (ci, 1)), ((-di[0], -di[1]), (ci, -1)),
                  (dj, (cj, 1)), ((-dj[0], -dj[1]), (cj, -1))]
        for local, (curve, sign) in enumerate(_sort_ccw(tagged)):
            dart_of[(curve, cid, sign)] = 4 * cid + local

    alpha: list[int | None] = [None] * (4 * c)
    dart_samples: dict[int, tuple[int, Point, Point]] = {}
    arc_spans: dict[int, list[tuple[int, tuple, tuple]]] = {}
    free_curves: list[int] = []
    for ci, items in per_curve.items():
        if not items:
            free_curves.append(ci)
            continue
        items = sorted(items, key=lambda it: (it[0], it[1]))
        poly = curves[ci]
        spans = []
        for idx, (seg_idx, t, cid) in enumerate(items):
            seg2, t2, cid2 = items[(idx + 1) % len(items)]
            out_dart = dart_of[(ci, cid, 1)]
            in_dart = dart_of[(ci, cid2, -1)]
            alpha[out_dart] = in_dart
            alpha[in_dart] = out_dart
            spans.append((out_dart, (seg_idx, t), (seg2, t2)))
            a, b = poly[seg_idx], poly[(seg_idx + 1) % len(poly)]
            if seg2 == seg_idx and t2 > t:
                tm = (t + t2) / 2
            else:
                tm = (t + 1) / 2  # the tail of this segment is crossing-free
            m = (a[0] + tm * (b[0] - a[0]), a[1] + tm * (b[1] - a[1]))
            dart_samples[out_dart] = (ci, m, sub(b, a))
        arc_spans[ci] = spans

    compiled = CompiledArrangement(
        multiloop=loopcore.validate({"crossings": c, "arc_involution": alpha}),
        curves=curves,
        crossing_positions=positions,
        dart_samples=dart_samples,
    )
    compiled._arc_spans = arc_spans

    fc_ids = list(free_circle_ids) if free_circle_ids is not None else list(range(len(free_curves)))
    fc_entries = []
    for n, ci in enumerate(free_curves):
        host = compiled.region_of_point(curves[ci][0]) if c else 0
        fc_entries.append((fc_ids[n], host))
        compiled.free_circle_curves[fc_ids[n]] = ci

    outer = None
    if ambient == loopcore.PLANE:
        if c == 0:
            outer = 0
        else:
            xs = [p[0] for poly in curves for p in poly]
            ys = [p[1] for poly in curves for p in poly]
            outer = compiled.region_of_point((max(xs) + 1, max(ys) + 1))

    if fc_entries or ambient != loopcore.SPHERE:
        data = {"crossings": c, "arc_involution": alpha,
                "free_circles": [list(e) for e in fc_entries], "ambient": ambient}
        if outer is not None:
            data["outer_region"] = outer
        compiled.multiloop = loopcore.validate(data)
    return compiled
