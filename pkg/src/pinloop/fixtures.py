"""Built-in multiloop fixtures and randomized instance generators.

The geometric fixtures are compiled from exact polyline arrangements, so the
resulting dart encodings are deterministic.  ``three_rectangles`` reproduces
the worked 3-strand diagram (three overlapping rounded rectangles) whose
pruned formula over the printed labels is

    3 & 8 & (9|10) & (2|6) & (10|11) & (1|6) & (1|4|9) & (5|6|10) & (2|7|11)

with label 0 reserved for the unbounded region.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import loopcore
from ._arrange import CompiledArrangement, DegenerateArrangement, compile_arrangement


def rect(x0, y0, x1, y1):
    """Axis-aligned rectangle as a CCW closed polyline."""
    F = Fraction
    return [(F(x0), F(y0)), (F(x1), F(y0)), (F(x1), F(y1)), (F(x0), F(y1))]


def lens2(ambient: str = loopcore.PLANE) -> CompiledArrangement:
    """Two circles crossing at 2 points (two overlapping squares)."""
    return compile_arrangement([rect(0, 0, 5, 4), rect(3, -1, 8, 3)], ambient=ambient)


def lens2_labels(arr: CompiledArrangement) -> dict[str, int]:
    """Map {outer, lune_a, lune_b, lens} to region ids of a lens2 arrangement."""
    names = {frozenset(): "outer", frozenset({0}): "lune_a",
             frozenset({1}): "lune_b", frozenset({0, 1}): "lens"}
    return {names[arr.region_signature(r)]: r for r in arr.multiloop.region_ids}


# -- the worked 3-strand figure ------------------------------------------------

_GREEN = rect(10, 0, 30, 34)     # tall
_RED = rect(0, 8, 52, 22)        # wide
_BLUE = rect(25, 4, 41, 27)      # middle-right


def three_rectangles(ambient: str = loopcore.PLANE) -> CompiledArrangement:
    """The worked 3-strand simple multiloop: 10 crossings, 12 regions."""
    return compile_arrangement([_GREEN, _RED, _BLUE], ambient=ambient)


def three_rectangles_labels(arr: CompiledArrangement) -> dict[int, int]:
    """Map printed region labels 1..11 (0 = unbounded) to region ids.

    Labels follow the figure: walls of the three rectangles cut the plane into
    eleven bounded regions distinguished by which rectangles contain them and,
    for the split green-only / blue-only / green-blue overlaps, by height.
    """
    g, r, b = 0, 1, 2
    red_top = _RED[2][1]     # y=22
    red_bot = _RED[0][1]     # y=8
    out: dict[int, int] = {}
    for rid in arr.multiloop.region_ids:
        sig = arr.region_signature(rid)
        _, (x, y), _ = arr.region_sample(rid)
        above = y >= red_top
        label = {
            frozenset(): 0,
            frozenset({r}): None,        # 3 or 8, by x
            frozenset({g}): 1 if above else 9,
            frozenset({b}): 2 if above else 11,
            frozenset({g, r}): 4,
            frozenset({g, b}): 6 if above else 10,
            frozenset({r, b}): 7,
            frozenset({g, r, b}): 5,
        }[sig]
        if label is None:
            label = 3 if x <= _GREEN[0][0] else 8
        out[label] = rid
    if len(out) != 12:
        raise RuntimeError("worked-figure labeling is not a bijection")
    return out


WORKED_FIGURE_FORMULA = [
    {3}, {8}, {9, 10}, {2, 6}, {10, 11}, {1, 6}, {1, 4, 9}, {5, 6, 10}, {2, 7, 11},
]

WORKED_FIGURE_BIGON_EDGES = [(9, 10), (2, 6), (10, 11), (1, 6), (1, 9), (6, 10), (2, 11)]
WORKED_FIGURE_FORCED = {3, 8}


# -- randomized simple multiloops ----------------------------------------------

def _star_polygon(rng: random.Random, cx: int, cy: int, base: int, npts: int):
    """Star-shaped polygon around (cx, cy): simple by construction."""
    pts = []
    radii = [rng.randint(base * 2 // 3, base * 3 // 2) for _ in range(npts)]
    # rational points on rays k/npts of a full turn, via integer lattice dirs
    dirs = _lattice_directions(npts)
    for k in range(npts):
        dx, dy = dirs[k]
        r = Fraction(radii[k])
        norm = Fraction(max(abs(dx), abs(dy)))
        pts.append((cx + r * dx / norm, cy + r * dy / norm))
    return pts


def _lattice_directions(n: int):
    """n primitive integer directions in counterclockwise order, full turn."""
    import math
    vecs = set()
    for a in range(-3, 4):
        for b in range(-3, 4):
            if (a, b) != (0, 0):
                g = math.gcd(abs(a), abs(b))
                vecs.add((a // g, b // g))
    full = sorted(vecs, key=lambda v: math.atan2(v[1], v[0]))
    return [full[(i * len(full)) // n] for i in range(n)]


def random_three_strand(rng: random.Random, max_crossings: int = 12,
                        ambient: str = loopcore.SPHERE) -> CompiledArrangement:
    """A random valid simple 3-strand multiloop with <= max_crossings crossings.

    Draws three star polygons with jittered centers and sizes, retrying until
    the arrangement is generic, connected-by-crossings is not required, and
    the crossing budget holds.  Every strand is embedded by construction.
    """
    while True:
        curves = []
        for i in range(3):
            cx = rng.randint(-6, 6)
            cy = rng.randint(-6, 6)
            base = rng.randint(6, 14)
            npts = rng.randint(5, 9)
            curves.append(_star_polygon(rng, cx, cy, base, npts))
        try:
            arr = compile_arrangement(curves, ambient=ambient)
        except DegenerateArrangement:
            continue
        m = arr.multiloop
        if not 0 < m.crossing_count <= max_crossings:
            continue
        if not loopcore.is_simple(m):
            continue
        return arr
