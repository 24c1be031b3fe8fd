"""Exact rational plane geometry helpers.

Everything works over ``fractions.Fraction`` so arrangement combinatorics are
deterministic and free of rounding artifacts.  Points are (Fraction, Fraction)
pairs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]


def frac_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Point, b: Point) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def orient(a: Point, b: Point, c: Point) -> Fraction:
    """Positive iff a,b,c make a left (counterclockwise) turn."""
    return cross(sub(b, a), sub(c, a))


def seg_intersection(p: Point, q: Point, r: Point, s: Point) -> tuple[Fraction, Fraction] | None:
    """Proper interior intersection of open segments pq and rs.

    Returns parameters (t, u) with intersection = p + t*(q-p) = r + u*(s-r),
    0 < t,u < 1, or None when the interiors do not cross transversally.
    Collinear overlaps and endpoint touches return None; callers relying on
    generic position should perturb their inputs instead.
    """
    d1 = sub(q, p)
    d2 = sub(s, r)
    denom = cross(d1, d2)
    if denom == 0:
        return None
    w = sub(r, p)
    t = cross(w, d2) / denom
    u = cross(w, d1) / denom
    if 0 < t < 1 and 0 < u < 1:
        return (t, u)
    return None


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and \
        min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Strict interior test by crossing number; p must not lie on the boundary."""
    inside = False
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x coordinate of the edge at height p_y
            t = (p[1] - a[1]) / (b[1] - a[1])
            x = a[0] + t * (b[0] - a[0])
            if x > p[0]:
                inside = not inside
    return inside


def signed_area2(poly: Sequence[Point]) -> Fraction:
    """Twice the signed area; positive for counterclockwise polygons."""
    total = Fraction(0)
    for i in range(len(poly)):
        total += cross(poly[i], poly[(i + 1) % len(poly)])
    return total


def seg_point_dist2(p: Point, a: Point, b: Point) -> Fraction:
    """Squared distance from p to closed segment ab."""
    d = sub(b, a)
    L2 = dot(d, d)
    if L2 == 0:
        w = sub(p, a)
        return dot(w, w)
    t = dot(sub(p, a), d) / L2
    if t < 0:
        t = Fraction(0)
    elif t > 1:
        t = Fraction(1)
    closest = (a[0] + t * d[0], a[1] + t * d[1])
    w = sub(p, closest)
    return dot(w, w)


def closest_point_on_segment(p: Point, a: Point, b: Point) -> tuple[Point, Fraction]:
    d = sub(b, a)
    L2 = dot(d, d)
    if L2 == 0:
        w = sub(p, a)
        return a, dot(w, w)
    t = dot(sub(p, a), d) / L2
    if t < 0:
        t = Fraction(0)
    elif t > 1:
        t = Fraction(1)
    closest = (a[0] + t * d[0], a[1] + t * d[1])
    w = sub(p, closest)
    return closest, dot(w, w)


def line_through_offset(a: Point, b: Point, shift: Point) -> tuple[Point, Point]:
    """The line ab translated by shift, as a point pair."""
    return ((a[0] + shift[0], a[1] + shift[1]), (b[0] + shift[0], b[1] + shift[1]))


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """Intersection of infinite lines ab and cd; None when parallel."""
    d1 = sub(b, a)
    d2 = sub(d, c)
    denom = cross(d1, d2)
    if denom == 0:
        return None
    t = cross(sub(c, a), d2) / denom
    return (a[0] + t * d1[0], a[1] + t * d1[1])
