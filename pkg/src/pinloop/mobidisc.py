"""Embedded-bigon enumeration and mobidisc formulas of simple multiloops.

A bigon witness is a closed curve made of one arc of each of two distinct
strands, meeting exactly at two marked crossings, together with a side of the
curve that is a disc.  The disc may contain arcs of further strands; the set
of regions it covers is a clause of the positive CNF whose satisfying
assignments are exactly the pinning sets.

Enumeration follows the naive cubic scheme: for each unordered strand pair
and each pair of crossings shared by the two strands, test the four arc
combinations; sides are found by a region walk and certified as discs with an
Euler-characteristic check.  On the sphere both sides of a bigon curve can be
discs, giving two witnesses for one curve; in the plane the side containing
the outer marker never qualifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotSimple
from .loopcore import Multiloop, PLANE, crossing_of, is_simple, opposite, rotation

__all__ = [
    "BigonWitness", "MobidiscFormula",
    "enumerate_embedded_bigons", "mobidisc_formula", "prune",
    "formula_to_dimacs", "formula_to_json", "formula_from_json",
]


@dataclass(frozen=True)
class BigonWitness:
    """Certified embedded bigon with a chosen disc side."""

    strands: tuple[int, int]          # strand ids, sorted
    marked: tuple[int, int]           # marked crossings, sorted
    arc_a: tuple[int, ...]            # out-darts along the first strand's arc
    arc_b: tuple[int, ...]            # out-darts along the second strand's arc
    disc_faces: frozenset[int]


@dataclass(frozen=True)
class MobidiscFormula:
    """Positive CNF over region variables.  Clauses are region-id sets."""

    universe: frozenset[int]
    clauses: frozenset[frozenset[int]]

    def is_antichain(self) -> bool:
        return all(not (a < b or b < a)
                   for a in self.clauses for b in self.clauses if a != b)


def prune(f: MobidiscFormula) -> MobidiscFormula:
    """Keep only inclusion-minimal clauses; hitting sets are unchanged."""
    return MobidiscFormula(f.universe, _prune_clauses(f.clauses))


def _prune_clauses(clauses: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    by_size = sorted(set(clauses), key=lambda c: (len(c), sorted(c)))
    kept: list[frozenset[int]] = []
    for c in by_size:
        if not any(k <= c for k in kept):
            kept.append(c)
    return frozenset(kept)


def _arc_between(m: Multiloop, out_dart: int, target: int):
    """Out-darts from out_dart's crossing to the first arrival at crossing
    ``target``; None when the strand returns to its start first."""
    alpha = m.arc_involution
    darts = []
    d = out_dart
    while True:
        darts.append(d)
        arrive = alpha[d]
        if crossing_of(arrive) == target:
            return tuple(darts)
        d = opposite(arrive)
        if d == out_dart:
            return None


def _curve_visits(m: Multiloop, arc_a, arc_b):
    """(in_dart, out_dart) at every crossing along the closed curve a then b."""
    alpha = m.arc_involution
    visits = []
    for arc, nxt in ((arc_a, arc_b), (arc_b, arc_a)):
        for i, d in enumerate(arc):
            if i == 0:
                continue
            visits.append((alpha[arc[i - 1]], d))
        visits.append((alpha[arc[-1]], nxt[0]))
    return visits


def _side_regions(m: Multiloop, visits, curve_arcs):
    """Regions adjacent to the curve on its two sides, then flood-filled.

    Returns (left_set, right_set) or None when the curve does not separate
    its component (the fills meet).
    """
    left_seeds, right_seeds = set(), set()
    for in_dart, out_dart in visits:
        e = out_dart
        while e != in_dart:
            left_seeds.add(m.region_of_corner(e))
            e = rotation(e)
        e = in_dart
        while e != out_dart:
            right_seeds.add(m.region_of_corner(e))
            e = rotation(e)

    adjacency: dict[int, set[int]] = {}
    for d, d2 in m.arcs():
        a = min(d, d2)
        if a in curve_arcs:
            continue
        r1, r2 = m.left_region(d), m.left_region(d2)
        adjacency.setdefault(r1, set()).add(r2)
        adjacency.setdefault(r2, set()).add(r1)

    def fill(seeds):
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            r = stack.pop()
            for r2 in adjacency.get(r, ()):
                if r2 not in seen:
                    seen.add(r2)
                    stack.append(r2)
        return seen

    left, right = fill(left_seeds), fill(right_seeds)
    if left & right:
        return None
    return left, right


def _is_disc(m: Multiloop, side: frozenset[int], curve_arcs: frozenset[int]) -> bool:
    """Closed subcomplex test: connected, chi = 1, boundary exactly the curve."""
    arcs = []
    boundary = set()
    for d, d2 in m.arcs():
        inl = m.left_region(d) in side
        inr = m.left_region(d2) in side
        if inl or inr:
            arcs.append((d, d2))
            if inl != inr:
                boundary.add(min(d, d2))
    if boundary != curve_arcs:
        return False
    verts = {crossing_of(d) for d, _ in arcs} | {crossing_of(d2) for _, d2 in arcs}
    chi = len(verts) - len(arcs) + len(side)
    if chi != 1:
        return False
    # connectivity inside the side via non-boundary arcs
    inner_adj: dict[int, set[int]] = {r: set() for r in side}
    for d, d2 in arcs:
        r1, r2 = m.left_region(d), m.left_region(d2)
        if r1 in side and r2 in side:
            inner_adj[r1].add(r2)
            inner_adj[r2].add(r1)
    start = next(iter(side))
    seen, stack = {start}, [start]
    while stack:
        for r2 in inner_adj[stack.pop()]:
            if r2 not in seen:
                seen.add(r2)
                stack.append(r2)
    return len(seen) == len(side)


def enumerate_embedded_bigons(m: Multiloop) -> list[BigonWitness]:
    """Every embedded bigon of a simple multiloop, one witness per disc side."""
    if not is_simple(m):
        raise NotSimple("bigon enumeration requires a simple multiloop")

    # crossings shared by a strand pair
    shared: dict[tuple[int, int], list[int]] = {}
    for x in range(m.crossing_count):
        pair = tuple(sorted((m.strand_of(4 * x), m.strand_of(4 * x + 1))))
        shared.setdefault(pair, []).append(x)

    witnesses: dict[tuple, BigonWitness] = {}
    for (si, sj), xs in sorted(shared.items()):
        for ai in range(len(xs)):
            for bi in range(ai + 1, len(xs)):
                x, y = xs[ai], xs[bi]
                for arc_a in _strand_arcs(m, si, x, y):
                    ia = {crossing_of(d) for d in arc_a[1:]}
                    for arc_b in _strand_arcs(m, sj, y, x):
                        ib = {crossing_of(d) for d in arc_b[1:]}
                        if ia & ib:
                            continue  # arcs share an interior crossing
                        _collect_discs(m, x, y, si, sj, arc_a, arc_b, witnesses)
    return [witnesses[k] for k in sorted(witnesses)]


def _strand_arcs(m: Multiloop, strand: int, x: int, y: int):
    """The two arcs of ``strand`` from crossing x to crossing y."""
    local = [d for d in (4 * x, 4 * x + 1, 4 * x + 2, 4 * x + 3) if m.strand_of(d) == strand]
    out = []
    seen = set()
    for d in local:
        arc = _arc_between(m, d, y)
        if arc is not None and arc not in seen:
            seen.add(arc)
            out.append(arc)
    return out


def _collect_discs(m, x, y, si, sj, arc_a, arc_b, witnesses):
    curve_arcs = frozenset(min(d, m.arc_involution[d]) for d in arc_a + arc_b)
    visits = _curve_visits(m, arc_a, arc_b)
    sides = _side_regions(m, visits, curve_arcs)
    if sides is None:
        return
    for side in sides:
        side = frozenset(side)
        if not side:
            continue
        if m.ambient == PLANE and m.outer_region in side:
            continue
        if not _is_disc(m, side, curve_arcs):
            continue
        key = (curve_arcs, side)
        if key not in witnesses:
            witnesses[key] = BigonWitness(
                strands=(si, sj), marked=tuple(sorted((x, y))),
                arc_a=arc_a, arc_b=arc_b, disc_faces=side)


def mobidisc_formula(m: Multiloop) -> MobidiscFormula:
    """Pruned positive CNF whose solutions are exactly the pinning sets."""
    witnesses = enumerate_embedded_bigons(m)
    return MobidiscFormula(
        universe=frozenset(m.region_ids),
        clauses=_prune_clauses(w.disc_faces for w in witnesses))


# -- export -------------------------------------------------------------------

def formula_to_dimacs(f: MobidiscFormula) -> str:
    """Positive-CNF DIMACS variant: header ``p pcnf <vars> <clauses>``,
    positive literals only, lines terminated by 0.

    Region ids are mapped to the dense variable range 1..n in increasing
    order; the mapping is recorded in comment lines.
    """
    regions = sorted(f.universe)
    var = {r: i + 1 for i, r in enumerate(regions)}
    lines = [f"c variables are regions; var {var[r]} = region {r}" for r in regions]
    lines.append(f"p pcnf {len(regions)} {len(f.clauses)}")
    for clause in sorted(f.clauses, key=lambda c: (len(c), sorted(c))):
        lines.append(" ".join(str(var[r]) for r in sorted(clause)) + " 0")
    return "\n".join(lines) + "\n"


def formula_to_json(f: MobidiscFormula) -> dict:
    return {
        "universe": sorted(f.universe),
        "clauses": [sorted(c) for c in sorted(f.clauses, key=lambda c: (len(c), sorted(c)))],
    }


def formula_from_json(data: dict) -> MobidiscFormula:
    return MobidiscFormula(
        universe=frozenset(data["universe"]),
        clauses=frozenset(frozenset(c) for c in data["clauses"]))
