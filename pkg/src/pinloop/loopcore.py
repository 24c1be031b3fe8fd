"""Combinatorial encoding, validation, and topological invariants of multiloops.

A multiloop with ``c`` crossings is stored as a 4-valent map on ``4c`` darts.
Darts ``4x .. 4x+3`` belong to crossing ``x`` in fixed counterclockwise local
order ``0,1,2,3``.  Three permutations drive everything:

* ``rotation``     rho(d)   = next dart counterclockwise at the same crossing,
* ``opposite``     sig(d)   = dart straight across the crossing (local +2),
* ``arc_involution`` alpha(d) = the dart at the other end of the arc leaving d.

Derived structure:

* strands: orbits of ``sig . alpha`` come in mirror pairs (one per traversal
  direction); a strand is such a pair, plus one strand per free circle;
* regions: orbits of ``alpha . rho``.  The orbit containing dart ``d`` is the
  region touching the corner between ``d`` and ``rho(d)``; equivalently the
  region on the left of the directed arc leaving through ``d``.

Region ids are orbit-canonical: the minimum dart id in the orbit.  A map with
zero crossings has the single region ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BadTransversalPairing,
    DanglingFreeCircleHost,
    FixedPointInInvolution,
    NonIntegerGenus,
    NotInvolution,
)

SPHERE = "sphere"
PLANE = "plane"


def rotation(d: int) -> int:
    """Next dart counterclockwise at the same crossing."""
    return 4 * (d // 4) + (d + 1) % 4


def rotation_inv(d: int) -> int:
    return 4 * (d // 4) + (d - 1) % 4


def opposite(d: int) -> int:
    """The dart on the same traversal straight across the crossing."""
    return 4 * (d // 4) + (d + 2) % 4


def crossing_of(d: int) -> int:
    return d // 4


def _orbits(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]
        out.append(tuple(orbit))
    return out


@dataclass(frozen=True)
class Multiloop:
    """Validated multiloop.  Immutable; all operations on it are pure.

    ``regions`` lists each face orbit in cycle order starting from its minimum
    dart, so ``region_ids`` (the minimums) are stable under re-validation.
    Free circles are inert annotations: they bound no monorbigons and the
    region universe is the face set of the crossing map.
    """

    crossing_count: int
    arc_involution: tuple[int, ...]
    free_circles: tuple[tuple[int, int], ...] = ()
    ambient: str = SPHERE
    outer_region: int | None = None

    regions: tuple[tuple[int, ...], ...] = field(default=(), compare=False)
    strand_orbits: tuple[tuple[int, ...], ...] = field(default=(), compare=False)
    strand_of_dart: tuple[int, ...] = field(default=(), compare=False)
    genus_by_component: tuple[int, ...] = field(default=(), compare=False)
    components_of_crossings: tuple[int, ...] = field(default=(), compare=False)

    # -- lookups ---------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return 4 * self.crossing_count

    @property
    def region_ids(self) -> tuple[int, ...]:
        if self.crossing_count == 0:
            return (0,)
        return tuple(orbit[0] for orbit in self.regions)

    @property
    def strand_count(self) -> int:
        return len(self.strand_orbits) // 2 + len(self.free_circles)

    @property
    def genus(self) -> int:
        return sum(self.genus_by_component)

    def region_of_corner(self, d: int) -> int:
        """Region touching the corner between darts ``d`` and ``rho(d)``."""
        return self._region_lookup[d]

    def left_region(self, d: int) -> int:
        """Region on the left of the directed arc leaving through dart ``d``."""
        return self._region_lookup[d]

    def right_region(self, d: int) -> int:
        return self._region_lookup[rotation_inv(d)]

    def strand_of(self, d: int) -> int:
        return self.strand_of_dart[d]

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs of the map as (d, alpha(d)) with d < alpha(d)."""
        return [(d, self.arc_involution[d])
                for d in range(self.dart_count) if d < self.arc_involution[d]]

    @property
    def _region_lookup(self) -> dict[int, int]:
        lookup = self.__dict__.get("_region_lookup_cache")
        if lookup is None:
            lookup = {}
            for orbit in self.regions:
                rid = orbit[0]
                for d in orbit:
                    lookup[d] = rid
            object.__setattr__(self, "_region_lookup_cache", lookup)
        return lookup

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        data = {
            "crossings": self.crossing_count,
            "arc_involution": list(self.arc_involution),
            "free_circles": [list(fc) for fc in self.free_circles],
            "ambient": self.ambient,
        }
        if self.outer_region is not None:
            data["outer_region"] = self.outer_region
        return data


def validate(raw: dict | Sequence[int],
             free_circles: Iterable[Sequence[int]] = (),
             ambient: str = SPHERE,
             outer_region: int | None = None) -> Multiloop:
    """Check a raw permutation encoding and build a :class:`Multiloop`.

    ``raw`` is either the JSON dict ``{"crossings": c, "arc_involution":
    [4c ints], "free_circles": [[id, region], ...], "ambient": ...}`` or the
    bare involution array (then the remaining arguments apply).
    """
    if isinstance(raw, dict):
        alpha = list(raw["arc_involution"])
        c = int(raw.get("crossings", len(alpha) // 4))
        free_circles = raw.get("free_circles", ())
        ambient = raw.get("ambient", SPHERE)
        outer_region = raw.get("outer_region")
    else:
        alpha = list(raw)
        c = len(alpha) // 4

    n = 4 * c
    if len(alpha) != n:
        raise NotInvolution("arc_involution must have exactly 4*crossings entries",
                            expected=n, got=len(alpha))
    for d, e in enumerate(alpha):
        if not isinstance(e, int) or not 0 <= e < n:
            raise NotInvolution(f"dart {d} maps outside the dart range", dart=d)
    for d in range(n):
        if alpha[alpha[d]] != d:
            raise NotInvolution(f"alpha is not an involution at dart {d}", dart=d)
        if alpha[d] == d:
            raise FixedPointInInvolution(f"dart {d} is fixed", dart=d)
        if alpha[d] == opposite(d):
            raise BadTransversalPairing(
                f"arc at dart {d} joins the two ends of one traversal", dart=d)
    if ambient not in (SPHERE, PLANE):
        raise ValueError(f"unknown ambient surface {ambient!r}")

    # regions: orbits of alpha . rho
    regions = _orbits([alpha[rotation(d)] for d in range(n)]) if n else []
    regions = [tuple(orbit[orbit.index(min(orbit)):] + orbit[:orbit.index(min(orbit))])
               for orbit in regions]
    regions.sort(key=lambda o: o[0])

    # strands: orbits of sig . alpha, paired with their reversals
    strand_orbits = _orbits([opposite(alpha[d]) for d in range(n)]) if n else []
    strand_of = [0] * n
    if n:
        orbit_of = {}
        for i, orbit in enumerate(strand_orbits):
            for d in orbit:
                orbit_of[d] = i
        for orbit in strand_orbits:
            sid = min(min(orbit), min(strand_orbits[orbit_of[opposite(orbit[0])]]))
            for d in orbit:
                strand_of[d] = sid

    # connected components of the crossing map
    comp = list(range(c))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for d in range(n):
        a, b = find(crossing_of(d)), find(crossing_of(alpha[d]))
        if a != b:
            comp[max(a, b)] = min(a, b)
    roots = tuple(find(x) for x in range(c))
    comp = roots

    def find(x):  # noqa: F811 - frozen lookup after union phase
        return roots[x]

    genus_by_component = []
    for root in sorted(set(comp)):
        v = sum(1 for x in comp if x == root)
        f = sum(1 for orbit in regions if find(crossing_of(orbit[0])) == root)
        chi = v - 2 * v + f
        if (2 - chi) % 2 != 0:
            raise NonIntegerGenus(f"component {root} has odd Euler characteristic {chi}",
                                  component=root, chi=chi)
        g = (2 - chi) // 2
        if g < 0:
            raise NonIntegerGenus(f"component {root} has negative genus", component=root)
        genus_by_component.append(g)

    region_ids = {orbit[0] for orbit in regions} if n else {0}
    fcs = []
    for item in free_circles:
        cid, host = int(item[0]), int(item[1])
        if host not in region_ids:
            raise DanglingFreeCircleHost(f"free circle {cid} hosted in unknown region {host}",
                                         circle=cid, region=host)
        fcs.append((cid, host))
    if outer_region is not None and outer_region not in region_ids:
        raise DanglingFreeCircleHost(f"outer marker names unknown region {outer_region}",
                                     region=outer_region)
    if ambient == PLANE and outer_region is None:
        raise ValueError("plane ambient requires an outer_region marker")

    return Multiloop(
        crossing_count=c,
        arc_involution=tuple(alpha),
        free_circles=tuple(fcs),
        ambient=ambient,
        outer_region=outer_region,
        regions=tuple(regions),
        strand_orbits=tuple(strand_orbits),
        strand_of_dart=tuple(strand_of),
        genus_by_component=tuple(genus_by_component),
        components_of_crossings=comp,
    )


def is_simple(m: Multiloop) -> bool:
    """True iff no crossing has both traversals on the same strand."""
    return all(m.strand_of(4 * x) != m.strand_of(4 * x + 1)
               for x in range(m.crossing_count))


def topology_report(m: Multiloop) -> dict:
    return {
        "strands": m.strand_count,
        "regions": len(m.region_ids),
        "genus": m.genus,
        "crossings": m.crossing_count,
    }
