"""Exact pinning computations on mobidisc formulas.

Minimal pinning sets are the minimal transversals of the clause hypergraph.
The enumerator is a subsumption-pruned depth-first search in the style of
MMCS: grow a partial transversal one uncovered clause at a time, keep per-pin
critical clauses so non-minimal branches die early, and use an exclusion set
so each minimal transversal is emitted exactly once.  Berge multiplication
and plain subset enumeration are retained as debug oracles.

``pinning_number`` runs branch and bound with a lower bound from a greedy
packing of pairwise-disjoint clauses, so it works when full enumeration would
be wasteful.  All solvers order choices by region id, making results
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceBudgetExceeded, UnknownRegionId
from .mobidisc import MobidiscFormula, _prune_clauses

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class PinningReport:
    """Summary of the exact pinning computation for one formula."""

    pinning_number: int
    minimal_sets: tuple[frozenset[int], ...]
    counts_by_size: dict[int, int]
    optimal_count: int

    def to_json(self) -> dict:
        return {
            "pinning_number": self.pinning_number,
            "minimal_sets": [sorted(s) for s in self.minimal_sets],
            "counts_by_size": {str(k): v for k, v in sorted(self.counts_by_size.items())},
            "optimal_count": self.optimal_count,
        }


def verify_pinning(f: MobidiscFormula, pins) -> bool:
    """True iff every clause contains a pin.  Pins must be known regions."""
    pins = frozenset(pins)
    if not pins <= f.universe:
        raise UnknownRegionId(f"pins {sorted(pins - f.universe)} not in the region universe",
                              pins=sorted(pins - f.universe))
    return all(clause & pins for clause in f.clauses)


def _masks(f: MobidiscFormula):
    regions = sorted(f.universe)
    index = {r: i for i, r in enumerate(regions)}
    clauses = sorted((sum(1 << index[r] for r in c) for c in _prune_clauses(f.clauses)),
                     key=lambda m: (bin(m).count("1"), m))
    return regions, index, clauses


def minimal_pinning_sets(f: MobidiscFormula, budget: int = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """All inclusion-minimal pinning sets, sorted by (size, contents).

    Raises :class:`ResourceBudgetExceeded` once more than ``budget``
    transversals have been produced.
    """
    regions, _, clauses = _masks(f)
    if not clauses:
        return [frozenset()]
    out: list[int] = []

    def search(chosen: int, excluded: int, crit: dict[int, list[int]], uncovered: list[int]):
        if not uncovered:
            out.append(chosen)
            if len(out) > budget:
                raise ResourceBudgetExceeded(
                    f"more than {budget} minimal pinning sets", budget=budget)
            return
        # branch on the uncovered clause with fewest available pins
        clause = min(uncovered, key=lambda c: (bin(c & ~excluded).count("1"), c))
        avail = clause & ~excluded
        banned = 0
        while avail:
            bit = avail & -avail
            avail ^= bit
            new_crit = {}
            ok = True
            for pin, cl in crit.items():
                remaining = [c for c in cl if not (c & bit)]
                if not remaining:
                    ok = False  # pin loses all its critical clauses: not minimal
                    break
                new_crit[pin] = remaining
            if ok:
                new_crit[bit] = [c for c in uncovered if c & bit]
                search(chosen | bit, excluded | banned, new_crit,
                       [c for c in uncovered if not (c & bit)])
            banned |= bit

    search(0, 0, {}, clauses)
    sets = [frozenset(regions[i] for i in range(len(regions)) if mask >> i & 1)
            for mask in out]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def berge_minimal_transversals(f: MobidiscFormula) -> list[frozenset[int]]:
    """Berge multiplication; exponential, kept as a debug oracle."""
    transversals = [frozenset()]
    for clause in sorted(f.clauses, key=lambda c: (len(c), sorted(c))):
        grown = {t | {r} for t in transversals for r in clause}
        transversals = [t for t in grown
                        if not any(o < t for o in grown)]
    return sorted(set(transversals), key=lambda s: (len(s), sorted(s)))


def naive_minimal_transversals(f: MobidiscFormula) -> list[frozenset[int]]:
    """Subset enumeration oracle; universes beyond 15 regions are refused."""
    regions = sorted(f.universe)
    if len(regions) > 15:
        raise ResourceBudgetExceeded("naive enumeration limited to 15 regions")
    hitting = []
    for r in range(len(regions) + 1):
        for combo in combinations(regions, r):
            s = frozenset(combo)
            if all(clause & s for clause in f.clauses):
                hitting.append(s)
    return sorted((h for h in hitting if not any(o < h for o in hitting)),
                  key=lambda s: (len(s), sorted(s)))


def _greedy_disjoint_packing(clauses: list[int]) -> int:
    used = 0
    count = 0
    for c in clauses:  # already sorted by size: pack small clauses first
        if not (c & used):
            used |= c
            count += 1
    return count


def pinning_number(f: MobidiscFormula) -> int:
    """Minimum pinning-set size; 0 for an empty clause family."""
    regions, _, clauses = _masks(f)
    if not clauses:
        return 0

    # greedy upper bound: repeatedly pin the region hitting most clauses
    remaining = list(clauses)
    upper = 0
    while remaining:
        best_bit, best_hit = None, -1
        for i in range(len(regions)):
            bit = 1 << i
            hit = sum(1 for c in remaining if c & bit)
            if hit > best_hit:
                best_bit, best_hit = bit, hit
        remaining = [c for c in remaining if not (c & best_bit)]
        upper += 1

    best = upper

    def bound(uncovered: list[int]) -> int:
        return _greedy_disjoint_packing(uncovered)

    def search(size: int, uncovered: list[int]):
        nonlocal best
        if not uncovered:
            best = min(best, size)
            return
        if size + bound(uncovered) >= best:
            return
        clause = min(uncovered, key=lambda c: (bin(c).count("1"), c))
        avail = clause
        while avail:
            bit = avail & -avail
            avail ^= bit
            search(size + 1, [c for c in uncovered if not (c & bit)])

    search(0, clauses)
    return best


def decide(f: MobidiscFormula, k: int) -> bool:
    """Is the pinning number at most k?"""
    if k < 0:
        return False
    return pinning_number(f) <= k


def pinning_report(f: MobidiscFormula, budget: int = DEFAULT_BUDGET) -> PinningReport:
    sets = minimal_pinning_sets(f, budget=budget)
    counts: dict[int, int] = {}
    for s in sets:
        counts[len(s)] = counts.get(len(s), 0) + 1
    number = min((len(s) for s in sets), default=0)
    return PinningReport(
        pinning_number=number,
        minimal_sets=tuple(sets),
        counts_by_size=counts,
        optimal_count=counts.get(number, 0),
    )


# -- pinning ideal slice --------------------------------------------------------

def ideal_hasse_slice(minimal_sets, depth: int, budget: int = DEFAULT_BUDGET):
    """Hasse diagram of the unions of at most ``depth`` minimal sets.

    Returns (nodes, edges): nodes sorted by (size, contents), edges as index
    pairs (i, j) meaning nodes[j] covers nodes[i] within the node set.
    """
    minimal_sets = sorted({frozenset(s) for s in minimal_sets},
                          key=lambda s: (len(s), sorted(s)))
    nodes: set[frozenset[int]] = set()
    for r in range(1, max(depth, 0) + 1):
        for combo in combinations(minimal_sets, r):
            u = frozenset().union(*combo)
            nodes.add(u)
            if len(nodes) > budget:
                raise ResourceBudgetExceeded(f"more than {budget} slice nodes",
                                             budget=budget)
    ordered = sorted(nodes, key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(ordered)}
    edges = []
    for a in ordered:
        for b in ordered:
            if a < b and not any(a < c < b for c in ordered):
                edges.append((index[a], index[b]))
    return ordered, sorted(edges)


def hasse_slice_to_dot(nodes, edges) -> str:
    lines = ["digraph pinning_ideal {", "  rankdir=BT;"]
    for i, s in enumerate(nodes):
        label = "{" + ",".join(str(r) for r in sorted(s)) + "}"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
