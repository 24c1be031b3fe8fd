"""Sprague-Grundy analysis of the unpinning avoidance game.

Players alternately remove one pin, always leaving a pinning set; the first
player with no legal move loses (normal play).  States are pinning sets, so
the game tree is the pinning ideal walked downward from the all-regions
state.  Values are memoized on bitmasks over a canonical region ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceBudgetExceeded, StateNotPinning
from .mobidisc import MobidiscFormula
from .pinsolve import verify_pinning

DEFAULT_REGION_BOUND = 20


def legal_moves(f: MobidiscFormula, pins) -> list[frozenset[int]]:
    """All states P minus one pin that are still pinning, ordered by the
    removed region id."""
    pins = frozenset(pins)
    if not verify_pinning(f, pins):
        raise StateNotPinning("game states must be pinning sets", pins=sorted(pins))
    moves = []
    for r in sorted(pins):
        shrunk = pins - {r}
        if all(clause & shrunk for clause in f.clauses):
            moves.append(shrunk)
    return moves


@dataclass(frozen=True)
class GrundyReport:
    grundy: int
    first_player_wins: bool
    optimal_move: int | None  # region whose removal reaches a zero position

    def to_json(self) -> dict:
        return {"grundy": self.grundy,
                "winner": 1 if self.first_player_wins else 2,
                "optimal_move": self.optimal_move}


def grundy(f: MobidiscFormula, max_regions: int = DEFAULT_REGION_BOUND) -> GrundyReport:
    """Grundy value of the initial all-regions state.

    Zero means the second player wins; otherwise ``optimal_move`` is the
    smallest region whose removal reaches a zero position.
    """
    regions = sorted(f.universe)
    if len(regions) > max_regions:
        raise ResourceBudgetExceeded(
            f"game analysis limited to {max_regions} regions", regions=len(regions))
    index = {r: i for i, r in enumerate(regions)}
    clause_masks = [sum(1 << index[r] for r in c) for c in f.clauses]
    full = (1 << len(regions)) - 1
    if not all(c & full for c in clause_masks):
        # an empty clause admits no pinning set at all
        raise StateNotPinning("formula contains an empty clause")
    memo: dict[int, int] = {}

    def value(state: int) -> int:
        cached = memo.get(state)
        if cached is not None:
            return cached
        seen = set()
        pins = state
        while pins:
            bit = pins & -pins
            pins ^= bit
            child = state ^ bit
            if all(c & child for c in clause_masks):
                seen.add(value(child))
        g = 0
        while g in seen:
            g += 1
        memo[state] = g
        return g

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, len(regions) + 100))
    try:
        g = value(full)
    finally:
        sys.setrecursionlimit(old)

    move = None
    if g != 0:
        for r in regions:
            child = full ^ (1 << index[r])
            if all(c & child for c in clause_masks) and value(child) == 0:
                move = r
                break
    return GrundyReport(grundy=g, first_player_wins=g != 0, optimal_move=move)
