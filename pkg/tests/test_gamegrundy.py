import random

import pytest

from pinloop import gamegrundy, pinsolve
from pinloop.errors import ResourceBudgetExceeded, StateNotPinning
from pinloop.mobidisc import MobidiscFormula


def formula(universe, clauses):
    return MobidiscFormula(frozenset(universe), frozenset(frozenset(c) for c in clauses))


def test_empty_formula_parity_law():
    for r in range(1, 13):
        rep = gamegrundy.grundy(formula(range(r), []))
        assert rep.grundy == r % 2
        assert rep.first_player_wins == (r % 2 == 1)


def test_single_forced_region_is_a_loss():
    rep = gamegrundy.grundy(formula({1}, [{1}]))
    assert rep.grundy == 0
    assert not rep.first_player_wins
    assert rep.optimal_move is None
    assert gamegrundy.legal_moves(formula({1}, [{1}]), {1}) == []


def test_legal_moves():
    f = formula(range(4), [{0, 1}])
    moves = gamegrundy.legal_moves(f, {0, 1, 2})
    assert moves == [frozenset({1, 2}), frozenset({0, 2}), frozenset({0, 1})]
    with pytest.raises(StateNotPinning):
        gamegrundy.legal_moves(f, {2, 3})


def test_minimal_set_has_no_moves():
    f = formula(range(4), [{0, 1}, {2}])
    for s in pinsolve.minimal_pinning_sets(f):
        assert gamegrundy.legal_moves(f, s) == []


def test_grundy_invariant_under_relabeling():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 7)
        universe = list(range(n))
        clauses = [frozenset(rng.sample(universe, rng.randint(1, n)))
                   for _ in range(rng.randint(0, 4))]
        f = formula(universe, clauses)
        perm = {r: p for r, p in zip(universe, rng.sample(range(100), n))}
        g = formula([perm[r] for r in universe],
                    [{perm[r] for r in c} for c in clauses])
        assert gamegrundy.grundy(f).grundy == gamegrundy.grundy(g).grundy


def test_optimal_move_reaches_zero_position():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 7)
        universe = list(range(n))
        clauses = [frozenset(rng.sample(universe, rng.randint(1, n)))
                   for _ in range(rng.randint(0, 4))]
        f = formula(universe, clauses)
        rep = gamegrundy.grundy(f)
        if rep.first_player_wins:
            assert rep.optimal_move is not None
            child = frozenset(universe) - {rep.optimal_move}
            assert pinsolve.verify_pinning(f, child)
        else:
            assert rep.optimal_move is None


def test_region_budget():
    with pytest.raises(ResourceBudgetExceeded):
        gamegrundy.grundy(formula(range(25), []))
