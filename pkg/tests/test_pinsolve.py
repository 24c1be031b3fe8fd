import random

import pytest
from hypothesis import given, settings, strategies as st

from pinloop import loopcore, mobidisc, pinsolve
from pinloop.errors import ResourceBudgetExceeded, UnknownRegionId
from pinloop.fixtures import lens2, lens2_labels, three_rectangles, three_rectangles_labels
from pinloop.mobidisc import MobidiscFormula


def formula(universe, clauses):
    return MobidiscFormula(frozenset(universe), frozenset(frozenset(c) for c in clauses))


def worked_formula():
    """Worked-figure formula over its printed labels 1..11 (plus outer 0)."""
    from pinloop.fixtures import WORKED_FIGURE_FORMULA
    return formula(range(12), WORKED_FIGURE_FORMULA)


def test_verify_pinning():
    f = worked_formula()
    assert pinsolve.verify_pinning(f, {3, 8, 6, 9, 11})
    assert not pinsolve.verify_pinning(f, set())
    assert pinsolve.verify_pinning(f, set(range(12)))  # the whole region set pins
    assert not pinsolve.verify_pinning(f, {3, 8, 6, 9})
    with pytest.raises(UnknownRegionId):
        pinsolve.verify_pinning(f, {99})


def test_minimal_sets_trivial():
    f = formula({1, 2}, [{1}, {1, 2}])
    assert pinsolve.minimal_pinning_sets(f) == [frozenset({1})]
    empty = formula({1, 2, 3}, [])
    assert pinsolve.minimal_pinning_sets(empty) == [frozenset()]


def test_lens2_unique_minimal_set():
    arr = lens2(ambient=loopcore.PLANE)
    labels = lens2_labels(arr)
    f = mobidisc.mobidisc_formula(arr.multiloop)
    sets = pinsolve.minimal_pinning_sets(f)
    assert sets == [frozenset({labels["lens"], labels["lune_a"], labels["lune_b"]})]


def test_worked_figure_pinning_number_is_5():
    f = worked_formula()
    assert pinsolve.pinning_number(f) == 5
    assert pinsolve.decide(f, 5)
    assert not pinsolve.decide(f, 4)
    assert pinsolve.decide(f, 11)
    assert not pinsolve.decide(f, -1)
    assert pinsolve.verify_pinning(f, {3, 8, 6, 9, 11})
    assert frozenset({3, 8, 6, 9, 11}) in pinsolve.minimal_pinning_sets(f)


def test_empty_formula_decisions():
    f = formula(range(3), [])
    assert pinsolve.pinning_number(f) == 0
    assert pinsolve.decide(f, 0)
    assert not pinsolve.decide(f, -1)


def random_formula(rng, max_regions=8, max_clauses=6):
    universe = list(range(rng.randint(1, max_regions)))
    clauses = [frozenset(rng.sample(universe, rng.randint(1, len(universe))))
               for _ in range(rng.randint(0, max_clauses))]
    return formula(universe, clauses)


def test_three_solvers_agree_randomized():
    rng = random.Random(42)
    for _ in range(60):
        f = random_formula(rng)
        mm = pinsolve.minimal_pinning_sets(f)
        assert mm == pinsolve.berge_minimal_transversals(f) or not f.clauses
        assert mm == pinsolve.naive_minimal_transversals(f)
        assert pinsolve.pinning_number(f) == min((len(s) for s in mm), default=0)


def test_minimal_sets_are_minimal_and_pinning():
    rng = random.Random(7)
    for _ in range(30):
        f = random_formula(rng)
        for s in pinsolve.minimal_pinning_sets(f):
            assert pinsolve.verify_pinning(f, s)
            for r in s:
                assert not pinsolve.verify_pinning(f, s - {r})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_monotonicity_under_union(seed):
    rng = random.Random(seed)
    f = random_formula(rng)
    universe = sorted(f.universe)
    p = {r for r in universe if rng.random() < 0.5}
    q = p | {r for r in universe if rng.random() < 0.5}
    if pinsolve.verify_pinning(f, p):
        assert pinsolve.verify_pinning(f, q)


def test_budget_exceeded():
    # n disjoint 2-clauses have 2^n minimal transversals
    f = formula(range(20), [{2 * i, 2 * i + 1} for i in range(10)])
    with pytest.raises(ResourceBudgetExceeded):
        pinsolve.minimal_pinning_sets(f, budget=100)


def test_hasse_slice_small():
    nodes, edges = pinsolve.ideal_hasse_slice([{1}], depth=3)
    assert nodes == [frozenset({1})]
    assert edges == []
    nodes, edges = pinsolve.ideal_hasse_slice([{1}, {2}], depth=2)
    assert nodes == [frozenset({1}), frozenset({2}), frozenset({1, 2})]
    assert edges == [(0, 2), (1, 2)]


def test_hasse_slice_dot():
    nodes, edges = pinsolve.ideal_hasse_slice([{1}, {2}], depth=2)
    dot = pinsolve.hasse_slice_to_dot(nodes, edges)
    assert dot.startswith("digraph")
    assert "n0 -> n2" in dot


def test_pinning_report_counts():
    f = worked_formula()
    report = pinsolve.pinning_report(f)
    assert report.pinning_number == 5
    assert report.optimal_count == report.counts_by_size[5]
    assert all(pinsolve.verify_pinning(f, s) for s in report.minimal_sets)
