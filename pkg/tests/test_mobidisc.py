import random
from itertools import combinations

import pytest

from pinloop import loopcore, mobidisc
from pinloop.errors import NotSimple
from pinloop.fixtures import (
    WORKED_FIGURE_FORMULA,
    lens2,
    lens2_labels,
    random_three_strand,
    three_rectangles,
    three_rectangles_labels,
)


def brute_force_hitting_sets(universe, clauses):
    hits = set()
    universe = sorted(universe)
    for r in range(len(universe) + 1):
        for combo in combinations(universe, r):
            s = set(combo)
            if all(s & c for c in clauses):
                hits.add(frozenset(s))
    return hits


def test_prune_absorption():
    f = mobidisc.MobidiscFormula(frozenset({1, 2}), frozenset({frozenset({1}), frozenset({1, 2})}))
    assert mobidisc.prune(f).clauses == frozenset({frozenset({1})})
    f = mobidisc.MobidiscFormula(frozenset(range(10)),
                                 frozenset({frozenset({2, 6}), frozenset({1, 2, 6, 9})}))
    assert mobidisc.prune(f).clauses == frozenset({frozenset({2, 6})})


def test_prune_idempotent_and_preserves_hitting_sets():
    rng = random.Random(1)
    for _ in range(25):
        universe = list(range(rng.randint(1, 8)))
        clauses = {frozenset(rng.sample(universe, rng.randint(1, len(universe))))
                   for _ in range(rng.randint(1, 6))}
        f = mobidisc.MobidiscFormula(frozenset(universe), frozenset(clauses))
        p = mobidisc.prune(f)
        assert mobidisc.prune(p) == p
        assert p.is_antichain()
        assert brute_force_hitting_sets(universe, clauses) == \
            brute_force_hitting_sets(universe, p.clauses)


def test_no_crossings_no_bigons():
    m = loopcore.validate({"crossings": 0, "arc_involution": [], "free_circles": [[0, 0]]})
    assert mobidisc.enumerate_embedded_bigons(m) == []
    f = mobidisc.mobidisc_formula(m)
    assert f.clauses == frozenset()
    assert f.universe == frozenset({0})


def test_not_simple_rejected():
    fig8 = loopcore.validate([1, 0, 3, 2])
    with pytest.raises(NotSimple):
        mobidisc.enumerate_embedded_bigons(fig8)


def test_lens2_plane_witnesses():
    arr = lens2(ambient=loopcore.PLANE)
    labels = lens2_labels(arr)
    ws = mobidisc.enumerate_embedded_bigons(arr.multiloop)
    discs = sorted(sorted(w.disc_faces) for w in ws)
    lens, la, lb = labels["lens"], labels["lune_a"], labels["lune_b"]
    # three one-region discs plus the disc bounded by the two outer arcs
    assert sorted([sorted([lens]), sorted([la]), sorted([lb]),
                   sorted([lens, la, lb])]) == discs
    f = mobidisc.mobidisc_formula(arr.multiloop)
    assert f.clauses == frozenset({frozenset({lens}), frozenset({la}), frozenset({lb})})
    assert f.universe == frozenset(arr.multiloop.region_ids)


def test_lens2_sphere_has_both_sides():
    arr = lens2(ambient=loopcore.SPHERE)
    labels = lens2_labels(arr)
    ws = mobidisc.enumerate_embedded_bigons(arr.multiloop)
    # every bigon curve now has two disc sides
    assert len(ws) == 8
    f = mobidisc.mobidisc_formula(arr.multiloop)
    # on the sphere the far side of the outer bigon is the outer face itself,
    # so every region is forced
    assert f.clauses == frozenset({frozenset({labels[k]})
                                   for k in ("lens", "lune_a", "lune_b", "outer")})


def test_worked_figure_formula_matches_caption():
    arr = three_rectangles(ambient=loopcore.PLANE)
    label_to_region = three_rectangles_labels(arr)
    region_to_label = {r: l for l, r in label_to_region.items()}
    f = mobidisc.mobidisc_formula(arr.multiloop)
    got = {frozenset(region_to_label[r] for r in clause) for clause in f.clauses}
    assert got == {frozenset(c) for c in WORKED_FIGURE_FORMULA}


def test_witness_discs_have_euler_characteristic_one():
    arr = three_rectangles(ambient=loopcore.PLANE)
    m = arr.multiloop
    for w in mobidisc.enumerate_embedded_bigons(m):
        assert w.disc_faces
        assert len(w.strands) == 2 and w.strands[0] != w.strands[1]
        x, y = w.marked
        assert x != y


def test_no_monogons_on_random_simple_instances():
    rng = random.Random(5)
    for _ in range(5):
        arr = random_three_strand(rng, max_crossings=10)
        for w in mobidisc.enumerate_embedded_bigons(arr.multiloop):
            assert w.strands[0] != w.strands[1]
            assert len(w.arc_a) >= 1 and len(w.arc_b) >= 1


def test_pruned_clause_hitting_semantics_small():
    # hitting all pruned clauses == hitting every witness disc (<= 12 regions)
    arr = lens2(ambient=loopcore.PLANE)
    m = arr.multiloop
    ws = mobidisc.enumerate_embedded_bigons(m)
    f = mobidisc.mobidisc_formula(m)
    assert brute_force_hitting_sets(m.region_ids, [w.disc_faces for w in ws]) == \
        brute_force_hitting_sets(m.region_ids, f.clauses)


def test_dimacs_export():
    arr = lens2(ambient=loopcore.PLANE)
    text = mobidisc.formula_to_dimacs(mobidisc.mobidisc_formula(arr.multiloop))
    lines = [l for l in text.splitlines() if not l.startswith("c")]
    assert lines[0] == "p pcnf 4 3"
    assert all(l.endswith(" 0") for l in lines[1:])
    assert len(lines) == 4


def test_formula_json_round_trip():
    f = mobidisc.mobidisc_formula(three_rectangles().multiloop)
    again = mobidisc.formula_from_json(mobidisc.formula_to_json(f))
    assert again == f
