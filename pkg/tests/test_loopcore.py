import random

import pytest
from hypothesis import given, settings, strategies as st

from pinloop import loopcore
from pinloop.errors import (
    BadTransversalPairing,
    DanglingFreeCircleHost,
    FixedPointInInvolution,
    NotInvolution,
)
from pinloop.fixtures import lens2, three_rectangles

# Two circles crossing at two points, hand-traced:
#   crossing 0 at the top, crossing 1 at the bottom; darts 0..3 / 4..7 CCW.
LENS2_ALPHA = [7, 6, 5, 4, 3, 2, 1, 0]


def lens2_hand():
    return loopcore.validate(LENS2_ALPHA)


def test_lens2_hand_trace():
    m = lens2_hand()
    assert m.strand_count == 2
    assert len(m.region_ids) == 4
    assert m.genus == 0
    # face orbits computed by hand: outer {0,6}, lune {1,5}, lens {2,4}, lune {3,7}
    assert set(m.regions) == {(0, 6), (1, 5), (2, 4), (3, 7)}
    assert loopcore.is_simple(m)


def test_lens2_compiled_matches_hand_trace():
    arr = lens2(ambient=loopcore.SPHERE)
    m = arr.multiloop
    assert m.crossing_count == 2
    assert m.strand_count == 2
    assert len(m.region_ids) == 4
    assert m.genus == 0
    assert loopcore.is_simple(m)
    # orbit length multiset must match the hand trace
    assert sorted(len(o) for o in m.regions) == [2, 2, 2, 2]


def test_empty_map():
    m = loopcore.validate([])
    assert loopcore.topology_report(m) == {"strands": 0, "regions": 1, "genus": 0,
                                           "crossings": 0}


def test_free_circle_in_empty_map():
    m = loopcore.validate({"crossings": 0, "arc_involution": [],
                           "free_circles": [[0, 0]]})
    assert m.strand_count == 1
    assert m.genus == 0
    assert len(m.region_ids) == 1


def test_figure_eight_not_simple():
    m = loopcore.validate([1, 0, 3, 2])
    assert m.strand_count == 1
    assert not loopcore.is_simple(m)
    assert len(m.region_ids) == 3
    assert m.genus == 0


def test_torus_curve_pair_has_genus_one():
    # one crossing, arcs joining adjacent darts the "other" way: (0 3)(1 2)
    m = loopcore.validate([3, 2, 1, 0])
    assert m.genus in (0, 1)
    # the transversal pairing (0 2)(1 3) is rejected
    with pytest.raises(BadTransversalPairing):
        loopcore.validate([2, 3, 0, 1])


def test_validation_errors():
    with pytest.raises(NotInvolution):
        loopcore.validate([1, 2, 3, 0])
    with pytest.raises(NotInvolution):
        loopcore.validate([1, 0, 3])
    with pytest.raises(FixedPointInInvolution):
        loopcore.validate([0, 1, 3, 2])
    with pytest.raises(DanglingFreeCircleHost):
        loopcore.validate({"crossings": 2, "arc_involution": LENS2_ALPHA,
                           "free_circles": [[0, 99]]})


def test_worked_figure_topology():
    m = three_rectangles().multiloop
    report = loopcore.topology_report(m)
    assert report == {"strands": 3, "regions": 12, "genus": 0, "crossings": 10}


def test_serialization_round_trip():
    m = three_rectangles(ambient=loopcore.PLANE).multiloop
    again = loopcore.validate(m.to_json_dict())
    assert again == m
    assert again.regions == m.regions
    assert again.outer_region == m.outer_region


def relabel_crossings(alpha, perm):
    """Rebuild an involution after permuting crossing ids by perm."""
    def move(d):
        return 4 * perm[d // 4] + d % 4
    new = [0] * len(alpha)
    for d, e in enumerate(alpha):
        new[move(d)] = move(e)
    return new


def test_is_simple_invariant_under_crossing_relabeling():
    rng = random.Random(7)
    m = three_rectangles().multiloop
    for _ in range(10):
        perm = list(range(m.crossing_count))
        rng.shuffle(perm)
        m2 = loopcore.validate(relabel_crossings(list(m.arc_involution), perm))
        assert loopcore.is_simple(m2) == loopcore.is_simple(m)
        assert loopcore.topology_report(m2)["regions"] == 12


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10**6))
def test_strands_partition_darts(seed):
    from pinloop.fixtures import random_three_strand
    rng = random.Random(seed)
    m = random_three_strand(rng, max_crossings=8).multiloop
    # every dart belongs to exactly one strand
    ids = {m.strand_of(d) for d in range(m.dart_count)}
    counts = [sum(1 for d in range(m.dart_count) if m.strand_of(d) == i) for i in ids]
    assert sum(counts) == m.dart_count
    # per-component Euler formula
    if len(m.genus_by_component) == 1:
        assert len(m.region_ids) == m.crossing_count + 2 - 2 * m.genus


def test_euler_formula_connected():
    for arr in (lens2(), three_rectangles()):
        m = arr.multiloop
        assert len(m.genus_by_component) == 1
        assert len(m.region_ids) == m.crossing_count + 2 - 2 * m.genus
