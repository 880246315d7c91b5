import time

import pytest

from covering_lab.perms import parse_perm
from covering_lab.groups import PermGroup
from covering_lab.conjugacy import PLUS, MINUS, alternating, class_of
from covering_lab.covering import fingerprint
from covering_lab.constructions import (
    affine_group_gf2_3,
    affine_map_gf2_3,
    gallery,
    run_gallery,
    seven_cycle_normalizer_part,
)
from covering_lab.search import EXACTLY_ONE, transitivity_report


def test_gallery_has_eleven_entries():
    entries = gallery()
    assert len(entries) == 11
    assert len({e.label for e in entries}) == 11


def test_gallery_all_verify():
    for entry, report in run_gallery():
        assert report.verdict, entry.label


def test_affine_map_types():
    t1 = affine_map_gf2_3([[1, 1, 0], [0, 1, 0], [0, 0, 1]], (0, 1, 0))
    assert str(t1.cycle_type()) == "[4;4]"
    t2 = affine_map_gf2_3([[1, 0, 0], [0, 0, 1], [0, 1, 1]], (1, 0, 0))
    assert str(t2.cycle_type()) == "[2;6]"


def test_affine_group_order_and_parity():
    g = affine_group_gf2_3()
    assert g.order() == 1344
    assert g.all_even()
    # nontrivial translations are fixed-point-free double-transposition pairs
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for shift in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)):
        assert affine_map_gf2_3(eye, shift).cycle_type().parts == (2, 2, 2, 2)


def test_a7_component_order():
    h = seven_cycle_normalizer_part()
    assert h.order() == 21
    mu2_types = {str(x.cycle_type()) for x in h.elements() if x.order() == 3}
    assert mu2_types == {"[1;3;3]"}


def test_a7_component_covers_both_seven_classes():
    ambient = alternating(7)
    fp = fingerprint(ambient, seven_cycle_normalizer_part())
    splits = {c.split for c in fp.hit if c.parts == (7,)}
    assert splits == {PLUS, MINUS}


def test_a8_companion_covers_both_three_five_classes():
    ambient = alternating(8)
    entry = [e for e in gallery() if e.label == "star2/A8"][0]
    _, _, k = entry.parts()
    fp = fingerprint(ambient, k)
    splits = {c.split for c in fp.hit if c.parts == (5, 3)}
    assert splits == {PLUS, MINUS}
    both = {parse_perm("(1 2 3)(4 5 6 7 8)", 8), parse_perm("(1 3 2)(4 5 6 7 8)", 8)}
    assert all(x in k for x in both)
    assert len({class_of(ambient, x) for x in both}) == 2


def test_high_degree_entries_have_exactly_one_transitive_component():
    for entry in gallery():
        if entry.kind != "star2" or entry.label.endswith("-int"):
            continue
        n = int(entry.ambient_name[1:])
        if n < 7:
            continue
        _, h, k = entry.parts()
        assert transitivity_report(h, k) == EXACTLY_ONE, entry.label


def test_intersection_witness_elements():
    # the odd elements certifying G = N*H = N*K for the restriction entries
    from covering_lab.constructions import s5_pair_stabilizer, s5_cycle_normalizer

    assert parse_perm("(1 2)", 5) in s5_pair_stabilizer()
    assert parse_perm("(2 3 5 4)", 5) in s5_cycle_normalizer()


def test_gallery_runtime_budget():
    t0 = time.perf_counter()
    run_gallery()
    assert time.perf_counter() - t0 < 10.0
