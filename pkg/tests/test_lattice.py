import numpy as np
import pytest

from covering_lab.perms import parse_perm
from covering_lab.groups import (
    PermGroup,
    alternating_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)
from covering_lab.lattice import (
    GroupTable,
    LatticeError,
    SubgroupLattice,
    enumerate_subgroup_classes,
)

from conftest import brute_all_subgroups


def _q16():
    from covering_lab.recipes import generalized_quaternion

    return generalized_quaternion(16)


def test_group_table_consistency():
    g = symmetric_group(4)
    t = GroupTable(g)
    elems = t.elements
    for i in (0, 3, 17):
        for j in (1, 5, 23):
            assert elems[t.mul[i, j]] == elems[i] * elems[j]
    for i in range(t.size):
        assert (elems[i] * elems[t.inv[i]]).is_identity
    assert elems[t.identity].is_identity


def test_zuppos_are_prime_power_cyclic():
    t = GroupTable(symmetric_group(4))
    # S4 zuppos: C2 (9 of them: 6 transpositions + 3 double), C3 (4), C4 (3)
    sizes = sorted(len(m) for m in t.zuppo_members)
    assert sizes == [2] * 9 + [3] * 4 + [4] * 3


def test_closure_matches_brute():
    g = symmetric_group(4)
    t = GroupTable(g)
    seed = np.array([t.identity], dtype=np.int16)
    a = t.id_of(parse_perm("(1 2 3 4)", 4))
    b = t.id_of(parse_perm("(1 3)", 4))
    ids = t.closure(seed, (a, b))
    assert len(ids) == 8  # D8


@pytest.mark.parametrize(
    "builder,classes,subgroups",
    [
        (lambda: cyclic_group(6), 4, 4),
        (lambda: symmetric_group(4), 11, 30),
        (lambda: alternating_group(5), 9, 59),
        (lambda: symmetric_group(5), 19, 156),
        (lambda: dihedral_group(4), 8, 10),
        # degree 16: regression for the byte-view id encoding
        (lambda: _q16(), 9, 11),
    ],
)
def test_class_counts_against_brute_force(builder, classes, subgroups):
    g = builder()
    lat = enumerate_subgroup_classes(g)
    assert lat.total_class_count == classes
    assert sum(c.orbit_size for c in lat.classes) + 1 == subgroups
    # exact cross-check against subset-closure enumeration (independent oracle)
    brute = brute_all_subgroups(g)
    assert len(brute) == subgroups
    table = lat.table
    brute_ids = {
        tuple(sorted(table.id_of(x) for x in sub)) for sub in brute if len(sub) < g.order()
    }
    lattice_ids = {
        tuple(int(i) for i in member)
        for c in lat.classes
        for member in c.orbit
    }
    assert brute_ids == lattice_ids


def test_frozen_class_counts_s6_a6():
    assert enumerate_subgroup_classes(symmetric_group(6)).total_class_count == 56
    assert enumerate_subgroup_classes(alternating_group(6)).total_class_count == 22


def test_maximal_classes_a5():
    lat = enumerate_subgroup_classes(alternating_group(5))
    orders = sorted(lat.classes[i].order for i in lat.maximal_class_indices())
    assert orders == [6, 10, 12]


def test_maximal_classes_s5():
    lat = enumerate_subgroup_classes(symmetric_group(5))
    orders = sorted(lat.classes[i].order for i in lat.maximal_class_indices())
    assert orders == [12, 20, 24, 60]


def test_maximal_drops_trivial_only_list():
    lat = enumerate_subgroup_classes(cyclic_group(3))
    # proper classes: just the trivial subgroup; nothing is maximal
    assert [c.order for c in lat.classes] == [1]
    assert lat.maximal_class_indices() == []


def test_class_groups_are_subgroups():
    g = symmetric_group(5)
    lat = enumerate_subgroup_classes(g)
    for c in lat.classes[:10]:
        grp = lat.class_group(c.index)
        assert grp.order() == c.order
        assert grp.is_subgroup_of(g)


def test_enumeration_is_deterministic():
    a = SubgroupLattice(GroupTable(symmetric_group(4)))
    b = SubgroupLattice(GroupTable(symmetric_group(4)))
    assert [c.order for c in a.classes] == [c.order for c in b.classes]
    assert all(
        x.rep_ids.tobytes() == y.rep_ids.tobytes() for x, y in zip(a.classes, b.classes)
    )


def test_order_bound_refusal():
    with pytest.raises(LatticeError):
        GroupTable(symmetric_group(8))


def test_conjugacy_dedup_is_exact():
    # classes are pairwise non-conjugate: their sorted-id orbits are disjoint
    lat = enumerate_subgroup_classes(alternating_group(5))
    seen = set()
    for c in lat.classes:
        for member in c.orbit:
            key = member.tobytes()
            assert key not in seen
            seen.add(key)


def test_primitive_with_small_prime_cycle_is_giant():
    # Jordan-style sanity oracle: a primitive subgroup of S_n containing a
    # p-cycle for a prime p <= n-3 must contain A_n; checked over the full
    # S_6 lattice (p in {2, 3}).
    from covering_lab.groups import is_primitive
    from math import factorial

    g = symmetric_group(6)
    lat = enumerate_subgroup_classes(g)
    giants = 0
    for c in lat.classes:
        grp = lat.class_group(c.index)
        if not grp.is_transitive() or not is_primitive(grp):
            continue
        has_small_prime_cycle = any(
            x.cycle_type().parts == (p,) + (1,) * (6 - p)
            for x in grp.elements()
            for p in (2, 3)
        )
        if has_small_prime_cycle:
            assert c.order >= factorial(6) // 2
            giants += 1
    assert giants >= 1  # A6 itself must have been hit
