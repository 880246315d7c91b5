"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's stabilizer chains, class
tables and lattice machinery: multiplication closure, conjugation-orbit
partitions and subset-closure subgroup enumeration are all computed from
first principles so they can arbitrate.
"""

from __future__ import annotations

import pytest

from covering_lab.perms import Perm
from covering_lab.groups import PermGroup


def brute_closure(gens, degree: int) -> frozenset[Perm]:
    """Multiplication closure of a generator list; no chains involved."""
    identity = Perm.identity(degree)
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def brute_conjugacy_classes(group: PermGroup) -> list[frozenset[Perm]]:
    """Partition of the elements into conjugation orbits under the group."""
    gens = [g for g in group.generators]
    inv = [g.inverse() for g in gens]
    remaining = set(group.elements())
    classes = []
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for g, gi in zip(gens, inv):
                y = gi * x * g
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        classes.append(frozenset(orbit))
        remaining -= orbit
    return classes


def brute_all_subgroups(group: PermGroup) -> set[frozenset[Perm]]:
    """Every subgroup as an element set, by one-element extensions.

    Only sensible for orders up to roughly 120.
    """
    degree = group.degree
    elements = sorted(group.elements())
    trivial = frozenset([Perm.identity(degree)])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        current = frontier.pop()
        for x in elements:
            if x in current:
                continue
            extended = frozenset(brute_closure(list(current) + [x], degree))
            if extended not in found:
                found.add(extended)
                frontier.append(extended)
    return found


def brute_centralizer(group: PermGroup, x: Perm) -> list[Perm]:
    return [g for g in group.elements() if g * x == x * g]


def brute_minimal_blocks_exist(group: PermGroup) -> bool:
    """Primitivity oracle: try every candidate block through point 1."""
    import itertools

    n = group.degree
    points = set(range(1, n + 1))
    gens = group.generators
    for size in range(2, n):
        if n % size != 0:
            continue
        for rest in itertools.combinations(sorted(points - {1}), size - 1):
            block = frozenset((1,) + rest)
            if _is_block(gens, block):
                return True
    return False


def _is_block(gens, block: frozenset[int]) -> bool:
    seen = {block}
    frontier = [block]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            img = frozenset(g.apply(p) for p in cur)
            if img & block and img != block:
                return False
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return True


@pytest.fixture(scope="session")
def corpus():
    from covering_lab.recipes import corpus_small_groups

    return corpus_small_groups()
