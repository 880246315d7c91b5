"""The named covering constructions, each one a verified builder.

The gallery holds the explicit positive witnesses for every coverable
symmetric and alternating group: star coverings for S_3, A_4, S_4 and star2
coverings for S_5, S_6 and A_5..A_8 (with the intersection-restricted and
alternative variants).  Running the gallery re-verifies every entry with the
matching checker; it is the regression surface for the positive results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from covering_lab.perms import Perm, parse_perm
from covering_lab.groups import (
    PermGroup,
    alternating_group,
    intersect_with_alternating,
    normalizer_of_cyclic,
    point_stabilizer,
    setwise_stabilizer,
    symmetric_group,
    young_subgroup,
)
from covering_lab.conjugacy import Ambient, alternating, symmetric
from covering_lab.covering import CoveringReport, check_star, check_star_star, intersection_covering


class GalleryError(RuntimeError):
    """A named construction failed to verify."""


# ---------------------------------------------------------------------------
# the degree-8 affine pieces


def affine_map_gf2_3(matrix, shift) -> Perm:
    """The permutation x -> Ax + a of the 8 vectors of GF(2)^3.

    Vectors are numbered 0..7 with the first coordinate least significant,
    and mapped to points 1..8 in that order; matrices act on column vectors.
    """
    images = [0] * 8
    for v in range(8):
        x = [(v >> j) & 1 for j in range(3)]
        w = 0
        for i in range(3):
            val = (sum(matrix[i][j] * x[j] for j in range(3)) + shift[i]) % 2
            w |= val << i
        images[v] = w
    return Perm(images)


def affine_group_gf2_3() -> PermGroup:
    """All 1344 affine transformations of GF(2)^3 as permutations of 8 points.

    Every nontrivial translation is fixed-point-free of type [2;2;2;2] and
    the linear part is simple, so the whole group lies in the even
    permutations.
    """
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    gens = [affine_map_gf2_3(eye, s) for s in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    gens += [
        affine_map_gf2_3([[1, 1, 0], [0, 1, 0], [0, 0, 1]], (0, 0, 0)),
        affine_map_gf2_3([[0, 0, 1], [1, 0, 0], [0, 1, 0]], (0, 0, 0)),
        affine_map_gf2_3([[0, 1, 0], [1, 0, 0], [0, 0, 1]], (0, 0, 0)),
    ]
    return PermGroup(8, gens)


def seven_cycle_normalizer_part() -> PermGroup:
    """<s> : <m^2> where s = (1..7) and m is the lexicographically least
    6-cycle conjugating s to s^3; the order-21 transitive component of the
    A_7 covering."""
    sigma = Perm.from_cycles([tuple(range(1, 8))], 7)
    from covering_lab.perms import conjugator_between

    g0 = conjugator_between(sigma, sigma**3)
    candidates = []
    power = Perm.identity(7)
    for _ in range(7):
        cand = power * g0
        if cand.cycle_type().parts == (6, 1):
            candidates.append(cand)
        power = power * sigma
    mu = min(candidates)
    return PermGroup(7, [sigma, mu * mu])


# ---------------------------------------------------------------------------
# gallery entries


@dataclass(frozen=True)
class NamedConstruction:
    """A labelled covering candidate with its verification procedure."""

    label: str
    kind: str
    ambient_name: str
    summary: str
    check: Callable[[], CoveringReport]
    parts: Callable[[], tuple]

    def verify(self) -> CoveringReport:
        return self.check()


def _star_entry(label, group_name, group, h, k, summary):
    return NamedConstruction(
        label, "star", group_name, summary,
        check=lambda: check_star(group(), h(), k()),
        parts=lambda: (group(), h(), k()),
    )


def _star2_entry(label, ambient: Ambient, h, k, summary):
    return NamedConstruction(
        label, "star2", ambient.name, summary,
        check=lambda: check_star_star(ambient, h(), k()),
        parts=lambda: (ambient, h(), k()),
    )


def _intersection_entry(label, ambient: Ambient, h, k, summary):
    n = ambient.degree
    return NamedConstruction(
        label, "star2", f"A{n}", summary,
        check=lambda: intersection_covering(ambient, h(), k(), alternating_group(n)),
        parts=lambda: (ambient, h(), k()),
    )


def s5_pair_stabilizer() -> PermGroup:
    return setwise_stabilizer(symmetric_group(5), {1, 2})


def s5_cycle_normalizer() -> PermGroup:
    return normalizer_of_cyclic(symmetric_group(5), parse_perm("(1 2 3 4 5)", 5))


def s6_partition_stabilizer() -> PermGroup:
    return PermGroup.from_generators(
        [parse_perm("(1 2 3)", 6), parse_perm("(1 2)", 6), parse_perm("(1 4)(2 5)(3 6)", 6)]
    )


def gallery() -> list[NamedConstruction]:
    """All named constructions; every entry must verify."""
    return [
        _star_entry(
            "star/S3", "S3", lambda: symmetric_group(3),
            lambda: PermGroup.from_generators([parse_perm("(1 2)", 3)]),
            lambda: alternating_group(3),
            "transposition class plus the 3-cycle subgroup covers S3",
        ),
        _star_entry(
            "star/A4", "A4", lambda: alternating_group(4),
            lambda: PermGroup.from_generators([parse_perm("(1 2 3)", 4)]),
            lambda: PermGroup.from_generators(
                [parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)]
            ),
            "3-cycle class plus the Klein subgroup covers A4",
        ),
        _star_entry(
            "star/S4", "S4", lambda: symmetric_group(4),
            lambda: PermGroup.from_generators([parse_perm("(1 2 3 4)", 4), parse_perm("(1 3)", 4)]),
            lambda: alternating_group(4),
            "dihedral class plus A4 covers S4",
        ),
        _star2_entry(
            "star2/S5", symmetric(5),
            s5_pair_stabilizer, s5_cycle_normalizer,
            "pair stabilizer with the 5-cycle normalizer covers S5",
        ),
        _star2_entry(
            "star2/S6", symmetric(6),
            s6_partition_stabilizer,
            lambda: point_stabilizer(symmetric_group(6), 6),
            "3+3 partition stabilizer with a point stabilizer covers S6",
        ),
        _star2_entry(
            "star2/A5", alternating(5),
            lambda: point_stabilizer(alternating_group(5), 5),
            lambda: PermGroup.from_generators([parse_perm("(1 2 3 4 5)", 5)]),
            "point stabilizer with a 5-cycle subgroup covers A5",
        ),
        _intersection_entry(
            "star2/A5-int", symmetric(5),
            s5_pair_stabilizer, s5_cycle_normalizer,
            "the S5 covering restricted to A5 by intersection",
        ),
        _intersection_entry(
            "star2/A6-int", symmetric(6),
            s6_partition_stabilizer,
            lambda: point_stabilizer(symmetric_group(6), 6),
            "the S6 covering restricted to A6 by intersection",
        ),
        _star2_entry(
            "star2/A6-alt", alternating(6),
            lambda: point_stabilizer(alternating_group(6), 1),
            lambda: PermGroup.from_generators(
                [parse_perm("(1 4)(2 3 5 6)", 6), parse_perm("(1 5)(2 4)", 6)]
            ),
            "point stabilizer with a transitive order-24 subgroup covers A6",
        ),
        _star2_entry(
            "star2/A7", alternating(7),
            seven_cycle_normalizer_part,
            lambda: intersect_with_alternating(young_subgroup([{1, 2}, {3, 4, 5, 6, 7}], 7)),
            "7-cycle normalizer with an even pair-times-rest subgroup covers A7",
        ),
        _star2_entry(
            "star2/A8", alternating(8),
            affine_group_gf2_3,
            lambda: intersect_with_alternating(young_subgroup([{1, 2, 3}, {4, 5, 6, 7, 8}], 8)),
            "affine group of GF(2)^3 with an even 3+5 split subgroup covers A8",
        ),
    ]


def run_gallery() -> list[tuple[NamedConstruction, CoveringReport]]:
    """Verify every entry; raise with the uncovered classes on failure."""
    results = []
    failures = []
    for entry in gallery():
        report = entry.verify()
        results.append((entry, report))
        if not report.verdict:
            missing = ", ".join(str(c) for c in report.uncovered_classes()) or "element-level"
            failures.append(f"{entry.label}: uncovered {missing}")
    if failures:
        raise GalleryError("; ".join(failures))
    return results
