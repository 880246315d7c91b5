"""Coverings of a group by conjugates of subgroups.

Two shapes are checked:

* star:  {H^g, K : g in G} - all conjugates of one subgroup plus a single K;
* star2: {H^g, K^g : g in G} - the conjugates of two subgroups.

For star2 over a natural symmetric or alternating ambient the verdict is
decided at class level: the union of the conjugates of H and K is the whole
group exactly when every conjugacy class of the ambient meets H or K.  Split
A_n classes make this strictly finer than matching cycle types.  Star
verdicts are decided element-wise (the single K is not conjugate-closed).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from covering_lab.perms import Perm
from covering_lab.groups import PermGroup, intersect_with_alternating
from covering_lab.conjugacy import (
    ALTERNATING,
    SYMMETRIC,
    Ambient,
    ClassId,
    class_of,
    class_table,
)

ELEMENT_ENUMERATION_BOUND = 10**7
UNION_ORDER_BOUND = 10**6

KIND_GENERIC = "generic"
KIND_STAR = "star"
KIND_STAR2 = "star2"

BY_H = "covered-by-H"
BY_K = "covered-by-K"
UNCOVERED = "uncovered"


class CoveringError(ValueError):
    pass


class NotProperError(CoveringError):
    """A component equals the ambient group: invalid candidate, not failure."""


# ---------------------------------------------------------------------------
# element-level helpers


def subgroup_conjugate_sets(g: PermGroup, h: PermGroup) -> list[frozenset[Perm]]:
    """Element sets of the distinct conjugates of h under g."""
    base = h.element_set()
    seen = {base}
    queue = [base]
    while queue:
        cur = queue.pop()
        for x in g.generators:
            xi = x.inverse()
            img = frozenset(xi * e * x for e in cur)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return sorted(seen, key=lambda s: sorted(s))


def conjugate_union(g: PermGroup, h: PermGroup) -> set[Perm]:
    out: set[Perm] = set()
    for s in subgroup_conjugate_sets(g, h):
        out |= s
    return out


def subgroup_intersection(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.degree != b.degree:
        raise CoveringError("degree mismatch")
    small, big = (a, b) if a.order() <= b.order() else (b, a)
    members = [x for x in small.elements() if x in big]
    return PermGroup.from_elements(members, a.degree)


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    """The set of ambient conjugacy classes met by a subgroup."""

    ambient: Ambient
    hit: frozenset[ClassId]
    witnesses: dict[ClassId, Perm] = field(compare=False, repr=False, default_factory=dict)

    def __le__(self, other: Fingerprint) -> bool:
        return self.hit <= other.hit


def fingerprint(ambient: Ambient, h: PermGroup) -> Fingerprint:
    """Classes met by h, with the lexicographically least witness per class."""
    if not ambient.is_member(h):
        raise CoveringError(f"{h!r} is not a subgroup of {ambient}")
    if h.order() > ELEMENT_ENUMERATION_BOUND:
        raise CoveringError(
            f"subgroup order {h.order()} exceeds enumeration bound "
            f"{ELEMENT_ENUMERATION_BOUND}; no sampling fallback exists"
        )
    witnesses: dict[ClassId, Perm] = {}
    for x in h.elements():
        cid = class_of(ambient, x)
        best = witnesses.get(cid)
        if best is None or x < best:
            witnesses[cid] = x
    return Fingerprint(ambient, frozenset(witnesses), witnesses)


# ---------------------------------------------------------------------------
# reports


@dataclass
class CoverageRow:
    cid: ClassId
    covered_by: str
    witness: Perm | None


@dataclass
class CoveringReport:
    """Outcome of a covering check, with per-class coverage when the ambient
    is a natural symmetric/alternating group."""

    kind: str
    ambient_name: str
    ambient_group: PermGroup
    components: list[tuple[str, PermGroup]]
    verdict: bool
    coverage: list[CoverageRow] | None = None
    uncovered_element: Perm | None = None
    inclusion_ok: bool | None = None
    union_full: bool | None = None
    no_inclusions: bool | None = None
    core_component: PermGroup | None = None
    core_verdict: bool | None = None
    ambient: Ambient | None = None

    def component(self, label: str) -> PermGroup:
        for name, grp in self.components:
            if name == label:
                return grp
        raise KeyError(label)

    def uncovered_classes(self) -> list[ClassId]:
        if self.coverage is None:
            return []
        return [row.cid for row in self.coverage if row.covered_by == UNCOVERED]


def _require_proper(ambient_order: int, *groups: PermGroup) -> None:
    for g in groups:
        if g.order() >= ambient_order:
            raise NotProperError("component is not a proper subgroup of the ambient group")


def _coverage_rows(ambient: Ambient, fp_h: Fingerprint, fp_k: Fingerprint) -> list[CoverageRow]:
    rows = []
    for entry in class_table(ambient):
        cid = entry.cid
        if cid in fp_h.hit:
            rows.append(CoverageRow(cid, BY_H, fp_h.witnesses[cid]))
        elif cid in fp_k.hit:
            rows.append(CoverageRow(cid, BY_K, fp_k.witnesses[cid]))
        else:
            rows.append(CoverageRow(cid, UNCOVERED, None))
    return rows


def check_star_star(ambient: Ambient, h: PermGroup, k: PermGroup) -> CoveringReport:
    """Does {H^g, K^g : g in G} cover the ambient group?  Class-level test."""
    group = ambient.group()
    if not (ambient.is_member(h) and ambient.is_member(k)):
        raise CoveringError("components must be subgroups of the ambient group")
    _require_proper(group.order(), h, k)
    rows = _coverage_rows(ambient, fingerprint(ambient, h), fingerprint(ambient, k))
    verdict = all(row.covered_by != UNCOVERED for row in rows)
    report = CoveringReport(
        kind=KIND_STAR2,
        ambient_name=ambient.name,
        ambient_group=group,
        components=[("H", h), ("K", k)],
        verdict=verdict,
        coverage=rows,
        ambient=ambient,
    )
    if verdict:
        report.inclusion_ok = no_inclusion_automatic(report)
    return report


def _natural_ambient_of(g: PermGroup) -> Ambient | None:
    if g.is_natural_symmetric and g.degree >= 1:
        return Ambient(SYMMETRIC, g.degree)
    if g.is_natural_alternating and g.degree >= 3:
        return Ambient(ALTERNATING, g.degree)
    return None


def check_star(g: PermGroup, h: PermGroup, k: PermGroup) -> CoveringReport:
    """Does {H^g, K : g in G} cover G?  Element-wise test.

    The report carries the normalized family {H^g, K_G} with the normal core
    of K, which must stay a covering whenever the original is one.
    """
    if g.order() > UNION_ORDER_BOUND:
        raise CoveringError("star check enumerates elements; ambient group too large")
    if not (h.is_subgroup_of(g) and k.is_subgroup_of(g)):
        raise CoveringError("components must be subgroups of the ambient group")
    _require_proper(g.order(), h, k)
    union = conjugate_union(g, h)
    kset = k.element_set()
    uncovered = None
    for x in g.elements():
        if x not in union and x not in kset:
            uncovered = x
            break
    verdict = uncovered is None
    report = CoveringReport(
        kind=KIND_STAR,
        ambient_name=repr(g),
        ambient_group=g,
        components=[("H", h), ("K", k)],
        verdict=verdict,
        uncovered_element=uncovered,
    )
    ambient = _natural_ambient_of(g)
    if ambient is not None:
        report.ambient = ambient
        report.ambient_name = ambient.name
        report.coverage = _coverage_rows(ambient, fingerprint(ambient, h), fingerprint(ambient, k))
    if verdict:
        core_members = frozenset.intersection(*subgroup_conjugate_sets(g, k))
        core = PermGroup.from_elements(core_members, g.degree)
        report.core_component = core
        core_set = core.element_set()
        report.core_verdict = all(x in union or x in core_set for x in g.elements())
        report.inclusion_ok = no_inclusion_automatic(report)
    return report


def check_generic_covering(g: PermGroup, subgroups) -> CoveringReport:
    """Union-of-subgroups covering: union equals G and no pairwise inclusions."""
    subgroups = list(subgroups)
    if not subgroups:
        raise CoveringError("a covering needs at least one component")
    for s in subgroups:
        if not s.is_subgroup_of(g):
            raise CoveringError("components must be subgroups of the ambient group")
    _require_proper(g.order(), *subgroups)
    if g.order() > UNION_ORDER_BOUND:
        raise CoveringError("generic check enumerates elements; ambient group too large")
    sets = [s.element_set() for s in subgroups]
    union: set[Perm] = set()
    for s in sets:
        union |= s
    union_full = len(union) == g.order()
    no_incl = True
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a <= b:
                no_incl = False
    return CoveringReport(
        kind=KIND_GENERIC,
        ambient_name=repr(g),
        ambient_group=g,
        components=[(f"H{i+1}", s) for i, s in enumerate(subgroups)],
        verdict=union_full and no_incl,
        union_full=union_full,
        no_inclusions=no_incl,
    )


def no_inclusion_automatic(report: CoveringReport) -> bool:
    """Directly confirm that no member of the covering family contains
    another.  Must hold whenever a star/star2 union is full."""
    if report.kind not in (KIND_STAR, KIND_STAR2) or not report.verdict:
        raise CoveringError("inclusion check applies to verified star/star2 reports")
    g = report.ambient_group
    h = report.component("H")
    k = report.component("K")
    family = list(subgroup_conjugate_sets(g, h))
    if report.kind == KIND_STAR2:
        family += list(subgroup_conjugate_sets(g, k))
    else:
        family.append(k.element_set())
    for i, a in enumerate(family):
        for j, b in enumerate(family):
            if i != j and a != b and a <= b:
                return False
    return True


def intersection_covering(
    ambient: Ambient, h: PermGroup, k: PermGroup, normal: PermGroup
) -> CoveringReport:
    """Restrict a star2 covering of S_n to A_n by intersecting components.

    Requires G = N*H = N*K, i.e. both components contain odd permutations;
    the result must again be a covering when the input is one.  Only the
    alternating normal subgroup is supported.
    """
    if ambient.kind != SYMMETRIC:
        raise CoveringError("intersection restriction starts from a symmetric ambient")
    n = ambient.degree
    if normal.degree != n or not normal.is_natural_alternating:
        raise CoveringError("only the alternating subgroup is supported as N")
    for label, comp in (("H", h), ("K", k)):
        if comp.all_even():
            raise CoveringError(
                f"G = N*{label} fails: component {label} lies inside the normal subgroup"
            )
    return check_star_star(
        Ambient(ALTERNATING, n),
        intersect_with_alternating(h),
        intersect_with_alternating(k),
    )
