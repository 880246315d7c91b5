"""Exhaustive decision of star2-coverability for S_n and A_n.

The reduction: if any pair of proper subgroups covers the ambient group by
conjugates, so does the pair of maximal subgroups above them (fingerprints
only grow upward).  So it suffices to test all unordered pairs drawn from the
maximal subgroup classes, obtained either by full lattice enumeration
(proven complete) or from the classical catalogs (flagged as assumed).  A
negative verdict carries an exhaustion certificate naming an uncovered class
for every pair.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from covering_lab.groups import PermGroup
from covering_lab.conjugacy import Ambient, ClassId, class_table
from covering_lab.covering import CoveringReport, Fingerprint, check_star_star, fingerprint
from covering_lab.catalog import catalog_subgroups, load_catalog_file
from covering_lab.lattice import DEFAULT_MAX_ORDER, LatticeError, enumerate_subgroup_classes

PROVEN = "proven-by-enumeration"
ASSUMED = "assumed-catalog"

SOURCE_LATTICE = "lattice"
SOURCE_CATALOG = "catalog"
SOURCE_AUTO = "auto"

BOTH_TRANSITIVE = "bothTransitive"
EXACTLY_ONE = "exactlyOne"
NEITHER = "neither"


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class ClassListEntry:
    label: str
    group: PermGroup
    provenance: str


@dataclass
class SubgroupClassList:
    """Conjugacy-class representatives of proper subgroups of a group."""

    group: PermGroup
    entries: list[ClassListEntry]
    completeness: str
    total_class_count: int | None = None
    _lattice: object = field(default=None, repr=False)


def all_subgroup_classes(g: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> SubgroupClassList:
    """Every conjugacy class of proper subgroups, by lattice enumeration."""
    lat = enumerate_subgroup_classes(g, max_order)
    entries = [
        ClassListEntry(f"L{c.index}:o{c.order}", lat.class_group(c.index), "lattice-enumerated")
        for c in lat.classes
    ]
    return SubgroupClassList(g, entries, PROVEN, lat.total_class_count, lat)


def maximal_filter(classes: SubgroupClassList) -> SubgroupClassList:
    """Keep the classes maximal among proper nontrivial subgroups."""
    lat = classes._lattice
    if lat is None:
        raise SearchError("maximal filtering requires a lattice-enumerated class list")
    keep = set(lat.maximal_class_indices())
    entries = [e for e, c in zip(classes.entries, lat.classes) if c.index in keep]
    return SubgroupClassList(
        classes.group, entries, classes.completeness, classes.total_class_count, lat
    )


def _catalog_class_list(ambient: Ambient, catalog_path=None) -> SubgroupClassList:
    raw = (
        load_catalog_file(ambient, catalog_path)
        if catalog_path is not None
        else catalog_subgroups(ambient)
    )
    entries = [
        ClassListEntry(e.label, e.group, f"catalog({e.note})" if e.note else "catalog")
        for e in raw
    ]
    return SubgroupClassList(ambient.group(), entries, ASSUMED)


@dataclass(frozen=True)
class PairCertificate:
    """Why one maximal pair fails: the classes neither component meets."""

    h_label: str
    k_label: str
    uncovered: tuple[ClassId, ...]


@dataclass
class SearchVerdict:
    ambient: Ambient
    coverable: bool
    source: str
    completeness: str
    class_labels: list[str]
    witness: tuple[str, str] | None = None
    report: CoveringReport | None = None
    certificate: list[PairCertificate] = field(default_factory=list)


def _entry_sort_key(e: ClassListEntry):
    return (-e.group.order(), e.label)


def _fingerprints(ambient: Ambient, entries, jobs: int) -> dict[str, Fingerprint]:
    def work(entry: ClassListEntry) -> tuple[str, Fingerprint]:
        return entry.label, fingerprint(ambient, entry.group)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return dict(pool.map(work, entries))
    return dict(map(work, entries))


def default_jobs() -> int:
    env = os.environ.get("COVERING_LAB_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def class_list_for(
    ambient: Ambient,
    source: str = SOURCE_AUTO,
    max_order: int = DEFAULT_MAX_ORDER,
    catalog_path=None,
) -> tuple[SubgroupClassList, str]:
    """Maximal candidate classes plus the source actually used."""
    if catalog_path is not None:
        source = SOURCE_CATALOG
    if source == SOURCE_AUTO:
        source = SOURCE_LATTICE if ambient.order() <= max_order else SOURCE_CATALOG
    if source == SOURCE_LATTICE:
        return maximal_filter(all_subgroup_classes(ambient.group(), max_order)), SOURCE_LATTICE
    if source == SOURCE_CATALOG:
        return _catalog_class_list(ambient, catalog_path), SOURCE_CATALOG
    raise SearchError(f"unknown source {source!r}")


def decide_star_star(
    ambient: Ambient,
    source: str = SOURCE_AUTO,
    jobs: int | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
    catalog_path=None,
) -> SearchVerdict:
    """Is the ambient group covered by the conjugates of any two proper
    subgroups?  Tests all unordered pairs of maximal candidates (equal pairs
    included as a built-in sanity check: they must always fail)."""
    jobs = default_jobs() if jobs is None else jobs
    classes, used_source = class_list_for(ambient, source, max_order, catalog_path)
    entries = sorted(
        [e for e in classes.entries if e.group.order() > 1], key=_entry_sort_key
    )
    fps = _fingerprints(ambient, entries, jobs)
    full = set(class_table(ambient).class_ids())
    pairs = []
    for i, eh in enumerate(entries):
        for ek in entries[i:]:
            pairs.append((eh, ek))
    pairs.sort(key=lambda p: (-p[0].group.order() * p[1].group.order(), p[0].label, p[1].label))

    verdict = SearchVerdict(
        ambient,
        False,
        used_source,
        classes.completeness,
        [e.label for e in entries],
    )
    table = class_table(ambient)
    for eh, ek in pairs:
        united = fps[eh.label].hit | fps[ek.label].hit
        if united == full:
            verdict.coverable = True
            verdict.witness = (eh.label, ek.label)
            verdict.report = check_star_star(ambient, eh.group, ek.group)
            return verdict
        uncovered = tuple(c for c in table.class_ids() if c not in united)
        verdict.certificate.append(PairCertificate(eh.label, ek.label, uncovered))
    return verdict


def transitivity_report(h: PermGroup, k: PermGroup) -> str:
    """Classify a witness pair by which components act transitively."""
    ht, kt = h.is_transitive(), k.is_transitive()
    if ht and kt:
        return BOTH_TRANSITIVE
    if ht or kt:
        return EXACTLY_ONE
    return NEITHER
