"""Conjugacy classes of S_n and A_n.

An S_n-class of even permutations splits into two A_n-classes exactly when
the cycle type has all parts odd and pairwise distinct (equivalently, the
S_n-centralizer of a representative is contained in A_n).  Split halves are
labelled plus/minus relative to a canonical representative; the labels are a
convention, only the two-class partition is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from covering_lab.perms import CycleType, Perm, conjugator_between
from covering_lab.groups import PermGroup, alternating_group, symmetric_group

SYMMETRIC = "S"
ALTERNATING = "A"

WHOLE = "whole"
PLUS = "plus"
MINUS = "minus"

MAX_TABLE_DEGREE = 16


@dataclass(frozen=True, order=True)
class Ambient:
    """A natural symmetric or alternating group, by kind and degree."""

    kind: str
    degree: int

    def __post_init__(self):
        if self.kind not in (SYMMETRIC, ALTERNATING):
            raise ValueError(f"unknown ambient kind {self.kind!r}")
        if self.degree < 1:
            raise ValueError("degree must be positive")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.degree}"

    def group(self) -> PermGroup:
        return _ambient_group(self)

    def order(self) -> int:
        return self.group().order()

    def table(self) -> ClassTable:
        return class_table(self)

    def is_member(self, g: PermGroup) -> bool:
        """Subgroup test: right degree and, for A_n, all generators even."""
        if g.degree != self.degree:
            return False
        if self.kind == ALTERNATING:
            return g.all_even()
        return True

    def __str__(self) -> str:
        return self.name


def symmetric(n: int) -> Ambient:
    return Ambient(SYMMETRIC, n)


def alternating(n: int) -> Ambient:
    return Ambient(ALTERNATING, n)


_GROUP_CACHE: dict[Ambient, PermGroup] = {}


def _ambient_group(a: Ambient) -> PermGroup:
    g = _GROUP_CACHE.get(a)
    if g is None:
        g = symmetric_group(a.degree) if a.kind == SYMMETRIC else alternating_group(a.degree)
        _GROUP_CACHE[a] = g
    return g


@dataclass(frozen=True, order=True)
class ClassId:
    """Conjugacy class label: ambient, cycle type, and split tag."""

    kind: str
    degree: int
    parts: tuple[int, ...]
    split: str = WHOLE

    @property
    def ctype(self) -> CycleType:
        return CycleType(self.degree, self.parts)

    @property
    def ambient(self) -> Ambient:
        return Ambient(self.kind, self.degree)

    def label(self) -> str:
        tag = {WHOLE: "", PLUS: "+", MINUS: "-"}[self.split]
        return str(self.ctype) + tag

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class ClassEntry:
    cid: ClassId
    representative: Perm
    size: int


class ClassTable:
    """Ordered conjugacy classes of an ambient group, with representatives."""

    def __init__(self, ambient: Ambient, entries):
        self.ambient = ambient
        self.entries: tuple[ClassEntry, ...] = tuple(entries)
        self.index: dict[ClassId, int] = {e.cid: i for i, e in enumerate(self.entries)}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def class_ids(self) -> list[ClassId]:
        return [e.cid for e in self.entries]

    def size_of(self, cid: ClassId) -> int:
        return self.entries[self.index[cid]].size


def splits_in_alternating(t: CycleType) -> bool:
    """Whether the S_n-class of type t splits into two A_n-classes.

    True exactly when all cycle lengths are odd and pairwise distinct.
    Requires an even type.
    """
    if not t.is_even:
        raise ValueError(f"type {t} is odd, not an A_n class")
    return all(p % 2 == 1 for p in t.parts) and len(set(t.parts)) == len(t.parts)


def centralizer_order_in_symmetric(t: CycleType) -> int:
    """Product over distinct lengths l of l^m * m! for multiplicity m."""
    z = 1
    for length, mult in t.multiplicities().items():
        z *= length**mult * factorial(mult)
    return z


def type_representative(t: CycleType) -> Perm:
    """Canonical representative: ascending parts on consecutive points."""
    cycles = []
    start = 1
    for part in sorted(t.parts):
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Perm.from_cycles([c for c in cycles if len(c) > 1], t.degree)


_TABLE_CACHE: dict[Ambient, ClassTable] = {}


def class_table(ambient: Ambient) -> ClassTable:
    """All conjugacy classes in a fixed order (identity first)."""
    cached = _TABLE_CACHE.get(ambient)
    if cached is not None:
        return cached
    n = ambient.degree
    if n > MAX_TABLE_DEGREE:
        raise ValueError(f"class tables capped at degree {MAX_TABLE_DEGREE}")
    from covering_lab.perms import all_partitions

    entries: list[ClassEntry] = []
    for parts in all_partitions(n):
        t = CycleType(n, parts)
        s_size = factorial(n) // centralizer_order_in_symmetric(t)
        rep = type_representative(t)
        if ambient.kind == SYMMETRIC:
            entries.append(ClassEntry(ClassId(SYMMETRIC, n, parts), rep, s_size))
            continue
        if not t.is_even:
            continue
        if splits_in_alternating(t):
            mirror = rep.conj(Perm.from_cycles([(1, 2)], n))
            entries.append(ClassEntry(ClassId(ALTERNATING, n, parts, PLUS), rep, s_size // 2))
            entries.append(ClassEntry(ClassId(ALTERNATING, n, parts, MINUS), mirror, s_size // 2))
        else:
            entries.append(ClassEntry(ClassId(ALTERNATING, n, parts), rep, s_size))
    table = ClassTable(ambient, entries)
    _TABLE_CACHE[ambient] = table
    return table


def class_of(ambient: Ambient, x: Perm) -> ClassId:
    """The class label of x in the ambient group.

    For split types the half is decided by the parity of the canonical
    conjugator carrying x onto the table representative: the representative's
    own class is plus.
    """
    if x.degree != ambient.degree:
        raise ValueError("degree mismatch")
    t = x.cycle_type()
    if ambient.kind == SYMMETRIC:
        return ClassId(SYMMETRIC, x.degree, t.parts)
    if not t.is_even:
        raise ValueError(f"odd permutation {x.cycle_string()} with alternating ambient")
    if not splits_in_alternating(t):
        return ClassId(ALTERNATING, x.degree, t.parts)
    g = conjugator_between(x, type_representative(t))
    return ClassId(ALTERNATING, x.degree, t.parts, PLUS if g.is_even else MINUS)


def class_size(ambient: Ambient, cid: ClassId) -> int:
    table = class_table(ambient)
    if cid not in table.index:
        raise ValueError(f"class {cid} does not belong to {ambient}")
    return table.size_of(cid)
