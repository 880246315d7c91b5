"""Permutations and cycle types.

Points are 1-based in every textual format and in the public point-level API,
and 0-based in the internal image tables; the conversion happens only at the
parse/format boundary.  Products act left to right: ``(a * b)`` applies ``a``
first, so ``x.conj(g) == g.inverse() * x * g`` relabels the cycles of ``x``
by ``g``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import gcd


class PermError(ValueError):
    """Malformed permutation input."""


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths of a permutation, fixed points included.

    ``parts`` is stored non-increasing and sums to ``degree``.  The textual
    form lists the parts ascending, e.g. ``[1;3;3]`` for a permutation of
    degree 7 with two 3-cycles and one fixed point.
    """

    degree: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if sum(self.parts) != self.degree:
            raise ValueError(f"parts {self.parts} do not sum to degree {self.degree}")
        if any(p < 1 for p in self.parts):
            raise ValueError("cycle lengths must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be non-increasing")

    @classmethod
    def of(cls, degree: int, parts) -> CycleType:
        return cls(degree, tuple(sorted(parts, reverse=True)))

    @property
    def is_even(self) -> bool:
        return sum(p - 1 for p in self.parts) % 2 == 0

    @property
    def element_order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.parts, 1)

    def multiplicities(self) -> dict[int, int]:
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def __str__(self) -> str:
        return "[" + ";".join(str(p) for p in sorted(self.parts)) + "]"


class Perm:
    """A bijection of {1..n}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Perm:
        """Build from 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 1 <= pt <= degree:
                    raise PermError(f"point {pt} out of range 1..{degree}")
                if pt in seen:
                    raise PermError(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Perm) -> Perm:
        """Product applying ``self`` first, then ``other``."""
        if self.degree != other.degree:
            raise PermError("degree mismatch")
        o = other.images
        return Perm(o[i] for i in self.images)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, g: Perm) -> Perm:
        """Conjugate ``g^-1 * self * g``; relabels cycles by ``g``."""
        return g.inverse() * self * g

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @property
    def is_even(self) -> bool:
        return (self.degree - len(self.cycles(full=True))) % 2 == 0

    def cycles(self, full: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles as 0-based tuples, each starting at its least point.

        Cycles come sorted by least moved point; ``full`` includes fixed
        points as singletons.
        """
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if full or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return CycleType.of(self.degree, [len(c) for c in self.cycles(full=True)])

    def order(self) -> int:
        return self.cycle_type().element_order

    def cycle_string(self) -> str:
        """Cycle notation on 1-based points, ``()`` for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def one_line(self) -> str:
        """Image list on 1-based points, e.g. ``3 1 2``."""
        return " ".join(str(i + 1) for i in self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __le__(self, other: Perm) -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm({self.cycle_string()}, n={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse cycle notation ``(1 2 3)(4 5)`` or an image list ``3 1 2 5 4``.

    Points are 1-based; unmentioned points stay fixed.  Commas and spaces
    both separate points inside a cycle.
    """
    text = text.strip()
    if not text:
        raise PermError("empty permutation text")
    if text.startswith("("):
        rest = _CYCLE_RE.sub("", text)
        if rest.strip():
            raise PermError(f"unparsable text around {rest.strip()!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            body = body.replace(",", " ").strip()
            if not body:
                continue
            try:
                pts = tuple(int(tok) for tok in body.split())
            except ValueError as exc:
                raise PermError(f"bad cycle {body!r}") from exc
            cycles.append(pts)
        return Perm.from_cycles(cycles, degree)
    try:
        images = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise PermError(f"bad image list {text!r}") from exc
    if len(images) != degree:
        raise PermError(f"image list has {len(images)} entries, expected {degree}")
    if sorted(images) != list(range(1, degree + 1)):
        raise PermError("image list is not a bijection of 1..n")
    return Perm(i - 1 for i in images)


def canonical_cycle_word(x: Perm) -> list[int]:
    """All points of ``x`` in canonical cycle order (0-based).

    Cycles sorted by length descending, ties by least moved point, each
    rotated to start at its least point; fixed points trail as singletons.
    Two permutations of equal cycle type have words of equal length, and the
    positional map word(x) -> word(y) conjugates x to y.
    """
    cycs = x.cycles(full=True)
    cycs.sort(key=lambda c: (-len(c), c[0]))
    return [p for c in cycs for p in c]


def conjugator_between(x: Perm, y: Perm) -> Perm:
    """A deterministic g with ``x.conj(g) == y``; requires equal cycle types."""
    if x.cycle_type() != y.cycle_type():
        raise ValueError("permutations have different cycle types")
    wx = canonical_cycle_word(x)
    wy = canonical_cycle_word(y)
    images = [0] * x.degree
    for a, b in zip(wx, wy):
        images[a] = b
    return Perm(images)


def all_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples, sorted ascending.

    The all-ones partition (identity cycle type) comes first.
    """
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return sorted(out)
