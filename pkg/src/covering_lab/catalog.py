"""Candidate-maximal subgroup catalogs for S_n and A_n, n <= 10.

Intransitive and imprimitive candidates are generated (Young subgroups,
imprimitive wreath products, and their alternating intersections); primitive
candidates come from the classical lists of maximal subgroups, realized by
explicit affine and projective constructions over small fields.  Catalogs are
deliberately redundant: extra non-maximal entries only add search pairs,
while a missing maximal class would break exhaustiveness.

For an alternating ambient a primitive entry whose normalizer in S_n is even
splits into two A_n-classes, so each primitive entry ships together with its
mirror under conjugation by a transposition.

Completeness for n >= 8 is an assumption inherited from the classical lists
and is flagged as such on every verdict built from a catalog; for n <= 7 the
test suite cross-checks catalogs against full lattice enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from pathlib import Path

from covering_lab.perms import Perm, parse_perm
from covering_lab.groups import (
    GroupError,
    PermGroup,
    intersect_with_alternating,
    normalizer_of_cyclic,
    symmetric_group,
    wreath_imprimitive,
    young_subgroup,
)
from covering_lab.conjugacy import ALTERNATING, SYMMETRIC, Ambient
from covering_lab.constructions import affine_group_gf2_3


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------------------
# small finite fields (just enough for the projective constructions)


class _GF:
    """Finite field on encoded elements 0..q-1 with 0 the zero element."""

    def __init__(self, q: int, char: int, mul_table, add_table):
        self.q = q
        self.char = char
        self._mul = mul_table
        self._add = add_table
        self._inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul_table[x][y] == 1:
                    self._inv[x] = y

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        for b in range(self.q):
            if self._add[a][b] == 0:
                return b
        raise AssertionError

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return self._inv[a]

    def pow(self, a, k):
        r = 1
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def units_generator(self) -> int:
        for g in range(2, self.q):
            seen = set()
            x = 1
            for _ in range(self.q - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise AssertionError("no generator found")


def _gf_prime(p: int) -> _GF:
    mul = [[(a * b) % p for b in range(p)] for a in range(p)]
    add = [[(a + b) % p for b in range(p)] for a in range(p)]
    return _GF(p, p, mul, add)


def _gf8() -> _GF:
    # polynomial basis over GF(2), modulus t^3 + t + 1, elements as bitmasks
    def mulpoly(a, b):
        r = 0
        for i in range(3):
            if (b >> i) & 1:
                r ^= a << i
        for i in (5, 4, 3):
            if (r >> i) & 1:
                r ^= (0b1011) << (i - 3)
        return r

    mul = [[mulpoly(a, b) for b in range(8)] for a in range(8)]
    add = [[a ^ b for b in range(8)] for a in range(8)]
    return _GF(8, 2, mul, add)


def _gf9() -> _GF:
    # elements a + 3b meaning a + b*i with i^2 = -1, over GF(3)
    def mul(x, y):
        a1, b1 = x % 3, x // 3
        a2, b2 = y % 3, y // 3
        return (a1 * a2 + 2 * b1 * b2) % 3 + 3 * ((a1 * b2 + a2 * b1) % 3)

    def add(x, y):
        return (x % 3 + y % 3) % 3 + 3 * ((x // 3 + y // 3) % 3)

    return _GF(9, 3, [[mul(a, b) for b in range(9)] for a in range(9)], [[add(a, b) for b in range(9)] for a in range(9)])


_FIELDS: dict[int, _GF] = {}


def _field(q: int) -> _GF:
    if q not in _FIELDS:
        if q == 8:
            _FIELDS[q] = _gf8()
        elif q == 9:
            _FIELDS[q] = _gf9()
        else:
            _FIELDS[q] = _gf_prime(q)
    return _FIELDS[q]


# ---------------------------------------------------------------------------
# projective and affine permutation constructions
#
# P^1(F_q) has q+1 points: field element e is point e+1, infinity is q+1.


def _moebius_perm(f: _GF, a, b, c, d) -> Perm:
    q = f.q
    inf = q
    images = [0] * (q + 1)
    for x in range(q):
        denom = f.add(f.mul(c, x), d)
        if denom == 0:
            images[x] = inf
        else:
            images[x] = f.mul(f.add(f.mul(a, x), b), f.inv(denom))
    images[inf] = inf if c == 0 else f.mul(a, f.inv(c))
    return Perm(images)


def _frobenius_perm(f: _GF) -> Perm:
    q = f.q
    images = [f.pow(x, f.char) for x in range(q)] + [q]
    return Perm(images)


def _psl2_gens(q: int) -> list[Perm]:
    f = _field(q)
    s = f.units_generator()
    one = 1
    gens = [
        _moebius_perm(f, one, one, 0, one),             # x -> x + 1
        _moebius_perm(f, f.mul(s, s), 0, 0, one),       # x -> s^2 x
        _moebius_perm(f, 0, f.neg(one), one, 0),        # x -> -1/x
    ]
    return gens


def projective_special_linear(q: int) -> PermGroup:
    """PSL(2,q) on the q+1 points of the projective line."""
    return PermGroup(q + 1, _psl2_gens(q))


def projective_general_linear(q: int) -> PermGroup:
    f = _field(q)
    return PermGroup(q + 1, _psl2_gens(q) + [_moebius_perm(f, f.units_generator(), 0, 0, 1)])


def projective_semilinear(q: int) -> PermGroup:
    """PGammaL(2,q): PGL extended by the Frobenius field automorphism."""
    f = _field(q)
    gens = _psl2_gens(q) + [_moebius_perm(f, f.units_generator(), 0, 0, 1), _frobenius_perm(f)]
    return PermGroup(q + 1, gens)


def psl2_8_extended() -> PermGroup:
    """PGammaL(2,8) = PSL(2,8):3 on 9 points."""
    f = _field(8)
    return PermGroup(9, _psl2_gens(8) + [_frobenius_perm(f)])


def mathieu_m10() -> PermGroup:
    """M10 = PSL(2,9).2 on 10 points: extend by x -> s * x^3, s a non-square."""
    f = _field(9)
    s = f.units_generator()
    frob = _frobenius_perm(f)
    scale = _moebius_perm(f, s, 0, 0, 1)
    return PermGroup(10, _psl2_gens(9) + [frob * scale])


def affine_general_linear_2_3() -> PermGroup:
    """AGL(2,3) on the 9 points of the affine plane over GF(3)."""

    def idx(v):
        return 3 * v[0] + v[1]

    def affine_perm(mat, shift):
        images = [0] * 9
        for a in range(3):
            for b in range(3):
                w = (
                    (mat[0][0] * a + mat[0][1] * b + shift[0]) % 3,
                    (mat[1][0] * a + mat[1][1] * b + shift[1]) % 3,
                )
                images[idx((a, b))] = idx(w)
        return Perm(images)

    eye = [[1, 0], [0, 1]]
    gens = [
        affine_perm(eye, (1, 0)),
        affine_perm(eye, (0, 1)),
        affine_perm([[1, 1], [0, 1]], (0, 0)),
        affine_perm([[1, 0], [1, 1]], (0, 0)),
        affine_perm([[2, 0], [0, 1]], (0, 0)),
    ]
    return PermGroup(9, gens)


def frobenius_normalizer(p: int) -> PermGroup:
    """AGL(1,p) = normalizer of a p-cycle in S_p."""
    return normalizer_of_cyclic(symmetric_group(p), Perm.from_cycles([tuple(range(1, p + 1))], p))


def linear_group_3_2() -> PermGroup:
    """GL(3,2) acting on the 7 nonzero vectors of GF(2)^3."""

    def vec_perm(mat):
        images = [0] * 7
        for v in range(1, 8):
            bits = [(v >> i) & 1 for i in range(3)]
            w = 0
            for i in range(3):
                if sum(mat[i][j] * bits[j] for j in range(3)) % 2:
                    w |= 1 << i
            images[v - 1] = w - 1
        return Perm(images)

    gens = [
        vec_perm([[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        vec_perm([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        vec_perm([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
    ]
    return PermGroup(7, gens)


# ---------------------------------------------------------------------------
# the catalogs


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    group: PermGroup
    expected_order: int
    note: str = ""


def _mirror(entry: CatalogEntry) -> CatalogEntry:
    t = Perm.from_cycles([(1, 2)], entry.group.degree)
    return CatalogEntry(
        "mirror:" + entry.label,
        entry.group.conjugated(t),
        entry.expected_order,
        entry.note + " (transposition mirror)",
    )


def _young_entries(n: int):
    for a in range(1, (n + 1) // 2):
        cells = [set(range(1, a + 1)), set(range(a + 1, n + 1))]
        yield (f"S[{a},{n - a}]", young_subgroup(cells, n), factorial(a) * factorial(n - a))


def _wreath_entries(n: int):
    for d in range(2, n):
        if n % d == 0 and n // d >= 2:
            m = n // d
            yield (f"S[{d}wr{m}]", wreath_imprimitive(d, m), factorial(d) ** m * factorial(m))


def _primitive_symmetric(n: int):
    if n == 5:
        yield CatalogEntry("AGL(1,5)", frobenius_normalizer(5), 20, "affine line")
    elif n == 6:
        yield CatalogEntry("PGL(2,5)", projective_general_linear(5), 120, "projective line")
    elif n == 7:
        yield CatalogEntry("AGL(1,7)", frobenius_normalizer(7), 42, "affine line")
    elif n == 8:
        yield CatalogEntry("PGL(2,7)", projective_general_linear(7), 336, "projective line")
    elif n == 9:
        yield CatalogEntry("AGL(2,3)", affine_general_linear_2_3(), 432, "affine plane")
    elif n == 10:
        yield CatalogEntry("PGammaL(2,9)", projective_semilinear(9), 1440, "projective line")


def _primitive_alternating(n: int):
    if n == 5:
        yield CatalogEntry(
            "D10", intersect_with_alternating(frobenius_normalizer(5)), 10, "affine line meet A5"
        )
    elif n == 6:
        yield CatalogEntry("PSL(2,5)", projective_special_linear(5), 60, "projective line")
    elif n == 7:
        yield CatalogEntry("PSL(3,2)", linear_group_3_2(), 168, "nonzero vectors of GF(2)^3")
    elif n == 8:
        yield CatalogEntry("AGL(3,2)", affine_group_gf2_3(), 1344, "affine space")
        yield CatalogEntry("PSL(2,7)@8", projective_special_linear(7), 168, "projective line")
    elif n == 9:
        yield CatalogEntry("PGammaL(2,8)", psl2_8_extended(), 1512, "projective line")
        yield CatalogEntry(
            "ASL-like(2,3)",
            intersect_with_alternating(affine_general_linear_2_3()),
            216,
            "affine plane meet A9",
        )
    elif n == 10:
        yield CatalogEntry("M10", mathieu_m10(), 720, "point-stabilizer extension of PSL(2,9)")


def catalog_subgroups(ambient: Ambient) -> list[CatalogEntry]:
    """Validated candidate-maximal entries for the ambient group.

    Every entry is checked to be a proper subgroup of the stated order; for
    alternating ambients each primitive entry also ships its transposition
    mirror, since such classes may split into two A_n-classes.
    """
    n = ambient.degree
    if not 2 <= n <= 10:
        raise CatalogError(f"catalogs cover degrees 2..10, not {n}")
    entries: list[CatalogEntry] = []
    if ambient.kind == SYMMETRIC:
        from covering_lab.groups import alternating_group

        if n >= 3:
            entries.append(CatalogEntry(f"A{n}", alternating_group(n), factorial(n) // 2))
        for label, grp, order in _young_entries(n):
            entries.append(CatalogEntry(label, grp, order))
        for label, grp, order in _wreath_entries(n):
            entries.append(CatalogEntry(label, grp, order))
        entries.extend(_primitive_symmetric(n))
    else:
        for label, grp, order in _young_entries(n):
            meet = intersect_with_alternating(grp)
            lab = f"A{n - 1}" if label == f"S[1,{n - 1}]" else label + "&A"
            entries.append(CatalogEntry(lab, meet, max(order // 2, 1)))
        for label, grp, order in _wreath_entries(n):
            entries.append(CatalogEntry(label + "&A", intersect_with_alternating(grp), order // 2))
        for prim in _primitive_alternating(n):
            entries.append(prim)
            entries.append(_mirror(prim))
    _validate(ambient, entries)
    return entries


def load_catalog_file(ambient: Ambient, path) -> list[CatalogEntry]:
    """Read a user catalog: a JSON list of
    ``{label, generators, expectedOrder, provenanceNote}`` objects with
    generators on the ambient degree.  Entries are validated like the
    built-in ones; completeness stays the caller's assumption."""
    payload = json.loads(Path(path).read_text())
    if not isinstance(payload, list):
        raise CatalogError("catalog file must hold a JSON list of entries")
    entries = []
    for obj in payload:
        try:
            gens = [parse_perm(s, ambient.degree) for s in obj["generators"]]
            entries.append(
                CatalogEntry(
                    str(obj["label"]),
                    PermGroup(ambient.degree, gens),
                    int(obj["expectedOrder"]),
                    str(obj.get("provenanceNote", "")),
                )
            )
        except (KeyError, TypeError) as exc:
            raise CatalogError(f"bad catalog entry {obj!r}: {exc}") from exc
    _validate(ambient, entries)
    return entries


def _validate(ambient: Ambient, entries: list[CatalogEntry]) -> None:
    order = ambient.order()
    for e in entries:
        if e.group.order() != e.expected_order:
            raise CatalogError(
                f"{ambient} catalog entry {e.label}: order {e.group.order()}, "
                f"expected {e.expected_order}"
            )
        if e.group.order() >= order:
            raise CatalogError(f"{ambient} catalog entry {e.label} is not proper")
        if not ambient.is_member(e.group):
            raise CatalogError(f"{ambient} catalog entry {e.label} is not a subgroup")
