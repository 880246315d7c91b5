"""Permutation groups via deterministic stabilizer chains, plus the standard
subgroup builders (Young subgroups, wreath products, stabilizers, alternating
intersections, normalizers of cyclic subgroups) and block-system machinery.

The chain is built by the exact (non-randomized) Schreier-Sims procedure with
base points tried in natural order, so orders, membership tests and element
iteration are reproducible bit for bit.
"""

from __future__ import annotations

from math import factorial

from covering_lab.perms import Perm, PermError, conjugator_between


class GroupError(ValueError):
    pass


class _Level:
    __slots__ = ("base", "gens", "orbit")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Perm] = []
        # orbit point -> transversal rep t with base^t == point
        self.orbit: dict[int, Perm] = {base: Perm.identity(degree)}


class StabChain:
    """Base-and-strong-generators structure for a permutation group."""

    def __init__(self, degree: int, gens, forced_base=()):
        self.degree = degree
        self.levels: list[_Level] = []
        for b in forced_base:
            self.levels.append(_Level(b, degree))
        self.extend(gens)

    def base(self) -> list[int]:
        return [lvl.base for lvl in self.levels]

    def _gens_from(self, i: int) -> list[Perm]:
        return [g for lvl in self.levels[i:] for g in lvl.gens]

    def strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Sift g; returns (residue, level index where sifting stopped)."""
        h = g
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            img = h.images[lvl.base]
            if img == lvl.base:
                continue
            rep = lvl.orbit.get(img)
            if rep is None:
                return h, i
            h = h * rep.inverse()
        return h, len(self.levels)

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self.strip(g)
        return residue.is_identity

    def extend(self, gens) -> None:
        queue: list[tuple[int, Perm]] = [(0, g) for g in gens]
        while queue:
            start, g = queue.pop(0)
            if g.is_identity:
                continue
            residue, j = self.strip(g, start)
            if residue.is_identity:
                continue
            if j == len(self.levels):
                self.levels.append(_Level(self._pick_base(residue), self.degree))
            self.levels[j].gens.append(residue)
            # the new strong generator fixes all bases above level j, so the
            # orbits of levels 0..j may grow; rebuild and re-sift their
            # Schreier generators until the fixpoint
            for i in range(j, -1, -1):
                queue.extend((i + 1, s) for s in self._rebuild_orbit(i))

    def _pick_base(self, g: Perm) -> int:
        for p in range(self.degree):
            if g.images[p] != p:
                return p
        raise AssertionError("identity reached base selection")

    def _rebuild_orbit(self, i: int) -> list[Perm]:
        """BFS the level-i basic orbit; returns all its Schreier generators."""
        lvl = self.levels[i]
        gens = self._gens_from(i)
        lvl.orbit = {lvl.base: Perm.identity(self.degree)}
        frontier = [lvl.base]
        while frontier:
            nxt = []
            for p in frontier:
                rep = lvl.orbit[p]
                for g in gens:
                    q = g.images[p]
                    if q not in lvl.orbit:
                        lvl.orbit[q] = rep * g
                        nxt.append(q)
            frontier = nxt
        schreier = []
        for p in sorted(lvl.orbit):
            rep = lvl.orbit[p]
            for g in gens:
                s = rep * g * lvl.orbit[g.images[p]].inverse()
                if not s.is_identity:
                    schreier.append(s)
        return schreier

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def iter_elements(self):
        """Yield all elements in lexicographic order of base images."""

        def walk(i: int, suffix: Perm):
            if i == len(self.levels):
                yield suffix
                return
            lvl = self.levels[i]
            for p in sorted(lvl.orbit, key=lambda q: suffix.images[q]):
                yield from walk(i + 1, lvl.orbit[p] * suffix)

        yield from walk(0, Perm.identity(self.degree))


class PermGroup:
    """Immutable permutation group of fixed degree.

    Iteration yields all elements (use only when the order is small enough);
    ``in`` is an exact membership test through the stabilizer chain.
    """

    __slots__ = ("degree", "generators", "_chain", "_order")

    def __init__(self, degree: int, generators, forced_base=()):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise GroupError(f"generator degree {g.degree} != {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "_chain", StabChain(degree, generators, forced_base))
        object.__setattr__(self, "_order", self._chain.order())

    def __setattr__(self, *a):
        raise AttributeError("PermGroup is immutable")

    @classmethod
    def from_generators(cls, gens, degree: int | None = None) -> PermGroup:
        gens = tuple(gens)
        if degree is None:
            if not gens:
                raise GroupError("degree required for an empty generator list")
            degree = gens[0].degree
        return cls(degree, gens)

    @classmethod
    def from_elements(cls, elements, degree: int) -> PermGroup:
        """Group generated by (typically: equal to) a set of elements."""
        chain = StabChain(degree, [])
        gens = []
        for e in sorted(set(elements)):
            if not chain.contains(e):
                gens.append(e)
                chain.extend([e])
        return cls(degree, gens)

    @property
    def chain(self) -> StabChain:
        return self._chain

    def order(self) -> int:
        return self._order

    def __contains__(self, g: Perm) -> bool:
        return self._chain.contains(g)

    def __iter__(self):
        return self._chain.iter_elements()

    def elements(self):
        return self._chain.iter_elements()

    def element_set(self) -> frozenset[Perm]:
        return frozenset(self._chain.iter_elements())

    def is_trivial(self) -> bool:
        return self._order == 1

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def conjugated(self, g: Perm) -> PermGroup:
        return PermGroup(self.degree, [x.conj(g) for x in self.generators])

    def orbits(self) -> list[frozenset[int]]:
        """Orbit partition of the 1-based points, sorted by least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orb = {start}
            frontier = [start]
            seen[start] = True
            while frontier:
                p = frontier.pop()
                for g in self.generators:
                    q = g.images[p]
                    if q not in orb:
                        orb.add(q)
                        seen[q] = True
                        frontier.append(q)
            out.append(frozenset(p + 1 for p in orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    @property
    def is_natural_symmetric(self) -> bool:
        return self._order == factorial(self.degree)

    @property
    def is_natural_alternating(self) -> bool:
        if self.degree < 2:
            return self._order == 1
        return self._order * 2 == factorial(self.degree) and all(
            g.is_even for g in self.generators
        )

    def all_even(self) -> bool:
        return all(g.is_even for g in self.generators)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self._order})"


# ---------------------------------------------------------------------------
# named groups


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [])


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [Perm.from_cycles([(1, 2)], n)]
    if n >= 3:
        gens.append(Perm.from_cycles([tuple(range(1, n + 1))], n))
    return PermGroup(n, gens)


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    if n == 3:
        return PermGroup(3, [Perm.from_cycles([(1, 2, 3)], 3)])
    gens = [Perm.from_cycles([(1, 2, 3)], n)]
    if n % 2 == 1:
        gens.append(Perm.from_cycles([tuple(range(1, n + 1))], n))
    else:
        gens.append(Perm.from_cycles([tuple(range(2, n + 1))], n))
    return PermGroup(n, gens)


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return trivial_group(1)
    return PermGroup(n, [Perm.from_cycles([tuple(range(1, n + 1))], n)])


def dihedral_group(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on n points (n >= 3)."""
    if n < 3:
        raise GroupError("dihedral degree must be >= 3")
    rot = Perm.from_cycles([tuple(range(1, n + 1))], n)
    refl = Perm([0] + list(range(n - 1, 0, -1)))
    return PermGroup(n, [rot, refl])


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    n = g.degree + h.degree
    gens = [Perm(tuple(x.images) + tuple(range(g.degree, n))) for x in g.generators]
    gens += [
        Perm(tuple(range(g.degree)) + tuple(i + g.degree for i in x.images))
        for x in h.generators
    ]
    return PermGroup(n, gens)


# ---------------------------------------------------------------------------
# subgroup builders


def _cell_gens(points0: list[int], degree: int) -> list[Perm]:
    """Generators of the symmetric group on a sorted 0-based point set."""
    if len(points0) < 2:
        return []
    images = list(range(degree))
    images[points0[0]], images[points0[1]] = points0[1], points0[0]
    gens = [Perm(images)]
    if len(points0) > 2:
        images = list(range(degree))
        for a, b in zip(points0, points0[1:] + points0[:1]):
            images[a] = b
        gens.append(Perm(images))
    return gens


def young_subgroup(cells, degree: int) -> PermGroup:
    """Direct product of symmetric groups on disjoint 1-based point sets.

    Points outside the cells are fixed.
    """
    seen: set[int] = set()
    gens: list[Perm] = []
    for cell in cells:
        pts = sorted(cell)
        for p in pts:
            if not 1 <= p <= degree:
                raise GroupError(f"point {p} out of range 1..{degree}")
            if p in seen:
                raise GroupError(f"cells are not disjoint at point {p}")
            seen.add(p)
        gens.extend(_cell_gens([p - 1 for p in pts], degree))
    return PermGroup(degree, gens)


def point_stabilizer(g: PermGroup, point: int) -> PermGroup:
    """Stabilizer of a 1-based point."""
    if not 1 <= point <= g.degree:
        raise GroupError(f"point {point} out of range")
    chain = StabChain(g.degree, g.generators, forced_base=(point - 1,))
    stab_gens = [x for lvl in chain.levels[1:] for x in lvl.gens]
    return PermGroup(g.degree, PermGroup.from_elements(stab_gens, g.degree).generators)


def setwise_stabilizer(g: PermGroup, points, scan_bound: int = 10**6) -> PermGroup:
    """Stabilizer of a 1-based point set.

    Direct construction inside natural symmetric/alternating groups; a
    bounded element scan elsewhere.
    """
    pts = frozenset(points)
    if not all(1 <= p <= g.degree for p in pts):
        raise GroupError("points out of range")
    rest = frozenset(range(1, g.degree + 1)) - pts
    if g.is_natural_symmetric:
        return young_subgroup([pts, rest], g.degree)
    if g.is_natural_alternating:
        return intersect_with_alternating(young_subgroup([pts, rest], g.degree))
    if g.order() > scan_bound:
        raise GroupError(f"group order {g.order()} exceeds scan bound {scan_bound}")
    pts0 = {p - 1 for p in pts}
    members = [x for x in g if {x.images[p] for p in pts0} == pts0]
    return PermGroup.from_elements(members, g.degree)


def wreath_imprimitive(d: int, m: int) -> PermGroup:
    """S_d wr S_m on d*m points in m consecutive blocks of size d."""
    if d < 1 or m < 1:
        raise GroupError("block size and block count must be positive")
    n = d * m
    gens = _cell_gens(list(range(d)), n)
    if m >= 2:
        # block m-cycle and block transposition, acting positionally
        shift = [0] * n
        for b in range(m):
            for j in range(d):
                shift[b * d + j] = ((b + 1) % m) * d + j
        gens.append(Perm(shift))
        if m > 2:
            swap = list(range(n))
            for j in range(d):
                swap[j], swap[d + j] = d + j, j
            gens.append(Perm(swap))
    return PermGroup(n, gens)


def intersect_with_alternating(h: PermGroup) -> PermGroup:
    """Kernel of the sign character, via Schreier generators; exact."""
    gens = h.generators
    odd = [g for g in gens if not g.is_even]
    if not odd:
        return PermGroup(h.degree, gens)
    g0 = odd[0]
    g0i = g0.inverse()
    new: list[Perm] = []
    for g in gens:
        if g.is_even:
            new.append(g)
            new.append(g0 * g * g0i)
        else:
            new.append(g * g0i)
            new.append(g0 * g)
    return PermGroup.from_elements([x for x in new if not x.is_identity], h.degree)


def centralizer_in_symmetric(sigma: Perm) -> PermGroup:
    """Centralizer of sigma in the full symmetric group of its degree.

    Generated by the cycles of sigma together with positional swaps of
    equal-length cycles; order is the product over lengths l of l^m * m!.
    """
    n = sigma.degree
    cycs = sorted(sigma.cycles(full=True), key=lambda c: (len(c), c[0]))
    gens: list[Perm] = []
    for c in cycs:
        if len(c) > 1:
            images = list(range(n))
            for a, b in zip(c, c[1:] + c[:1]):
                images[a] = b
            gens.append(Perm(images))
    for c1, c2 in zip(cycs, cycs[1:]):
        if len(c1) == len(c2):
            images = list(range(n))
            for a, b in zip(c1, c2):
                images[a], images[b] = b, a
            gens.append(Perm(images))
    return PermGroup(n, gens)


def normalizer_of_cyclic(g: PermGroup, sigma: Perm, scan_bound: int = 10**6) -> PermGroup:
    """Normalizer of <sigma> in g.

    Inside a natural symmetric or alternating group this is assembled from
    the centralizer of sigma plus canonical conjugators onto the coprime
    powers of sigma, so no element enumeration happens.  For any other
    ambient group a full element scan runs, bounded by ``scan_bound``.
    """
    if sigma.degree != g.degree:
        raise GroupError("degree mismatch")
    if sigma not in g:
        raise GroupError("sigma is not an element of the group")
    if g.is_natural_symmetric or g.is_natural_alternating:
        o = sigma.order()
        gens = list(centralizer_in_symmetric(sigma).generators)
        for k in range(2, o):
            if _coprime(k, o):
                gens.append(conjugator_between(sigma, sigma**k))
        full = PermGroup(g.degree, gens)
        if g.is_natural_symmetric:
            return full
        return intersect_with_alternating(full)
    if g.order() > scan_bound:
        raise GroupError(f"group order {g.order()} exceeds scan bound {scan_bound}")
    powers = {sigma**k for k in range(sigma.order())}
    members = [x for x in g if sigma.conj(x) in powers]
    return PermGroup.from_elements(members, g.degree)


def _coprime(a: int, b: int) -> bool:
    while b:
        a, b = b, a % b
    return a == 1


# ---------------------------------------------------------------------------
# blocks and primitivity


class BlockSystem:
    """Partition of {1..n} into equal-size blocks permuted by the group."""

    __slots__ = ("degree", "blocks")

    def __init__(self, degree: int, blocks):
        blocks = tuple(sorted(frozenset(b) for b in blocks))
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise GroupError("blocks must share one size")
        if not 1 < len(blocks[0]) < degree:
            raise GroupError("block size must be strictly between 1 and n")
        covered = sorted(p for b in blocks for p in b)
        if covered != list(range(1, degree + 1)):
            raise GroupError("blocks must partition 1..n")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, *a):
        raise AttributeError("BlockSystem is immutable")

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def __eq__(self, other):
        return isinstance(other, BlockSystem) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return f"BlockSystem[{body}]"


def _minimal_partition_with_pair(gens, n: int, i: int) -> list[int]:
    """Finest G-congruence on 0..n-1 merging 0 with i; returns class labels."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = [(0, i)]
    while pairs:
        a, b = pairs.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        for g in gens:
            pairs.append((g.images[a], g.images[b]))
    return [find(x) for x in range(n)]


def block_systems(g: PermGroup) -> list[BlockSystem]:
    """All minimal nontrivial block systems of a transitive group.

    Runs the standard pair-closure (union-find) from each pair (1, i).
    """
    if not g.is_transitive():
        raise GroupError("block systems require a transitive group")
    n = g.degree
    seen: set[BlockSystem] = set()
    out: list[BlockSystem] = []
    for i in range(1, n):
        labels = _minimal_partition_with_pair(g.generators, n, i)
        cells: dict[int, list[int]] = {}
        for p, lab in enumerate(labels):
            cells.setdefault(lab, []).append(p + 1)
        if len(cells) <= 1:
            continue
        system = BlockSystem(n, cells.values())
        if system not in seen:
            seen.add(system)
            out.append(system)
    return out


def is_primitive(g: PermGroup) -> bool:
    """Transitive with no nontrivial block system; errors when intransitive."""
    if not g.is_transitive():
        raise GroupError("primitivity is defined for transitive groups only")
    if g.degree <= 2:
        return True
    return not block_systems(g)


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors by trial division (group orders only carry
    small primes)."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


PRIMITIVE_BY_CRITERION = "primitive-by-criterion"
INCONCLUSIVE = "inconclusive"


def primitivity_by_prime_divisor(g: PermGroup) -> str:
    """Sufficient primitivity check by a large prime divisor of the order.

    With n0 the least nontrivial divisor of the degree n, a transitive group
    whose order has a prime divisor p > n/n0 must be primitive: a nontrivial
    block has size between n0 and n/n0, and an order-p element would have to
    act trivially on the block system yet move a full p-cycle into one block.
    """
    if not g.is_transitive():
        raise GroupError("criterion applies to transitive groups only")
    n = g.degree
    if n < 2:
        return INCONCLUSIVE
    n0 = min(prime_factors(n))
    if any(p > n // n0 for p in prime_factors(g.order())):
        return PRIMITIVE_BY_CRITERION
    return INCONCLUSIVE
