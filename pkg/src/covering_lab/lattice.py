"""Exhaustive subgroup-class enumeration for small groups.

The enumeration is breadth-first closure over a dense Cayley table: seed with
the trivial subgroup, then repeatedly extend each class representative by a
cyclic subgroup of prime-power order ("zuppo") not inside it, deduplicating
results up to conjugacy by hashing every conjugate's sorted element-id set.
Every finite group is generated by its prime-power-order elements, so the
walk reaches every subgroup class; prime order alone would not suffice (it
misses C_4 and friends).

Everything here is exact and deterministic: element ids are assigned in
lexicographic order and all work queues are processed in discovery order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from covering_lab.perms import Perm
from covering_lab.groups import PermGroup, prime_factors

DEFAULT_MAX_ORDER = 10080


class LatticeError(ValueError):
    pass


class GroupTable:
    """Dense multiplication table with elements indexed lexicographically."""

    def __init__(self, group: PermGroup, max_order: int = DEFAULT_MAX_ORDER):
        m = group.order()
        if m > max_order:
            raise LatticeError(
                f"group order {m} exceeds the lattice bound {max_order}; "
                "use a catalog instead"
            )
        deg = group.degree
        if deg > 255:
            raise LatticeError("lattice tables support degrees up to 255")
        self.group = group
        self.size = m
        elems = sorted(group.elements())
        self.elements = elems
        # element ids resolved through a collision-free byte view of the
        # image rows (integer packing would overflow beyond degree 15)
        keys = np.array([e.images for e in elems], dtype=np.uint8)
        void_dt = np.dtype((np.void, deg))

        def as_void(a: np.ndarray) -> np.ndarray:
            return np.ascontiguousarray(a).view(void_dt).ravel()

        sorter = np.argsort(as_void(keys))
        sorted_keys = as_void(keys)[sorter]

        def lookup(rows: np.ndarray) -> np.ndarray:
            return sorter[np.searchsorted(sorted_keys, as_void(rows))]

        mul = np.empty((m, m), dtype=np.int16)
        for j in range(m):
            mul[:, j] = lookup(keys[j][keys])
        self.mul = mul
        self.inv = lookup(np.argsort(keys, axis=1).astype(np.uint8)).astype(np.int16)
        self.identity = int(lookup(np.arange(deg, dtype=np.uint8)[None, :])[0])
        self.element_order = np.array([e.order() for e in elems], dtype=np.int32)
        self._group_gen_ids = [self.id_of(g) for g in group.generators]
        self._build_zuppos()

    def id_of(self, p: Perm) -> int:
        import bisect

        i = bisect.bisect_left(self.elements, p)
        if i < self.size and self.elements[i] == p:
            return i
        raise LatticeError("element not in group")

    def conj_ids(self, ids: np.ndarray, g: int) -> np.ndarray:
        """Sorted ids of {g^-1 x g : x in ids}."""
        gi = int(self.inv[g])
        out = self.mul[self.mul[gi, ids], g]
        out.sort()
        return out

    def _build_zuppos(self) -> None:
        m = self.size
        self.elt_zuppo = np.full(m, -1, dtype=np.int32)
        self.zuppo_gen: list[int] = []
        self.zuppo_members: list[np.ndarray] = []
        for x in range(m):
            o = int(self.element_order[x])
            if o == 1 or len(prime_factors(o)) != 1 or self.elt_zuppo[x] >= 0:
                continue
            powers = [self.identity]
            y = x
            while y != self.identity:
                powers.append(y)
                y = int(self.mul[y, x])
            zid = len(self.zuppo_gen)
            for k, y in enumerate(powers):
                if k > 0 and gcd(k, o) == 1:
                    self.elt_zuppo[y] = zid
            self.zuppo_gen.append(x)
            self.zuppo_members.append(np.sort(np.array(powers, dtype=np.int16)))

    def closure(self, seed_ids: np.ndarray, gen_ids) -> np.ndarray:
        """Sorted element ids of the subgroup generated by seeds and gens.

        The seed set must contain the identity and be closed under the seed
        subgroup's own product (any subgroup works); gen_ids must generate it
        together with the new elements.
        """
        mask = np.zeros(self.size, dtype=bool)
        mask[seed_ids] = True
        gens = np.array(sorted(set(int(g) for g in gen_ids)), dtype=np.int64)
        frontier = np.asarray(seed_ids, dtype=np.int64)
        while frontier.size:
            prod = self.mul[np.ix_(frontier, gens)].ravel()
            fresh = prod[~mask[prod]]
            if fresh.size == 0:
                break
            fresh = np.unique(fresh)
            mask[fresh] = True
            frontier = fresh
        return np.nonzero(mask)[0].astype(np.int16)


@dataclass
class LatticeClass:
    """One conjugacy class of subgroups: representative plus full orbit."""

    index: int
    order: int
    rep_ids: np.ndarray
    gen_ids: tuple[int, ...]
    orbit: list[np.ndarray]

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)


class SubgroupLattice:
    """All conjugacy classes of proper subgroups (trivial one included)."""

    def __init__(self, table: GroupTable):
        self.table = table
        self.classes: list[LatticeClass] = []
        self._by_key: dict[bytes, int] = {}
        self._enumerate()

    @property
    def total_class_count(self) -> int:
        """Number of subgroup classes including the whole group."""
        return len(self.classes) + 1

    def class_group(self, idx: int) -> PermGroup:
        cls = self.classes[idx]
        elems = [self.table.elements[int(i)] for i in cls.rep_ids]
        return PermGroup.from_elements(elems, self.table.group.degree)

    # -- enumeration ------------------------------------------------------

    def _register(self, ids: np.ndarray, gen_ids: tuple[int, ...]) -> int | None:
        key = ids.tobytes()
        if key in self._by_key:
            return None
        t = self.table
        orbit = [ids]
        seen = {key}
        qpos = 0
        while qpos < len(orbit):
            cur = orbit[qpos]
            qpos += 1
            for g in t._group_gen_ids:
                img = t.conj_ids(cur, g)
                kb = img.tobytes()
                if kb not in seen:
                    seen.add(kb)
                    orbit.append(img)
        idx = len(self.classes)
        for member in orbit:
            self._by_key[member.tobytes()] = idx
        self.classes.append(LatticeClass(idx, len(ids), ids, gen_ids, orbit))
        return idx

    def _zuppo_orbit_reps(self, gen_ids: tuple[int, ...]) -> list[int]:
        t = self.table
        nz = len(t.zuppo_gen)
        if not gen_ids:
            return list(range(nz))
        zgens = np.array(t.zuppo_gen, dtype=np.int64)
        maps = []
        for g in gen_ids:
            conj = t.mul[t.mul[int(t.inv[g]), zgens], g]
            maps.append(t.elt_zuppo[conj])
        reps = []
        seen = np.zeros(nz, dtype=bool)
        for z in range(nz):
            if seen[z]:
                continue
            reps.append(z)
            stack = [z]
            seen[z] = True
            while stack:
                cur = stack.pop()
                for mp in maps:
                    nxt = int(mp[cur])
                    if not seen[nxt]:
                        seen[nxt] = True
                        stack.append(nxt)
        return reps

    def _enumerate(self) -> None:
        t = self.table
        if t.size == 1:
            return
        trivial = np.array([t.identity], dtype=np.int16)
        self._register(trivial, ())
        queue = [0]
        while queue:
            ci = queue.pop(0)
            cls = self.classes[ci]
            member = np.zeros(t.size, dtype=bool)
            member[cls.rep_ids] = True
            for zid in self._zuppo_orbit_reps(cls.gen_ids):
                zgen = t.zuppo_gen[zid]
                if member[zgen]:
                    continue
                gen_ids = cls.gen_ids + (zgen,)
                ids = t.closure(cls.rep_ids, gen_ids)
                if len(ids) == t.size:
                    continue
                new_idx = self._register(ids, gen_ids)
                if new_idx is not None:
                    queue.append(new_idx)

    # -- queries ----------------------------------------------------------

    def class_of_ids(self, ids: np.ndarray) -> int | None:
        return self._by_key.get(np.sort(np.asarray(ids, dtype=np.int16)).tobytes())

    def contained_in_class(self, i: int, j: int) -> bool:
        """Is some conjugate of class i inside the representative of class j?"""
        ci, cj = self.classes[i], self.classes[j]
        if ci.order >= cj.order or cj.order % ci.order != 0:
            return False
        mask = np.zeros(self.table.size, dtype=bool)
        mask[cj.rep_ids] = True
        mat = np.stack(ci.orbit)
        return bool(mask[mat].all(axis=1).any())

    def maximal_class_indices(self) -> list[int]:
        """Classes maximal among proper nontrivial subgroups."""
        out = []
        for i, ci in enumerate(self.classes):
            if ci.order == 1:
                continue
            if not any(
                self.contained_in_class(i, j)
                for j, cj in enumerate(self.classes)
                if j != i and cj.order > ci.order
            ):
                out.append(i)
        return out


_LATTICE_CACHE: dict[tuple, SubgroupLattice] = {}


def enumerate_subgroup_classes(
    group: PermGroup, max_order: int = DEFAULT_MAX_ORDER
) -> SubgroupLattice:
    key = (group.degree, group.generators)
    got = _LATTICE_CACHE.get(key)
    if got is None:
        got = SubgroupLattice(GroupTable(group, max_order))
        _LATTICE_CACHE[key] = got
    return got
