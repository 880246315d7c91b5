"""Frobenius-Wielandt machinery.

(G, H, N) is a Frobenius-Wielandt triple when 1 != H != G, N is a proper
normal subgroup of H, and H meets each of its conjugates inside N:
H ∩ H^g <= N for every g outside H.  Such a triple has a unique kernel, the
normal subgroup K = G - union of (H - N)^g, with G = HK and H ∩ K = N.

These groups are exactly the groups covered by the conjugates of one proper
subgroup plus a single further subgroup (a star covering): the kernel
provides the covering, and conversely a star covering {H^g, K} forces
(G, H, H ∩ K_G) to be such a triple with kernel the normal core K_G.  Both
directions are implemented as verifiers, not trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from covering_lab.perms import Perm
from covering_lab.groups import PermGroup
from covering_lab.covering import (
    CoveringReport,
    check_star,
    subgroup_conjugate_sets,
    subgroup_intersection,
)
from covering_lab.lattice import DEFAULT_MAX_ORDER, enumerate_subgroup_classes


class FwPreconditionError(ValueError):
    """A (G, H, N) candidate violates the shape requirements."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def normal_core(g: PermGroup, h: PermGroup) -> PermGroup:
    """Largest normal subgroup of g inside h: intersection of all conjugates."""
    if not h.is_subgroup_of(g):
        raise ValueError("h must be a subgroup of g")
    members = frozenset.intersection(*subgroup_conjugate_sets(g, h))
    return PermGroup.from_elements(members, g.degree)


def _coset_reps_outside(g: PermGroup, h: PermGroup) -> list[Perm]:
    """One representative per right coset Hx with x outside H."""
    hset = h.element_set()
    covered = set(hset)
    reps = []
    for x in g.elements():
        if x in covered:
            continue
        reps.append(x)
        covered.update(e * x for e in hset)
    return reps


def _validate_triple(g: PermGroup, h: PermGroup, n: PermGroup) -> None:
    if not h.is_subgroup_of(g):
        raise FwPreconditionError("H is not a subgroup of G")
    if h.is_trivial():
        raise FwPreconditionError("H is trivial")
    if h.order() == g.order():
        raise FwPreconditionError("H equals G")
    if not n.is_subgroup_of(h):
        raise FwPreconditionError("N is not a subgroup of H")
    if n.order() == h.order():
        raise FwPreconditionError("N equals H")
    nset = n.element_set()
    for x in h.generators:
        xi = x.inverse()
        if any(xi * e * x not in nset for e in nset):
            raise FwPreconditionError("N is not normal in H")


def is_fw(g: PermGroup, h: PermGroup, n: PermGroup) -> bool:
    """Does H ∩ H^x <= N hold for every x outside H?

    Checked on one representative per right coset of H, which suffices since
    H ∩ H^x depends only on Hx.
    """
    _validate_triple(g, h, n)
    hset = h.element_set()
    nset = n.element_set()
    for x in _coset_reps_outside(g, h):
        xi = x.inverse()
        for e in hset:
            c = xi * e * x
            if c in hset and c not in nset:
                return False
    return True


@dataclass
class FwWitness:
    """A verified Frobenius-Wielandt triple with its kernel.

    ``checks`` records each verified kernel property; the witness is only
    meaningful when all of them hold.
    """

    group: PermGroup
    complement: PermGroup
    complement_normal: PermGroup
    kernel: PermGroup
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def fw_kernel(g: PermGroup, h: PermGroup, n: PermGroup) -> FwWitness:
    """Compute the kernel as the set-difference G - union of (H - N)^x and
    verify every property it is supposed to have."""
    if not is_fw(g, h, n):
        raise FwPreconditionError("(G, H, N) does not satisfy the intersection condition")
    hset = h.element_set()
    nset = n.element_set()
    stripped = hset - nset
    removed: set[Perm] = set(stripped)
    for x in _coset_reps_outside(g, h):
        xi = x.inverse()
        removed.update(xi * e * x for e in stripped)
    kset = {x for x in g.elements() if x not in removed}
    kernel = PermGroup.from_elements(kset, g.degree)
    checks = {
        "difference_is_subgroup": kernel.order() == len(kset),
        "kernel_normal": all(
            x.inverse() * e * x in kset for x in g.generators for e in kernel.generators
        ),
        "product_is_group": h.order() * kernel.order()
        == g.order() * subgroup_intersection(h, kernel).order(),
        "intersection_is_n": subgroup_intersection(h, kernel).element_set() == n.element_set(),
        "order_formula": kernel.order() * h.order() == g.order() * n.order(),
    }
    return FwWitness(g, h, n, kernel, checks)


def star_covering_from_fw(witness: FwWitness) -> CoveringReport:
    """The covering {H^g, K} supplied by a Frobenius-Wielandt kernel."""
    if not witness.ok:
        raise FwPreconditionError(f"invalid witness: {witness.checks}")
    return check_star(witness.group, witness.complement, witness.kernel)


def _normalizer_order(g: PermGroup, h: PermGroup) -> int:
    return g.order() // len(subgroup_conjugate_sets(g, h))


def fw_from_star_covering(g: PermGroup, h: PermGroup, k: PermGroup) -> FwWitness:
    """Extract the Frobenius-Wielandt structure from a star covering.

    Given a true covering {H^g, K}, the triple (G, H, H ∩ K_G) must satisfy
    the intersection condition with kernel the normal core K_G, and H must be
    self-normalizing; all of this is verified, none assumed.
    """
    report = check_star(g, h, k)
    if not report.verdict:
        raise FwPreconditionError("input is not a star covering")
    core = normal_core(g, k)
    n = subgroup_intersection(h, core)
    witness = fw_kernel(g, h, n)
    witness.checks["kernel_is_core"] = (
        witness.kernel.order() == core.order()
        and witness.kernel.element_set() == core.element_set()
    )
    witness.checks["complement_self_normalizing"] = _normalizer_order(g, h) == h.order()
    return witness


# ---------------------------------------------------------------------------
# exhaustive searches (and the equivalence between them)


@dataclass
class StarSearchResult:
    group: PermGroup
    coverable: bool
    complement: PermGroup | None = None
    companion: PermGroup | None = None
    report: CoveringReport | None = None


def _proper_nontrivial_classes(g: PermGroup, max_order: int) -> list[PermGroup]:
    lat = enumerate_subgroup_classes(g, max_order)
    groups = [lat.class_group(c.index) for c in lat.classes if c.order > 1]
    groups.sort(key=lambda x: (-x.order(), sorted(p.images for p in x.generators)))
    return groups

def is_star_coverable(g: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> StarSearchResult:
    """Search all subgroup-class pairs (H, K) for a star covering."""
    classes = _proper_nontrivial_classes(g, max_order)
    for h in classes:
        for k in classes:
            report = check_star(g, h, k)
            if report.verdict:
                return StarSearchResult(g, True, h, k, report)
    return StarSearchResult(g, False)


def fw_search(g: PermGroup, max_order: int = DEFAULT_MAX_ORDER) -> FwWitness | None:
    """Search pairs (H, N) for a Frobenius-Wielandt triple; independent of
    the covering search."""
    classes = _proper_nontrivial_classes(g, max_order)
    for h in classes:
        sub = enumerate_subgroup_classes(h)
        candidates = [sub.class_group(c.index) for c in sub.classes if c.order < h.order()]
        candidates.sort(key=lambda x: (x.order(), sorted(p.images for p in x.generators)))
        for n in candidates:
            try:
                if is_fw(g, h, n):
                    return fw_kernel(g, h, n)
            except FwPreconditionError:
                continue
    return None
