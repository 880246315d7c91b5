"""Group recipes: named aliases, the JSON wire format, and the small-group
corpus used by the equivalence tests.

JSON recipe: ``{"degree": n, "generators": ["(1 2 3)", ...], "label": "..."}``
with generators in cycle or image-list notation on 1-based points.  CLI
arguments accept an alias, inline JSON, or ``@path`` to a recipe file.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from covering_lab.perms import Perm, parse_perm
from covering_lab.groups import (
    PermGroup,
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    symmetric_group,
    trivial_group,
)


class RecipeError(ValueError):
    pass


def group_to_recipe(label: str, g: PermGroup) -> dict:
    return {
        "label": label,
        "degree": g.degree,
        "generators": [p.cycle_string() for p in g.generators],
    }


def group_from_recipe_dict(obj: dict) -> tuple[str, PermGroup]:
    try:
        degree = int(obj["degree"])
        gens = [parse_perm(s, degree) for s in obj.get("generators", [])]
    except (KeyError, TypeError) as exc:
        raise RecipeError(f"bad recipe object: {exc}") from exc
    label = str(obj.get("label", f"group@{degree}"))
    return label, PermGroup(degree, gens)


def special_linear_2_3() -> PermGroup:
    """SL(2,3) on the 8 nonzero vectors of GF(3)^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        images = [0] * 8
        for v, i in index.items():
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3)
            images[i] = index[w]
        return Perm(images)

    return PermGroup(8, [mat_perm([[1, 1], [0, 1]]), mat_perm([[1, 0], [1, 1]])])


def generalized_quaternion(order: int) -> PermGroup:
    """Q_8 or Q_16 by right multiplication on its own elements."""
    if order not in (8, 16):
        raise RecipeError("generalized quaternion supported for orders 8 and 16")
    k = order // 4
    two_k = 2 * k

    def idx(i, j):
        return i % two_k + two_k * j

    ra = [0] * order
    rb = [0] * order
    for i in range(two_k):
        ra[idx(i, 0)] = idx(i + 1, 0)
        ra[idx(i, 1)] = idx(i - 1, 1)
        rb[idx(i, 0)] = idx(i, 1)
        rb[idx(i, 1)] = idx(i + k, 0)
    return PermGroup(order, [Perm(ra), Perm(rb)])


def frobenius_20() -> PermGroup:
    return PermGroup.from_generators([parse_perm("(1 2 3 4 5)", 5), parse_perm("(2 3 5 4)", 5)])


def frobenius_21() -> PermGroup:
    return PermGroup.from_generators([parse_perm("(1 2 3 4 5 6 7)", 7), parse_perm("(2 3 5)(4 7 6)", 7)])


_FIXED_ALIASES = {
    "V4": lambda: PermGroup.from_generators(
        [parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)]
    ),
    "Q8": lambda: generalized_quaternion(8),
    "Q16": lambda: generalized_quaternion(16),
    "F20": frobenius_20,
    "F21": frobenius_21,
    "SL23": special_linear_2_3,
}

_PARAM_ALIAS = re.compile(r"^([SACDT])(\d+)$")


def group_from_alias(name: str) -> tuple[str, PermGroup] | None:
    if name in _FIXED_ALIASES:
        return name, _FIXED_ALIASES[name]()
    m = _PARAM_ALIAS.match(name)
    if not m:
        return None
    kind, k = m.group(1), int(m.group(2))
    if k < 1 or k > 12:
        raise RecipeError(f"alias degree {k} out of range 1..12")
    builders = {
        "S": symmetric_group,
        "A": alternating_group,
        "C": cyclic_group,
        "D": dihedral_group,
        "T": trivial_group,
    }
    return name, builders[kind](k)


def group_from_recipe(text: str) -> tuple[str, PermGroup]:
    """Resolve an alias, inline JSON object, or @file reference."""
    text = text.strip()
    if text.startswith("@"):
        payload = Path(text[1:]).read_text()
        return group_from_recipe_dict(json.loads(payload))
    if text.startswith("{"):
        return group_from_recipe_dict(json.loads(text))
    got = group_from_alias(text)
    if got is None:
        raise RecipeError(
            f"unknown group recipe {text!r}; use an alias (S5, A7, C6, D4, T4, Q8, "
            "F20, ...), inline JSON, or @file"
        )
    return got


def corpus_small_groups() -> list[tuple[str, PermGroup]]:
    """Named permutation groups of order <= 200 for the coverability and
    Frobenius-Wielandt equivalence tests."""
    s3 = symmetric_group(3)
    a4 = alternating_group(4)
    return [
        ("S3", s3),
        ("A4", a4),
        ("S4", symmetric_group(4)),
        ("A5", alternating_group(5)),
        ("C4", cyclic_group(4)),
        ("C6", cyclic_group(6)),
        ("C12", cyclic_group(12)),
        ("C15", cyclic_group(15)),
        ("C2xC2", direct_product(cyclic_group(2), cyclic_group(2))),
        ("C3xC3", direct_product(cyclic_group(3), cyclic_group(3))),
        ("C2xC4", direct_product(cyclic_group(2), cyclic_group(4))),
        ("D4", dihedral_group(4)),
        ("D5", dihedral_group(5)),
        ("D6", dihedral_group(6)),
        ("D7", dihedral_group(7)),
        ("Q8", generalized_quaternion(8)),
        ("Q16", generalized_quaternion(16)),
        ("F20", frobenius_20()),
        ("F21", frobenius_21()),
        ("SL23", special_linear_2_3()),
        ("A4xC2", direct_product(a4, cyclic_group(2))),
        ("S3xC3", direct_product(s3, cyclic_group(3))),
        ("S3xS3", direct_product(s3, s3)),
    ]
