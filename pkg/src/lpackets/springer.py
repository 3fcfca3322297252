"""Curated special-class and family tables for the supported simple types.

Everything is keyed by the Weyl type of a simple factor (A1, A2, B2, G2);
the component groups are taken modulo the center of the ambient group, which
makes every entry isogeny-insensitive within the supported menu, and tori
contribute nothing.  The matching between two-sided cells and special classes
is pinned so that the identity cell carries the trivial class and the longest
cell carries the regular class; for every supported type both extremes have
trivial component group, so counts do not depend on that orientation, only
labels do.

``dim + 2 * a_of_u = number of roots`` holds in every row (a_of_u is the
fiber dimension attached to the class, not to the matched cell).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, UnsupportedTypeError
from .groups import FiniteGroup, cyclic, direct_product, product_automorphism, symmetric, trivial_group

__all__ = [
    "SpecialClassRecord", "FamilyGroupRecord", "special_classes",
    "family_groups", "abar_group", "group_structure_label",
    "assemble_product_group", "induced_automorphism", "TABLE_VERSION",
]

TABLE_VERSION = "1"


@dataclass(frozen=True)
class SpecialClassRecord:
    type_label: str
    class_label: str
    dim: int
    a_of_u: int
    abar_label: str   # "1", "Z2", "S3"
    dual_class: str
    cell_id: str      # id of the matched two-sided cell (canonical word of its least element)


@dataclass(frozen=True)
class FamilyGroupRecord:
    cell_id: str
    group_label: str
    is_exceptional: bool = False


_TABLES: dict[str, tuple[SpecialClassRecord, ...]] = {
    "A1": (
        SpecialClassRecord("A1", "1", 0, 1, "1", "reg", "e"),
        SpecialClassRecord("A1", "reg", 2, 0, "1", "1", "0"),
    ),
    "A2": (
        SpecialClassRecord("A2", "1", 0, 3, "1", "reg", "e"),
        SpecialClassRecord("A2", "[2,1]", 4, 1, "1", "[2,1]", "0"),
        SpecialClassRecord("A2", "reg", 6, 0, "1", "1", "010"),
    ),
    "B2": (
        SpecialClassRecord("B2", "1", 0, 4, "1", "reg", "e"),
        SpecialClassRecord("B2", "subreg", 6, 1, "Z2", "subreg", "0"),
        SpecialClassRecord("B2", "reg", 8, 0, "1", "1", "0101"),
    ),
    "G2": (
        SpecialClassRecord("G2", "1", 0, 6, "1", "reg", "e"),
        SpecialClassRecord("G2", "G2(a1)", 10, 1, "S3", "G2(a1)", "0"),
        SpecialClassRecord("G2", "reg", 12, 0, "1", "1", "010101"),
    ),
}

_NROOTS = {"A1": 2, "A2": 6, "B2": 8, "G2": 12}

for _t, _records in _TABLES.items():
    for _r in _records:
        if _r.dim + 2 * _r.a_of_u != _NROOTS[_t]:
            raise InvariantError(f"bad table row {_r}")
        if not any(_x.class_label == _r.dual_class for _x in _TABLES[_t]):
            raise InvariantError(f"dual class missing for {_r}")


def special_classes(type_label: str) -> tuple[SpecialClassRecord, ...]:
    """Rows for one simple factor, ordered by increasing dimension."""
    try:
        return _TABLES[type_label]
    except KeyError:
        raise UnsupportedTypeError(f"no class table for type {type_label!r}")


def family_groups(type_label: str) -> dict[str, FamilyGroupRecord]:
    """Family group of each two-sided cell, keyed by cell id.

    The family group of a cell equals the component group of the special
    class of the dual type matched to the same cell; all supported types are
    Weyl self-dual, so the table can be read off directly.
    """
    out = {}
    for rec in special_classes(type_label):
        out[rec.cell_id] = FamilyGroupRecord(cell_id=rec.cell_id,
                                             group_label=rec.abar_label)
    return out


_GROUP_CACHE: dict[str, FiniteGroup] = {}


def abar_group(label: str) -> FiniteGroup:
    """Shared FiniteGroup instance for a component-group label."""
    if label not in _GROUP_CACHE:
        if label == "1":
            _GROUP_CACHE[label] = trivial_group()
        elif label == "Z2":
            _GROUP_CACHE[label] = cyclic(2)
        elif label == "Z3":
            _GROUP_CACHE[label] = cyclic(3)
        elif label == "S3":
            _GROUP_CACHE[label] = symmetric(3)
        else:
            raise UnsupportedTypeError(f"unknown component group label {label!r}")
    return _GROUP_CACHE[label]


def group_structure_label(g: FiniteGroup) -> str:
    """Small-order structure name, used in reports and packet descriptions."""
    n = g.order
    if n == 1:
        return "1"
    if n == 2:
        return "Z2"
    if n == 3:
        return "Z3"
    if n == 4:
        return "Z4" if any(g.element_order(x) == 4 for x in range(n)) else "Z2xZ2"
    if n == 6:
        return "Z6" if g.is_abelian() else "S3"
    if n == 8 and g.is_abelian():
        orders = sorted(g.element_order(x) for x in range(n))
        if orders.count(2) == 3 and 4 in orders:
            return "Z4xZ2"
        if max(orders) == 8:
            return "Z8"
        return "Z2^3"
    if n == 12 and not g.is_abelian():
        return "G12"
    return f"{'ab' if g.is_abelian() else 'nonab'}{n}"


def assemble_product_group(abar_labels) -> FiniteGroup:
    """Direct product of the factor component groups ('1' factors included)."""
    if not abar_labels:
        return trivial_group()
    acc = abar_group(abar_labels[0])
    for lab in abar_labels[1:]:
        acc = direct_product(acc, abar_group(lab))
    return acc


def induced_automorphism(abar_labels, factor_perm) -> list[int]:
    """Index permutation of the product group that moves factor i to slot
    factor_perm[i].

    Diagram automorphisms inside a factor act trivially on every tabulated
    component group, so a factor permutation is the entire action.
    """
    k = len(abar_labels)
    if sorted(factor_perm) != list(range(k)):
        raise InvariantError("factor permutation is not a permutation")
    for i in range(k):
        if abar_labels[i] != abar_labels[factor_perm[i]]:
            raise InvariantError("factor permutation between different component groups")
    if not abar_labels:
        return [0]
    return product_automorphism([abar_group(l) for l in abar_labels], list(factor_perm))
