import pytest

from lpackets.coxeter import cells, enumerate_weyl, kl_table
from lpackets.errors import UnsupportedTypeError
from lpackets.groups import cyclic, symmetric
from lpackets.rootdata import _build_datum
from lpackets.springer import (
    TABLE_VERSION,
    abar_group,
    assemble_product_group,
    family_groups,
    group_structure_label,
    induced_automorphism,
    special_classes,
)

TYPES = ["A1", "A2", "B2", "G2"]


def test_table_version_is_set():
    assert TABLE_VERSION


@pytest.mark.parametrize("t", TYPES)
def test_duality_is_an_involution(t):
    rows = {r.class_label: r for r in special_classes(t)}
    for r in rows.values():
        assert r.dual_class in rows
        assert rows[r.dual_class].dual_class == r.class_label


@pytest.mark.parametrize("t", TYPES)
def test_duality_reverses_dimension_order(t):
    rows = {r.class_label: r for r in special_classes(t)}
    for a in rows.values():
        for b in rows.values():
            if a.dim < b.dim:
                assert rows[a.dual_class].dim >= rows[b.dual_class].dim


@pytest.mark.parametrize("t", TYPES)
def test_cells_match_special_classes(t):
    part = cells(kl_table(enumerate_weyl(_build_datum(t, None))))
    rows = special_classes(t)
    assert len(part.two_sided_cells) == len(rows)
    ids = {part.cell_id(i) for i in range(len(part.two_sided_cells))}
    assert ids == {r.cell_id for r in rows}


@pytest.mark.parametrize("t", TYPES)
def test_family_group_is_component_group_of_dual(t):
    rows = {r.class_label: r for r in special_classes(t)}
    fams = family_groups(t)
    for r in rows.values():
        assert fams[r.cell_id].group_label == rows[r.dual_class].abar_label


def test_unknown_type_rejected():
    with pytest.raises(UnsupportedTypeError):
        special_classes("E8")
    with pytest.raises(UnsupportedTypeError):
        family_groups("D4")


def test_abar_groups():
    assert abar_group("1").order == 1
    assert abar_group("Z2").order == 2
    assert abar_group("S3").order == 6
    assert abar_group("S3").class_count() == 3


def test_group_structure_labels():
    assert group_structure_label(cyclic(1)) == "1"
    assert group_structure_label(cyclic(2)) == "Z2"
    assert group_structure_label(cyclic(3)) == "Z3"
    assert group_structure_label(symmetric(3)) == "S3"


def test_assemble_product_group():
    g = assemble_product_group(("Z2", "Z2"))
    assert g.order == 4
    assert g.is_abelian()
    assert assemble_product_group(()).order == 1


def test_induced_automorphism_swaps_factors():
    perm = induced_automorphism(("Z2", "Z2"), (1, 0))
    g = assemble_product_group(("Z2", "Z2"))
    assert g.is_automorphism(perm)
    assert sorted(perm) == list(range(4))
    assert perm[1] == 2 and perm[2] == 1


def test_induced_automorphism_rejects_mismatched_factors():
    with pytest.raises(Exception):
        induced_automorphism(("Z2", "S3"), (1, 0))


def test_b2_and_g2_family_content():
    b2 = sorted(r.group_label for r in family_groups("B2").values())
    assert b2 == ["1", "1", "Z2"]
    g2 = sorted(r.group_label for r in family_groups("G2").values())
    assert g2 == ["1", "1", "S3"]
