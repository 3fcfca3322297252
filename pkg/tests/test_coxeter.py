import pytest

from lpackets.coxeter import (
    cell_action,
    cells,
    enumerate_weyl,
    kl_table,
    poly_eval,
    poly_mul,
    verify_kl_by_inversion,
)
from lpackets.lattice import identity, mat_mul
from lpackets.rootdata import _build_datum

TYPE_ORDERS = {"A1": 2, "A1xA1": 4, "A2": 6, "B2": 8, "G2": 12}
LONGEST_LENGTH = {"A1": 1, "A1xA1": 2, "A2": 3, "B2": 4, "G2": 6}
CELL_COUNTS = {"A1": 2, "A1xA1": 4, "A2": 3, "B2": 3, "G2": 3}


def standalone(t):
    return enumerate_weyl(_build_datum(t, None))


@pytest.mark.parametrize("t", sorted(TYPE_ORDERS))
def test_group_order_and_longest(t):
    cox = standalone(t)
    assert cox.order == TYPE_ORDERS[t]
    assert cox.length[cox.longest] == LONGEST_LENGTH[t]
    assert cox.word_label(0) == "e"


@pytest.mark.parametrize("t", sorted(TYPE_ORDERS))
def test_multiplication_tables_consistent(t):
    cox = standalone(t)
    for i, m in enumerate(cox.elements):
        assert mat_mul(m, cox.elements[cox.inverse[i]]) == identity(len(m))
    for s, gen in enumerate(cox.generators):
        for i, m in enumerate(cox.elements):
            assert cox.elements[cox.right[s][i]] == mat_mul(m, gen)
            assert cox.elements[cox.left[s][i]] == mat_mul(gen, m)


@pytest.mark.parametrize("t", sorted(TYPE_ORDERS))
def test_kl_polynomials_positive_with_degree_bound(t):
    cox = standalone(t)
    kl = kl_table(cox)
    for (x, w), p in kl.polynomials.items():
        assert all(c >= 0 for c in p)
        assert p[0] == 1
        if x == w:
            assert p == (1,)
        else:
            gap = cox.length[w] - cox.length[x]
            assert 2 * (len(p) - 1) <= gap - 1


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_kl_inversion_identity(t):
    assert verify_kl_by_inversion(kl_table(standalone(t)))


@pytest.mark.parametrize("t", ["B2", "G2"])
def test_dihedral_polynomials_and_mu(t):
    # rank-two reflection groups are dihedral: every polynomial is 1 and the
    # mu coefficient marks exactly the covering pairs
    cox = standalone(t)
    kl = kl_table(cox)
    assert all(p == (1,) for p in kl.polynomials.values())
    for (x, w), m in kl.mu.items():
        gap = cox.length[w] - cox.length[x]
        assert m == (1 if gap == 1 else 0)


@pytest.mark.parametrize("t", sorted(CELL_COUNTS))
def test_two_sided_cell_counts(t):
    cox = standalone(t)
    part = cells(kl_table(cox))
    assert len(part.two_sided_cells) == CELL_COUNTS[t]
    covered = sorted(i for cell in part.two_sided_cells for i in cell)
    assert covered == list(range(cox.order))
    assert part.cell_of[0] != part.cell_of[cox.longest]
    for pos in range(len(part.two_sided_cells)):
        members = part.two_sided_cells[pos]
        assert all(part.cell_of[i] == pos for i in members)


def test_cells_refine_left_and_right():
    part = cells(kl_table(standalone("B2")))
    for lc in part.left_cells:
        pos = {part.cell_of[i] for i in lc}
        assert len(pos) == 1


def test_cell_action_identity_fixes_everything():
    part = cells(kl_table(standalone("G2")))
    elem_perm, cell_perm = cell_action(part, identity(2))
    assert list(elem_perm) == list(range(part.cox.order))
    assert list(cell_perm) == list(range(len(part.two_sided_cells)))


def test_cell_action_swap_on_product_type():
    part = cells(kl_table(standalone("A1xA1")))
    swap = ((0, 1), (1, 0))
    _, cell_perm = cell_action(part, swap)
    ids = [part.cell_id(i) for i in range(len(part.two_sided_cells))]
    moved = {ids[i]: ids[cell_perm[i]] for i in range(len(ids))}
    assert moved["e"] == "e"
    assert moved["01"] == "01"
    assert moved["0"] == "1" and moved["1"] == "0"


def test_poly_helpers():
    assert poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert poly_eval((1, 2, 1), 3) == 16
