import pytest

from lpackets.groups import (
    cyclic,
    direct_product,
    from_permutations,
    identity_perm,
    product_automorphism,
    semidirect,
    symmetric,
    trivial_group,
)


def test_trivial_and_cyclic():
    e = trivial_group()
    assert e.order == 1 and e.class_count() == 1
    c4 = cyclic(4)
    assert c4.order == 4
    assert c4.is_abelian()
    assert c4.class_count() == 4
    assert c4.element_order(1) == 4
    assert c4.inv(1) == 3


def test_symmetric_group_classes():
    s3 = symmetric(3)
    assert s3.order == 6
    assert s3.class_count() == 3
    sizes = sorted(len(c) for c in s3.conjugacy_classes())
    assert sizes == [1, 2, 3]
    s4 = symmetric(4)
    assert s4.order == 24
    assert s4.class_count() == 5


def test_from_permutations_dihedral():
    rot = (1, 2, 3, 0)
    flip = (3, 2, 1, 0)
    elems = set()
    frontier = [(0, 1, 2, 3)]
    while frontier:
        p = frontier.pop()
        if p in elems:
            continue
        elems.add(p)
        for g in (rot, flip):
            frontier.append(tuple(g[p[i]] for i in range(4)))
    d4 = from_permutations(elems)
    assert d4.order == 8
    assert d4.class_count() == 5


def test_from_permutations_rejects_non_closed():
    with pytest.raises(ValueError):
        from_permutations([(0, 1, 2, 3), (1, 2, 3, 0)])


def test_direct_product():
    g = direct_product(cyclic(2), symmetric(3))
    assert g.order == 12
    assert g.class_count() == 6


def test_semidirect_builds_dihedral():
    c3 = cyclic(3)
    c2 = cyclic(2)
    inv_auto = [c3.inv(x) for x in range(3)]

    def act(v):
        return identity_perm(3) if v == 0 else inv_auto

    s3 = semidirect(c3, c2, act)
    assert s3.order == 6
    assert s3.class_count() == 3
    assert not s3.is_abelian()


def test_subgroup_and_centralizer():
    s3 = symmetric(3)
    transposition = next(x for x in range(6) if s3.element_order(x) == 2)
    cz = s3.subgroup(s3.centralizer(transposition))
    assert cz.order == 2
    assert cz.class_count() == 2


def test_twisted_orbits_identity_twist_is_conjugacy():
    s3 = symmetric(3)
    ident = identity_perm(6)
    orbits = s3.twisted_orbits(ident)
    assert len(orbits) == s3.class_count()


def test_twisted_orbits_nontrivial_twist():
    # Z/2 x Z/2 twisted by the coordinate swap: (0,0) fuses with (1,1)
    # through b = (1,0), and (1,0) fuses with (0,1), so two orbits of two.
    v4 = direct_product(cyclic(2), cyclic(2))
    swap = [0, 2, 1, 3]
    assert v4.is_automorphism(swap)
    orbits = v4.twisted_orbits(swap)
    assert sorted(len(o) for o in orbits) == [2, 2]


def test_twisted_centralizer():
    v4 = direct_product(cyclic(2), cyclic(2))
    swap = [0, 2, 1, 3]
    fixed = v4.twisted_centralizer(0, swap)
    assert len(fixed) == 2


def test_product_automorphism_roundtrip():
    groups = [cyclic(2), cyclic(3), cyclic(2)]
    perm = product_automorphism(groups, (2, 1, 0))
    total = 2 * 3 * 2
    assert sorted(perm) == list(range(total))
    assert all(perm[perm[x]] == x for x in range(total))


def test_is_automorphism_rejects_non_morphism():
    c4 = cyclic(4)
    assert not c4.is_automorphism([0, 2, 1, 3])
