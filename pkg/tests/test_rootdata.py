from fractions import Fraction

import pytest

from lpackets.errors import ConfigError, UnsupportedTypeError
from lpackets.lattice import identity
from lpackets.rootdata import (
    NAMED_SPECS,
    centralizer_subdatum,
    dual_datum,
    factor_permutation,
    parse_group_spec,
    point_label,
    weyl_closure,
    whittaker_torsor_size,
    x_action,
)


def spec_of(name, q):
    return parse_group_spec(name, q=q)


@pytest.mark.parametrize("name", sorted(NAMED_SPECS))
def test_named_specs_parse(name):
    q = 5 if name in ("sp4", "g2") else 3
    spec = spec_of(name, q)
    assert spec.q == q
    assert spec.name == name


def test_parse_rejects_bad_input():
    with pytest.raises(ConfigError):
        parse_group_spec("so17", q=3)
    with pytest.raises(ConfigError):
        parse_group_spec("sl2")
    with pytest.raises(ConfigError):
        parse_group_spec("sl2", q=6)
    with pytest.raises(ConfigError):
        parse_group_spec({"q": 3})
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "A1", "frobenius": "yes"}, q=3)
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "A1", "isogeny": "weird"}, q=3)
    with pytest.raises(UnsupportedTypeError):
        parse_group_spec("sp4", q=4)
    with pytest.raises(UnsupportedTypeError):
        parse_group_spec("g2", q=9)


def test_pairing_and_duality():
    for name in ("sl2", "gl2", "pgl2", "sp4", "g2"):
        d = spec_of(name, 5).datum
        for i in d.simple_indices:
            assert d.pairing(d.roots[i], d.coroots[i]) == 2
        dd = dual_datum(d)
        assert dd.roots == d.coroots
        assert dd.coroots == d.roots
        assert dual_datum(dd).roots == d.roots


def test_weyl_closure_orders():
    orders = {"sl2": 2, "gl2": 2, "pgl2": 2, "gl3": 6, "sp4": 8, "g2": 12}
    for name, order in orders.items():
        q = 5 if name in ("sp4", "g2") else 3
        d = spec_of(name, q).datum
        assert len(weyl_closure(d)) == order


def test_connectedness_flag():
    assert spec_of("sl2", 3).connected
    assert spec_of("torus1", 3).connected
    assert not spec_of("o2", 3).connected


def test_component_validation():
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "T1", "component_group": [[[2]]]}, q=3)
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "A1", "isogeny": "sc",
                          "component_group": [[[-1, 1], [0, 1]]]}, q=3)


def test_twist_permutation_grammar():
    tw = parse_group_spec({"type": "A2", "isogeny": "sc", "twist": [1, 0]},
                          q=3)
    assert tw.twist.sigma_y != identity(2)
    sq = tw.twist.sigma_y
    from lpackets.lattice import mat_mul
    assert mat_mul(sq, sq) == identity(2)
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "A2", "isogeny": "sc", "twist": [1, 1]},
                         q=3)
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "A2", "isogeny": "sc",
                          "twist": [[2, 0], [0, 1]]}, q=3)


def test_centralizer_subdatum_full_and_empty():
    d = dual_datum(spec_of("sp4", 5).datum)
    full = centralizer_subdatum(d, (Fraction(0), Fraction(0)))
    assert len(full.root_positions) == len(d.roots)
    generic = centralizer_subdatum(d, (Fraction(1, 7), Fraction(2, 7)))
    assert not generic.root_positions


def test_centralizer_subdatum_proper_subsystem():
    d = dual_datum(spec_of("sp4", 5).datum)
    sub = centralizer_subdatum(d, (Fraction(1, 2), Fraction(1, 2)))
    assert 0 < len(sub.root_positions) < len(d.roots)
    assert len(sub.factors) >= 1
    for pos in sub.simple_positions:
        coords = d.roots[pos]
        val = sum(Fraction(c) * x
                  for c, x in zip(coords, (Fraction(1, 2), Fraction(1, 2))))
        assert val % 1 == 0


def test_factor_permutation_identity():
    d = dual_datum(spec_of("sp4", 5).datum)
    sub = centralizer_subdatum(d, (Fraction(1, 2), Fraction(1, 2)))
    n = len(sub.factors)
    assert factor_permutation(sub, identity(2)) == tuple(range(n))


def test_point_label_format():
    assert point_label((Fraction(0), Fraction(1, 2))) == "(0,1/2)"


def test_whittaker_torsor_sizes():
    assert whittaker_torsor_size(spec_of("gl2", 3)) == 1
    assert whittaker_torsor_size(spec_of("sl2", 3)) == 2
    assert whittaker_torsor_size(spec_of("sl2", 4)) == 1


def test_extra_torus_suffix():
    spec = parse_group_spec({"type": "A1+T1", "isogeny": "sc"}, q=3)
    assert spec.datum.rank == 2
    with pytest.raises(ConfigError):
        parse_group_spec({"type": "A1+X2", "isogeny": "sc"}, q=3)
