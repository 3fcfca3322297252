import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpackets.errors import ConfigError
from lpackets.fq import field, prime_power

SIZES = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64]


def test_prime_power_decomposition():
    assert prime_power(8) == (2, 3)
    assert prime_power(49) == (7, 2)
    assert prime_power(5) == (5, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ConfigError):
            prime_power(bad)


def test_field_size_cap():
    with pytest.raises(ConfigError):
        field(128)


@pytest.mark.parametrize("q", SIZES)
def test_field_axioms(q):
    f = field(q)
    elems = range(q)
    for a in elems:
        assert f.add[a * q + 0] == a
        assert f.mul[a * q + 1] == a
        assert f.mul[a * q + 0] == 0
        assert f.add[a * q + f.neg[a]] == 0
        if a:
            assert f.mul[a * q + f.inv[a]] == 1
    for a in elems:
        for b in elems:
            assert f.add[a * q + b] == f.add[b * q + a]
            assert f.mul[a * q + b] == f.mul[b * q + a]


@pytest.mark.parametrize("q", [4, 8, 9, 27])
def test_field_distributivity_exhaustive(q):
    f = field(q)
    for a in range(q):
        for b in range(q):
            ab = f.add[a * q + b]
            for c in range(q):
                left = f.mul[c * q + ab]
                right = f.add[f.mul[c * q + a] * q + f.mul[c * q + b]]
                assert left == right


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SIZES), st.data())
def test_field_associativity(q, data):
    f = field(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    c = data.draw(st.integers(0, q - 1))
    assert f.mul[f.mul[a * q + b] * q + c] == f.mul[a * q + f.mul[b * q + c]]
    assert f.add[f.add[a * q + b] * q + c] == f.add[a * q + f.add[b * q + c]]


@pytest.mark.parametrize("q", SIZES)
def test_generator_spans_units(q):
    f = field(q)
    seen = {1}
    x = f.gen
    while x != 1:
        seen.add(x)
        x = f.mul[x * q + f.gen]
    assert len(seen) == q - 1


@pytest.mark.parametrize("q", SIZES)
def test_embed_int_is_prime_field_map(q):
    f = field(q)
    p = f.p
    assert f.embed_int(0) == 0
    assert f.embed_int(1) == 1
    for c in range(-p, p + 1):
        d = f.embed_int(c)
        assert 0 <= d < q
        assert f.add[d * q + f.embed_int(-c)] == 0
