import pytest
from hypothesis import given, strategies as st

from bianchi_hecke.errors import NotPrime, ParseError
from bianchi_hecke.gaussian import (GaussianInt, I, classify_prime, congruent, norm,
                                    parse_gaussian, reduce, residues)

small = st.integers(-40, 40)
gauss = st.builds(GaussianInt, small, small)


def test_norm_examples():
    assert norm(GaussianInt(1, 1)) == 2
    assert norm(GaussianInt(0, 0)) == 0
    assert norm(GaussianInt(2, 1)) == 5


@pytest.mark.parametrize("text,kind", [("1+i", "ramified"), ("3", "inert"),
                                       ("2+i", "split"), ("2-i", "split"), ("7", "inert")])
def test_classify(text, kind):
    assert classify_prime(text).splitting_class == kind


def test_five_is_not_prime():
    with pytest.raises(NotPrime) as info:
        classify_prime(5)
    w1, w2 = info.value.witness
    assert w1 * w2 == GaussianInt(5)
    assert {norm(w1), norm(w2)} == {5}


@pytest.mark.parametrize("z", [0, 1, "-i", 4, "3+3i", 9])
def test_units_zero_and_composites_rejected(z):
    with pytest.raises(NotPrime):
        classify_prime(z)


def test_residue_systems():
    assert residues(classify_prime("1+i")) == [GaussianInt(0), GaussianInt(1)]
    r3 = residues(classify_prime(3))
    assert len(r3) == 9 and GaussianInt(2, 2) in r3
    assert reduce(I, classify_prime("1+i")) == GaussianInt(1)


@pytest.mark.parametrize("p", ["1+i", "3", "2+i", "2-i", "3+2i"])
def test_residues_are_a_complete_system(p):
    prime = classify_prime(p)
    res = residues(prime)
    assert len(res) == prime.norm()
    for i, x in enumerate(res):
        assert reduce(x, prime) == x
        for y in res[:i]:
            assert not congruent(x, y, prime)


@given(gauss)
def test_reduce_is_congruent(z):
    for p in ("1+i", "3", "2+i"):
        prime = classify_prime(p)
        r = reduce(z, prime)
        assert congruent(r, z, prime)
        assert r in residues(prime)


@given(gauss, gauss)
def test_norm_multiplicative(z, w):
    assert norm(z * w) == norm(z) * norm(w)


@given(gauss)
def test_string_round_trip(z):
    assert parse_gaussian(str(z)) == z
    assert GaussianInt.from_json(z.to_json()) == z


@pytest.mark.parametrize("text,value", [("1+i", GaussianInt(1, 1)), (" 2 - i ", GaussianInt(2, -1)),
                                        ("-3i", GaussianInt(0, -3)), ("i", I), ("7", GaussianInt(7))])
def test_parse(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("text", ["", "1+", "2x", "i+i+", "1++i"])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse_gaussian(text)
    assert info.value.position >= 0
