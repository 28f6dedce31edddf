import random

import pytest
from hypothesis import given, strategies as st

from bianchi_hecke.errors import NotPrimePower, ParseError
from bianchi_hecke.gaussian import classify_prime
from bianchi_hecke.matgroup import (GENS, IDENTITY, RELATORS, SIGMA, Generators,
                                    LOWER, UPPER, Mat2, ProjectiveMatrix, compose,
                                    coset_reduce, coset_transversal,
                                    double_coset_left_reps, in_congruence_subgroup,
                                    inverse, parse_word, psl2_order_fq, random_word,
                                    verify_presentation)

words = st.integers(0, 10_000).map(lambda s: random_word(random.Random(s), 12))


def test_presentation():
    assert verify_presentation()
    assert verify_presentation(GENS, ())


def test_mutated_generator_breaks_presentation():
    mutated = Generators(GENS.a, GENS.b * GENS.a, GENS.c, GENS.d)
    assert not verify_presentation(mutated)


def test_generator_orders():
    assert [GENS.a.order(), GENS.b.order(), GENS.c.order(), GENS.d.order()] == [3, 2, 3, 2]
    assert compose(GENS.b, GENS.b).is_identity()
    assert compose(GENS.a, inverse(GENS.a)).is_identity()
    assert (GENS.a * GENS.c) ** 2 == IDENTITY


def test_sign_canonical():
    x = ProjectiveMatrix.of(0, -1, 1, 0)
    y = ProjectiveMatrix.of(0, 1, -1, 0)
    assert x == y and hash(x) == hash(y)


def test_determinant_checked():
    with pytest.raises(ValueError):
        ProjectiveMatrix.of(2, 0, 0, 1)


@given(words, words, words)
def test_group_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    assert (x * y).inverse() == y.inverse() * x.inverse()


@pytest.mark.parametrize("w", RELATORS)
def test_each_relator(w):
    assert parse_word(w).is_identity()


def test_parse_word():
    assert parse_word("a*c^2*d") == GENS.a * GENS.c * GENS.c * GENS.d
    assert parse_word("a^-1") == GENS.a.inverse()
    assert parse_word("") == IDENTITY
    for bad in ("(a", "a)", "x", "^2"):
        with pytest.raises(ParseError):
            parse_word(bad)


def test_congruence_membership():
    p = classify_prime("1+i")
    assert in_congruence_subgroup(IDENTITY, p)
    assert not in_congruence_subgroup(ProjectiveMatrix.of(1, 0, 1, 1), p)
    assert in_congruence_subgroup(ProjectiveMatrix.of(1, 0, "1+i", 1), p)


@pytest.mark.parametrize("p,n", [("1+i", 3), ("3", 10), ("2+i", 6), ("2-i", 6), ("3+2i", 14)])
def test_transversal_sizes(p, n):
    prime = classify_prime(p)
    for kind in (LOWER, UPPER):
        t = coset_transversal(prime, kind)
        assert len(t) == n == prime.norm() + 1
        for i, x in enumerate(t.reps):
            for y in t.reps[:i]:
                assert x * y.inverse() not in t.subgroup


def test_transversal_at_1pi():
    t = coset_transversal(classify_prime("1+i"))
    assert t.reps == (IDENTITY, ProjectiveMatrix.of(1, 0, 1, 1), SIGMA)
    assert t.names == ("g[0]", "g[1]", "s")


@given(words, st.sampled_from(["1+i", "3", "2+i"]))
def test_coset_reduce(k_word, p):
    t = coset_transversal(classify_prime(p))
    assert coset_reduce(IDENTITY, t) == 0
    for j, r in enumerate(t.reps):
        assert coset_reduce(r, t) == j
    j = coset_reduce(k_word, t)
    assert k_word * t.reps[j].inverse() in t.subgroup


def test_coset_reduce_sigma_times_subgroup_element():
    t = coset_transversal(classify_prime("1+i"))
    rng = random.Random(3)
    found = 0
    while found < 20:
        k = random_word(rng, 10)
        if k in t.subgroup:
            found += 1
            assert coset_reduce(k * SIGMA, t) == t.index_of_name("s")


def test_psl2_orders():
    assert psl2_order_fq(2) == 6
    assert psl2_order_fq(3) == 12
    assert psl2_order_fq(9) == 360
    with pytest.raises(NotPrimePower):
        psl2_order_fq(6)


@pytest.mark.parametrize("p", ["1+i", "3", "2+i"])
def test_double_coset_reps(p):
    prime = classify_prime(p)
    alphas = double_coset_left_reps(prime)
    assert len(alphas) == prime.norm() + 1
    assert all(a.det() == prime.value for a in alphas)


def test_double_coset_trivial():
    assert double_coset_left_reps(None) == [Mat2.of(1, 0, 0, 1)]
