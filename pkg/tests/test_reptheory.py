import itertools

import pytest

from bianchi_hecke.cwmodel import congruence_model, gamma1_model
from bianchi_hecke.errors import NotClosed, NotIsomorphism, NotSubgroup, UnknownType
from bianchi_hecke.gaussian import classify_prime
from bianchi_hecke.matgroup import GENS, ProjectiveMatrix
from bianchi_hecke.reptheory import (SUPPORTED, character_table, conjugation_map,
                                     group_from_generators, identify, induction_matrix,
                                     is_permutation_matrix, restriction_matrix)

a, b, c, d = GENS.a, GENS.b, GENS.c, GENS.d


def brute_multiplicity(G, f, chi):
    """<f, chi> averaged element by element in floating point."""
    total = sum(f(x) * complex(chi(x)).conjugate() for x in G.elements) / G.order
    assert abs(total.imag) < 1e-9
    m = round(total.real)
    assert abs(total.real - m) < 1e-9
    return m


@pytest.mark.parametrize("gens,kind", [((a,), "C3"), ((b, d), "D2"), ((a, c), "A4"),
                                       ((a, d), "S3"), ((c, b), "S3"), ((d,), "C2")])
def test_identify(gens, kind):
    assert group_from_generators(gens).iso_type == kind


def test_identify_rejects_unknown():
    with pytest.raises(NotClosed):
        group_from_generators((ProjectiveMatrix.of(1, 1, 0, 1),))
    with pytest.raises(UnknownType):
        character_table("Q8")


@pytest.mark.parametrize("kind", SUPPORTED)
def test_table_orthonormal(kind):
    t = character_table(kind)
    assert sum(x * x for x in t.dims) == t.group.order
    for i, j in itertools.product(range(t.size), repeat=2):
        m = brute_multiplicity(t.group, lambda x: complex(t.value(i, x)), lambda x: t.value(j, x))
        assert m == (i == j)


def test_table_dims():
    assert character_table("A4").dims == (1, 1, 1, 3)
    assert character_table("S3").dims == (1, 1, 2)
    assert character_table("C1").dims == (1,)
    assert character_table("D2").char_names == ("++", "+-", "-+", "--")


def test_restriction_a4_to_c3():
    A4 = group_from_generators((a, c))
    C3 = group_from_generators((a,))
    m = restriction_matrix(A4, C3).as_lists()
    cols = list(zip(*m))
    assert sorted(cols[:3]) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert cols[3] == (1, 1, 1)


def test_trivial_maps():
    S3 = group_from_generators((a, d))
    C1 = group_from_generators((), identity=S3.identity)
    n = character_table(S3).size
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    assert restriction_matrix(S3, S3).as_lists() == eye
    assert induction_matrix(S3, S3).as_lists() == eye
    assert induction_matrix(C1, S3).as_lists() == [[1], [1], [2]]
    C2 = group_from_generators((d,))
    assert restriction_matrix(C2, C1).as_lists() == [[1, 1]]


def test_not_subgroup():
    with pytest.raises(NotSubgroup):
        restriction_matrix(group_from_generators((a,)), group_from_generators((d,)))


def _all_stabilizers():
    cells = list(gamma1_model().all_cells())
    for p in ("1+i", "2+i"):
        cells += list(congruence_model(classify_prime(p)).all_cells())
    return [c.stabilizer for c in cells]


def test_frobenius_and_brute_force_restriction():
    groups = _all_stabilizers()
    checked = 0
    for G in groups:
        tg = character_table(G)
        for H in groups:
            if not H.is_subgroup_of(G):
                continue
            th = character_table(H)
            res = restriction_matrix(G, H).as_lists()
            ind = induction_matrix(H, G).as_lists()
            assert ind == [list(r) for r in zip(*res)]
            for i in range(tg.size):
                for j in range(th.size):
                    m = brute_multiplicity(H, lambda x: complex(tg.value(i, x)),
                                           lambda x: th.value(j, x))
                    assert res[j][i] == m
            checked += 1
    assert checked > 50


def test_conjugation_maps():
    D2 = group_from_generators((b, d))
    g1 = ProjectiveMatrix.of(1, 0, 1, 1)
    inner = conjugation_map(D2, D2, b)
    assert inner.as_lists() == [[int(i == j) for j in range(4)] for i in range(4)]
    moved = D2.conjugate(g1)
    assert is_permutation_matrix(conjugation_map(D2, moved, g1).as_lists())
    # a conjugated group with re-chosen generators still gives a permutation
    other = identify(moved.elements)
    assert is_permutation_matrix(conjugation_map(D2, other, g1).as_lists())
    with pytest.raises(NotIsomorphism):
        conjugation_map(D2, group_from_generators((a, c)), g1)
