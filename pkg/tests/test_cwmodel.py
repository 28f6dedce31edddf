import json

import pytest

from bianchi_hecke.cwmodel import (congruence_model, empty_model, gamma1_model,
                                   model_summary, orbit_classes)
from bianchi_hecke.gaussian import classify_prime
from bianchi_hecke.matgroup import UPPER, coset_transversal

SMALL_PRIMES = ["1+i", "2+i", "2-i", "3", "3+2i", "3-2i", "4+i", "4-i"]


def test_gamma1_model(gamma):
    s = model_summary(gamma)
    assert s.counts == (4, 4, 1)
    assert s.ranks == (14, 10, 1)
    assert [t for _, t in s.stabilizer_types[0]] == ["A4", "S3", "D2", "S3"]
    assert [t for _, t in s.stabilizer_types[1]] == ["C3", "C2", "C2", "C3"]


def test_empty_model():
    assert model_summary(empty_model()).ranks == (0, 0, 0)


def test_k_model_at_1pi(k_model):
    s = model_summary(k_model)
    assert s.counts == (5, 6, 3)
    assert s.ranks == (14, 8, 3)
    assert [t for _, t in s.stabilizer_types[0]] == ["D2", "C2", "C2", "D2", "C2"]
    labels = [lab for lab, _ in s.stabilizer_types[0]]
    assert labels == ["P", "Q", "R", "g[1].R", "S"]
    assert [lab for lab, _ in s.stabilizer_types[2]] == ["E", "g[1].E", "s.E"]


def test_orbit_classes_at_1pi(gamma, p1i):
    t = coset_transversal(p1i)
    assert orbit_classes(gamma.cell("P").stabilizer, t) == [[0, 1, 2]]
    assert orbit_classes(gamma.cell("R").stabilizer, t) == [[0, 2], [1]]
    assert orbit_classes(gamma.cell("E").stabilizer, t) == [[0], [1], [2]]


@pytest.mark.parametrize("p", SMALL_PRIMES)
@pytest.mark.parametrize("kind", ["lower", UPPER])
def test_orbit_splitting_invariants(gamma, p, kind):
    prime = classify_prime(p)
    model = congruence_model(prime, kind)
    t = model.transversal
    for e in gamma.all_cells():
        classes = model.classes[e.label]
        flat = sorted(j for cl in classes for j in cl)
        assert flat == list(range(len(t)))
        split = [c for c in model.cells[e.dim] if c.base == e.label]
        assert len(split) == len(classes)
        # orbit counting: sum of [S : Stab_K] over the K-orbits is the index
        assert sum(e.stabilizer.order // c.stabilizer.order for c in split) == len(t)
        for c in split:
            conj = e.stabilizer.conjugate(c.translate)
            assert c.stabilizer.is_subgroup_of(conj)
            assert all(x in t.subgroup for x in c.stabilizer.elements)
    model.validate()


def test_json_export(k_model):
    data = json.loads(json.dumps(k_model.to_json()))
    assert data["group"] == "K(1+i)"
    assert [len(cs) for cs in data["cells"]] == [5, 6, 3]
    e = data["cells"][2][0]
    assert all(len(triple) == 3 for triple in e["boundary"])
