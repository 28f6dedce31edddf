"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are also printed
without ``-s``) or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import timeit

import pytest
from sympy import Matrix, symbols

from bianchi_hecke import reference
from bianchi_hecke.bredon import (COHOMOLOGY, HOMOLOGY, bredon_complex, bredon_homology,
                                  bredon_cohomology, hecke_operator, k_groups)
from bianchi_hecke.calibration import (FROZEN_ORDERING, calibrate_h0, reorder_coboundary,
                                       search_character_orderings)
from bianchi_hecke.cwmodel import congruence_model, gamma1_model, model_summary
from bianchi_hecke.gaussian import classify_prime
from bianchi_hecke.linalg import (ChainComplex, FgAbGroup, IntMatrix, charpoly, check_chain_map,
                                  det, rank, snf, trace)
from bianchi_hecke.matgroup import (GENS, Generators, ProjectiveMatrix, coset_transversal,
                                    psl2_order_fq, verify_presentation)
from bianchi_hecke.reptheory import (SUPPORTED, character_table, induction_matrix,
                                     restriction_matrix)
from bianchi_hecke.selfcheck import random_matrix

Z = FgAbGroup


def _eye(n):
    return IntMatrix.identity(n)


def criterion_1():
    ok = verify_presentation()
    replacements = [ProjectiveMatrix.of(1, 1, 0, 1), ProjectiveMatrix.of(1, "i", 0, 1)]
    for name in "abcd":
        for fake in replacements + [g for g in GENS.as_dict().values()]:
            if fake == GENS.as_dict()[name]:
                continue
            gens = GENS.as_dict()
            gens[name] = fake
            ok &= not verify_presentation(Generators(**gens))
    ms = min(timeit.repeat(verify_presentation, number=1, repeat=20)) * 1e3
    return ok and ms < 1.0, f"relators vanish, all mutations detected, {ms:.3f} ms"


def criterion_2():
    vals = psl2_order_fq(2), psl2_order_fq(3)
    return vals == (6, 12), f"|PSL_2(F_2)|, |PSL_2(F_3)| = {vals}"


def criterion_3():
    sizes = {}
    ok = True
    for p, n in (("1+i", 3), ("3", 10), ("2+i", 6)):
        t = coset_transversal(classify_prime(p))
        sizes[p] = len(t)
        ok &= len(t) == n
        ok &= all(x * y.inverse() not in t.subgroup
                  for i, x in enumerate(t.reps) for y in t.reps[:i])
    return ok, f"transversal sizes {sizes}"


def criterion_4():
    g = gamma1_model()
    hom, coh = bredon_homology(g), bredon_cohomology(g)
    want = (Z(6), Z(1), Z(0))
    return hom == want and coh == want, \
        f"homology {tuple(map(str, hom))}, cohomology {tuple(map(str, coh))}"


def criterion_5():
    bc = bredon_complex(gamma1_model(), COHOMOLOGY)
    r0, r1 = rank(bc.differential(0)), rank(bc.differential(1))
    found = search_character_orderings(bc, reference.GAMMA1_D0)
    equal = reorder_coboundary(bc, 0, FROZEN_ORDERING) == reference.GAMMA1_D0
    ok = (r0, r1) == (8, 1) and equal and any(o.is_canonical for o in found)
    return ok, f"ranks ({r0}, {r1}); d^0 equal entrywise under the frozen ordering " \
               f"({len(found)} orderings match)"


def criterion_6():
    m = congruence_model(classify_prime("1+i"))
    s = model_summary(m)
    types = tuple(t for _, t in s.stabilizer_types[0])
    hom, coh = bredon_homology(m), bredon_cohomology(m)
    want = (Z(8), Z(0), Z(1))
    ok = (s.counts == (5, 6, 3) and types == ("D2", "C2", "C2", "D2", "C2")
          and s.ranks[1] == 8 and hom == want and coh == want)
    return ok, f"counts {s.counts}, vertex types {types}, edge rank {s.ranks[1]}, " \
               f"homology {tuple(map(str, hom))}, cohomology {tuple(map(str, coh))}"


def criterion_7():
    h = hecke_operator(classify_prime("1+i"))
    ranks = (rank(h.res[0]), rank(h.res[1]))
    transposes = all(h.cores[n] == h.res[n].T for n in range(3))
    identity = all(h.adg[n] == _eye(h.adg[n].rows) for n in range(3))
    ok = ranks == (10, 6) and transposes and identity
    return ok, f"res ranks {ranks}, cores = res^T: {transposes}, Ad identity: {identity}"


def criterion_8():
    h = hecke_operator(classify_prime("1+i"))
    cal = calibrate_h0(h)
    thm = Matrix(reference.HECKE_1PI.tolist())
    x = symbols("x")
    oracle_cp = [int(c) for c in thm.charpoly(x).all_coeffs()]
    consistent = reference.M2 @ reference.M1 == reference.HECKE_1PI
    exact = (cal.on_coH0 == reference.HECKE_1PI and cal.res_coH0 == reference.M1
             and cal.cores_coH0 == reference.M2 and cal.on_H0 == reference.HECKE_1PI.T)
    invariants = (charpoly(h.on_H0) == oracle_cp and trace(h.on_H0) == 11
                  and det(h.on_H0) == int(thm.det()))
    vanishing = h.on_H1.is_zero() and h.on_K1.is_zero()
    ok = consistent and exact and invariants and vanishing
    return ok, (f"standard basis: H^0 matrix and both degree-zero maps exact, H_0 matrix is "
                f"the transpose: {exact}; charpoly/trace/det: {invariants}; "
                f"on_H1 = on_K1 = 0: {vanishing}; M2 M1 check: {consistent}")


def criterion_9():
    k0, k1 = k_groups(gamma1_model())
    return (k0, k1) == (Z(6), Z(1)), f"K_0 = {k0}, K_1 = {k1}"


def _unimodular(rng, n):
    P, Q = _eye(n), _eye(n)
    for _ in range(3 * n if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-3, 3)
        E = [[int(r == s) + (k if (r, s) == (i, j) else 0) for s in range(n)] for r in range(n)]
        Ei = [[int(r == s) - (k if (r, s) == (i, j) else 0) for s in range(n)] for r in range(n)]
        P, Q = IntMatrix.from_rows(E) @ P, Q @ IntMatrix.from_rows(Ei)
    return P, Q


def _structural(models, seed=0, snf_trials=500, basis_trials=20):
    failures = []
    for t in SUPPORTED:
        table = character_table(t)
        if sum(d * d for d in table.dims) != table.group.order:
            failures.append(f"{t} degrees")
        for i in range(table.size):
            for j in range(table.size):
                ip = table.inner(lambda y, i=i: table.value(i, y), lambda y, j=j: table.value(j, y))
                if ip != int(i == j):
                    failures.append(f"{t} orthogonality")
    groups = [c.stabilizer for m in models for c in m.all_cells()]
    for G in groups:
        for H in groups:
            if H.is_subgroup_of(G):
                ind = induction_matrix(H, G).as_lists()
                res = restriction_matrix(G, H).as_lists()
                if ind != [list(r) for r in zip(*res)]:
                    failures.append(f"Frobenius {H} < {G}")
    rng = random.Random(seed)
    for _ in range(snf_trials):
        A = random_matrix(rng)
        s = snf(A)
        if s.U @ A @ s.V != s.D or abs(det(s.U)) != 1 or abs(det(s.V)) != 1:
            failures.append("SNF contract")
    complexes = []
    for m in models:
        for v in (HOMOLOGY, COHOMOLOGY):
            c = bredon_complex(m, v).chain
            c.check()
            complexes.append(c)
    for trial in range(basis_trials):
        C = complexes[trial % len(complexes)]
        Ps = [_unimodular(rng, n) for n in C.dims]
        diffs = {k: Ps[k + C.step][0] @ d @ Ps[k][1] for k, d in C.diffs.items()}
        D = ChainComplex(C.dims, diffs, C.variance)
        if any(C.homology(n).group != D.homology(n).group for n in range(3)):
            failures.append("basis change")
    return failures


def criterion_10():
    models = [gamma1_model(), congruence_model(classify_prime("1+i"))]
    failures = _structural(models)
    return not failures, "all property suites hold" if not failures else "; ".join(failures[:5])


def criterion_11():
    details = []
    ok = True
    for p in ("3", "2+i"):
        prime = classify_prime(p)
        h = hecke_operator(prime)  # verifies chain maps and H_n factorization
        check_chain_map(h.gamma_complex.chain, h.k_complex.chain, h.res)
        check_chain_map(h.k_complex.chain, h.gk_complex.chain, h.adg)
        check_chain_map(h.gk_complex.chain, h.gamma_complex.chain, h.cores)
        failures = _structural([congruence_model(prime)], seed=len(p), snf_trials=50)
        ok &= not failures and all(h.cores[n] == h.res[n].T for n in range(3))
        hk = tuple(map(str, h.k_complex.groups()))
        details.append(f"p={p}: K homology {hk}, on_H1 {h.on_H1.tolist()}")
    return ok, "; ".join(details)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def _line(k, ok, detail):
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(k, *fn()) for k, fn in enumerate(CRITERIA, 1)]
    for k, ok, detail in results:
        print(_line(k, ok, detail))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
