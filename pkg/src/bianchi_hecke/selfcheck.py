"""Property checks behind the ``verify`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .bredon import COHOMOLOGY, HOMOLOGY, bredon_complex, hecke_operator
from .calibration import FROZEN_ORDERING, calibrate_h0, reorder_coboundary
from .cwmodel import congruence_model, gamma1_model
from .errors import DomainError, InvariantError
from .gaussian import classify_prime
from .linalg import IntMatrix, charpoly, det, snf
from .matgroup import GENS, Generators, ProjectiveMatrix, verify_presentation
from .reptheory import (SUPPORTED, character_table, induction_matrix,
                        restriction_matrix)
from . import reference


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'ok  ' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_presentation() -> str:
    if not verify_presentation(GENS):
        raise AssertionError("relators do not vanish")
    fake = ProjectiveMatrix.of(1, 1, 0, 1)
    for name in "abcd":
        gens = GENS.as_dict()
        gens[name] = fake
        if verify_presentation(Generators(**gens)):
            raise AssertionError(f"presentation survives replacing {name}")
    return "8 relators vanish; each single-generator mutation breaks one"


def check_character_tables() -> str:
    for t in SUPPORTED:
        table = character_table(t)
        if sum(d * d for d in table.dims) != table.group.order:
            raise AssertionError(f"{t}: sum of squared degrees")
        for i in range(table.size):
            for j in range(table.size):
                ip = table.inner(lambda x, i=i: table.value(i, x), lambda x, j=j: table.value(j, x))
                if ip != Fraction(int(i == j)):
                    raise AssertionError(f"{t}: <chi_{i}, chi_{j}> = {ip}")
    return f"{len(SUPPORTED)} types orthonormal"


def _stabilizers():
    return [c.stabilizer for c in gamma1_model().all_cells()]


def check_frobenius() -> str:
    pairs = 0
    groups = _stabilizers() + [c.stabilizer for c in congruence_model(classify_prime("1+i")).all_cells()]
    for G in groups:
        for H in groups:
            if H.is_subgroup_of(G):
                ind = induction_matrix(H, G).matrix
                res = restriction_matrix(G, H).matrix
                if [list(r) for r in ind] != [list(r) for r in zip(*res)]:
                    raise AssertionError(f"induction {H} -> {G} is not the transposed restriction")
                pairs += 1
    return f"{pairs} subgroup pairs"


def random_matrix(rng: random.Random, max_dim: int = 20, bound: int = 9) -> IntMatrix:
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)], cols=c)


def check_snf(seed: int = 0, trials: int = 500) -> str:
    rng = random.Random(seed)
    for _ in range(trials):
        A = random_matrix(rng)
        s = snf(A)
        if s.U @ A @ s.V != s.D or abs(det(s.U)) != 1 or abs(det(s.V)) != 1:
            raise AssertionError(f"SNF contract broken for {A.tolist()}")
    return f"{trials} random matrices"


def check_complexes() -> str:
    models = [gamma1_model()] + [congruence_model(classify_prime(p)) for p in ("1+i", "2+i", "3")]
    for m in models:
        for v in (HOMOLOGY, COHOMOLOGY):
            bredon_complex(m, v).chain.check()
    return f"d o d = 0 for {len(models)} models in both variances"


def check_reference() -> str:
    g = bredon_complex(gamma1_model(), COHOMOLOGY)
    if reorder_coboundary(g, 0, FROZEN_ORDERING) != reference.GAMMA1_D0:
        raise AssertionError("Gamma_1 coboundary d^0 differs from the reference")
    h = hecke_operator(classify_prime("1+i"))
    if h.res[0] != reference.F0 or h.res[1] != reference.F1:
        raise AssertionError("restriction chain map differs from the reference")
    cal = calibrate_h0(h)
    if cal is None or cal.on_coH0 != reference.HECKE_1PI:
        raise AssertionError("Hecke matrix on H^0 differs from the reference")
    if cal.res_coH0 != reference.M1 or cal.cores_coH0 != reference.M2:
        raise AssertionError("degree-zero restriction/corestriction differ from the reference")
    if charpoly(h.on_H0) != reference.HECKE_1PI_CHARPOLY:
        raise AssertionError("characteristic polynomial differs")
    return "coboundary, chain maps and Hecke matrix at 1+i"


def run_all(seed: int = 0) -> list[CheckResult]:
    checks = [
        ("presentation", check_presentation),
        ("character tables", check_character_tables),
        ("Frobenius reciprocity", check_frobenius),
        ("Smith normal form", lambda: check_snf(seed)),
        ("d o d = 0", check_complexes),
        ("reference matrices", check_reference),
    ]
    out = []
    for name, fn in checks:
        try:
            out.append(CheckResult(name, True, fn()))
        except (AssertionError, DomainError, InvariantError) as exc:
            out.append(CheckResult(name, False, str(exc)))
    return out
