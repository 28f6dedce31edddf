"""Basis conventions that make computed matrices comparable with hand-written
ones: character orderings per stabilizer type, and a standard basis of H_0
made of classes of single irreducibles at vertices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .bredon import BredonComplex, HeckeData
from .linalg import Homology, IntMatrix, snf


# -- character orderings --------------------------------------------------------

@dataclass(frozen=True)
class CharacterOrdering:
    """Permutation of the canonical character list, per stabilizer type.

    ``perms[t][k]`` is the canonical index of the k-th basis character for
    cells of type ``t``.  Missing types use the canonical order.
    """

    perms: tuple = ()

    def of(self, iso_type: str, size: int) -> tuple:
        return dict(self.perms).get(iso_type, tuple(range(size)))

    @property
    def is_canonical(self) -> bool:
        return all(p == tuple(range(len(p))) for _, p in self.perms)


# The canonical orderings already reproduce the reference coboundary.
FROZEN_ORDERING = CharacterOrdering()


def _positions(basis_degree, ordering: CharacterOrdering) -> list[int]:
    """New position -> old position for one degree."""
    out, off = [], 0
    for _, table in basis_degree:
        out.extend(off + i for i in ordering.of(table.iso_type, table.size))
        off += table.size
    return out


def reorder_coboundary(bc: BredonComplex, n: int, ordering: CharacterOrdering) -> IntMatrix:
    """d^n of a cohomology complex with bases permuted by ``ordering``."""
    d = bc.differential(n)
    rows = _positions(bc.basis[n + 1], ordering)
    cols = _positions(bc.basis[n], ordering)
    return IntMatrix.from_rows([[d[r, c] for c in cols] for r in rows], cols=len(cols))


def search_character_orderings(bc: BredonComplex, target: IntMatrix, n: int = 0) -> list:
    """All per-type orderings under which d^n equals ``target`` entrywise."""
    types = {}
    for deg in (n, n + 1):
        for _, table in bc.basis[deg]:
            types[table.iso_type] = table.size
    names = sorted(types)
    found = []
    for choice in product(*(permutations(range(types[t])) for t in names)):
        ordering = CharacterOrdering(tuple(zip(names, choice)))
        if reorder_coboundary(bc, n, ordering) == target:
            found.append(ordering)
    return found


# -- standard H_0 bases ---------------------------------------------------------

def _unit(n: int, j: int) -> list[int]:
    v = [0] * n
    v[j] = 1
    return v


def _is_primitive(cols: list[list[int]]) -> bool:
    """Columns extend to a basis of the ambient lattice."""
    m = IntMatrix.from_rows([list(r) for r in zip(*cols)], cols=len(cols))
    d = snf(m).diagonal
    return len(d) == len(cols) and all(x == 1 for x in d)


def standard_basis(h: Homology, n: int) -> tuple | None:
    """Greedy choice of chain basis vectors whose classes form a basis of the
    (torsion-free) homology group; None if torsion is present or the greedy
    pass gets stuck."""
    if h.group.torsion:
        return None
    r = h.group.free_rank
    chosen, cols = [], []
    for j in range(n):
        if len(chosen) == r:
            break
        c = h.coordinates(_unit(n, j))
        if _is_primitive(cols + [c]):
            chosen.append(j)
            cols.append(c)
    return tuple(chosen) if len(chosen) == r else None


def _change_of_basis(h: Homology, n: int, subset: tuple) -> tuple[IntMatrix, IntMatrix]:
    """(B, B^-1) with B the canonical coordinates of the chosen classes."""
    B = IntMatrix.from_rows([list(r) for r in zip(*(h.coordinates(_unit(n, j)) for j in subset))],
                            cols=len(subset))
    s = snf(B)
    # B = U^-1 D V^-1 with D = I, so B^-1 = V U
    return B, s.V @ s.U


def _label(basis_degree, j: int) -> str:
    off = 0
    for lab, table in basis_degree:
        if j < off + table.size:
            return f"{lab}:{table.char_names[j - off]}"
        off += table.size
    raise IndexError(j)


@dataclass(frozen=True)
class CalibratedH0:
    """Degree-zero Hecke data in standard bases.

    Homology matrices act on columns of coordinates in the chosen bases;
    cohomology matrices use the dual bases of H^0 = Hom(H_0, Z), so each is
    the transpose of its homological partner with source and target swapped.
    """

    gamma_basis: tuple
    k_basis: tuple
    on_H0: IntMatrix
    res_H0: IntMatrix
    cores_H0: IntMatrix
    on_coH0: IntMatrix
    res_coH0: IntMatrix
    cores_coH0: IntMatrix

    def to_json(self) -> dict:
        return {"gamma_basis": list(self.gamma_basis), "k_basis": list(self.k_basis),
                "homology": {"hecke": self.on_H0.tolist(), "restriction": self.res_H0.tolist(),
                             "corestriction": self.cores_H0.tolist()},
                "cohomology": {"hecke": self.on_coH0.tolist(), "restriction": self.res_coH0.tolist(),
                               "corestriction": self.cores_coH0.tolist()}}


def _in_basis(f: IntMatrix, src: Homology, src_sub, tgt: Homology, tgt_inv: IntMatrix, n_src: int):
    cols = [tgt_inv.apply(tgt.coordinates(f.apply(_unit(n_src, j)))) for j in src_sub]
    return IntMatrix.from_rows([list(r) for r in zip(*cols)], cols=len(cols))


def _dual_cocycles(h: Homology, n: int, inv: IntMatrix) -> list[list[int]]:
    """phi_k with phi_k(e_m) = k-th coordinate of [e_m] in the chosen basis."""
    coords = [inv.apply(h.coordinates(_unit(n, m))) for m in range(n)]
    return [[coords[m][k] for m in range(n)] for k in range(inv.rows)]


def _co_matrix(f_dual: IntMatrix, cocycles_src, subset_tgt) -> IntMatrix:
    """Matrix of phi -> f_dual phi in dual bases, by evaluating on the chosen
    chain generators of the target."""
    cols = []
    for phi in cocycles_src:
        img = f_dual.apply(phi)
        cols.append([img[j] for j in subset_tgt])
    return IntMatrix.from_rows([list(r) for r in zip(*cols)], cols=len(cols))


def calibrate_h0(h: HeckeData) -> CalibratedH0 | None:
    cg, ck = h.gamma_complex, h.k_complex
    ng, nk = cg.chain.dim(0), ck.chain.dim(0)
    hg, hk = cg.chain.homology(0), ck.chain.homology(0)
    sg, sk = standard_basis(hg, ng), standard_basis(hk, nk)
    if sg is None or sk is None:
        return None
    _, ginv = _change_of_basis(hg, ng, sg)
    _, kinv = _change_of_basis(hk, nk, sk)
    res = h.res[0]
    cores = h.cores[0] @ h.adg[0]
    total = cores @ res
    on = _in_basis(total, hg, sg, hg, ginv, ng)
    r = _in_basis(res, hg, sg, hk, kinv, ng)
    c = _in_basis(cores, hk, sk, hg, ginv, nk)
    # cochain level: the duals of the chain maps, restriction being dual to
    # corestriction
    phi_g, phi_k = _dual_cocycles(hg, ng, ginv), _dual_cocycles(hk, nk, kinv)
    co_on = _co_matrix(total.T, phi_g, sg)
    co_res = _co_matrix(cores.T, phi_g, sk)
    co_cores = _co_matrix(res.T, phi_k, sg)
    return CalibratedH0(tuple(_label(cg.basis[0], j) for j in sg),
                        tuple(_label(ck.basis[0], j) for j in sk),
                        on, r, c, co_on, co_res, co_cores)
