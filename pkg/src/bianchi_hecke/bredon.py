"""Bredon chain complexes with representation-ring coefficients, the
restriction / conjugation / corestriction chain maps and the Hecke operator."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cwmodel import GCWModel, OrbitCell, gamma1_model, split_orbits
from .errors import ComplexInconsistent, DimensionTooHigh, NotAComplex, NotChainMap
from .gaussian import GaussianPrime
from .linalg import (ChainComplex, FgAbGroup, IntMatrix, block_matrix, charpoly,
                     check_chain_map, induced_on_homology, snf)
from .matgroup import LOWER, UPPER, SIGMA, coset_reduce, coset_transversal
from .reptheory import (character_table, conjugation_map, induction_matrix,
                        restriction_matrix)

HOMOLOGY, COHOMOLOGY = "homology", "cohomology"


@dataclass(frozen=True)
class BredonComplex:
    variance: str
    basis: tuple  # basis[n] = ((label, CharacterTable), ...)
    chain: ChainComplex

    @property
    def ranks(self) -> tuple:
        return self.chain.dims

    def differential(self, n: int) -> IntMatrix:
        """d_n: C_n -> C_{n-1} for homology, d^n: C^n -> C^{n+1} for cohomology."""
        return self.chain.out(n)

    def offset(self, n: int, label: str) -> int:
        off = 0
        for lab, table in self.basis[n]:
            if lab == label:
                return off
            off += table.size
        raise KeyError(label)

    def groups(self) -> tuple:
        return tuple(self.chain.homology(n).group for n in range(len(self.basis)))


def _cell_sizes(cells) -> list[int]:
    return [character_table(c.stabilizer).size for c in cells]


def _blocks_to_matrix(blocks: dict, rows, cols) -> IntMatrix:
    row_idx = {c.label: k for k, c in enumerate(rows)}
    col_idx = {c.label: k for k, c in enumerate(cols)}
    summed: dict = {}
    for (r, c), m in blocks.items():
        key = (row_idx[r], col_idx[c])
        summed[key] = summed[key] + m if key in summed else m
    return block_matrix(summed, _cell_sizes(rows), _cell_sizes(cols))


def _as_int(m) -> IntMatrix:
    return IntMatrix.from_rows(m.matrix, cols=m.source.size)


def bredon_complex(model: GCWModel, variance: str = HOMOLOGY) -> BredonComplex:
    """Assemble the Bredon (co)chain complex of ``model``.

    Homology differentials induce from the cell stabilizer into the face
    stabilizer; cohomology differentials restrict the other way.
    """
    if variance not in (HOMOLOGY, COHOMOLOGY):
        raise ValueError(f"unknown variance {variance!r}")
    cells = model.cells
    dims = tuple(sum(_cell_sizes(cs)) for cs in cells)
    diffs = {}
    for n in range(1, len(cells)):
        blocks = {}
        for c in cells[n]:
            for inc in c.boundary:
                f = model.cell(inc.target)
                if variance == HOMOLOGY:
                    m = induction_matrix(c.stabilizer, f.stabilizer, via=inc.carrier)
                    blocks[(f.label, c.label)] = _signed(blocks.get((f.label, c.label)), inc.sign, m)
                else:
                    m = restriction_matrix(f.stabilizer, c.stabilizer, via=inc.carrier)
                    blocks[(c.label, f.label)] = _signed(blocks.get((c.label, f.label)), inc.sign, m)
        if variance == HOMOLOGY:
            diffs[n] = _blocks_to_matrix(blocks, cells[n - 1], cells[n])
        else:
            diffs[n - 1] = _blocks_to_matrix(blocks, cells[n], cells[n - 1])
    chain = ChainComplex(dims, diffs, variance)
    try:
        chain.check()
    except NotAComplex as exc:
        raise ComplexInconsistent(f"{model.group_tag}: {exc}") from exc
    basis = tuple(tuple((c.label, character_table(c.stabilizer)) for c in cs) for cs in cells)
    return BredonComplex(variance, basis, chain)


def _signed(prev, sign: int, m) -> IntMatrix:
    block = _as_int(m)
    if sign < 0:
        block = -block
    return block if prev is None else prev + block


def bredon_homology(model: GCWModel) -> tuple:
    return bredon_complex(model, HOMOLOGY).groups()


def bredon_cohomology(model: GCWModel) -> tuple:
    return bredon_complex(model, COHOMOLOGY).groups()


# -- K-groups -----------------------------------------------------------------

def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    free = sum(g.free_rank for g in groups)
    tors = [t for g in groups for t in g.torsion]
    if not tors:
        return FgAbGroup(free, ())
    n = len(tors)
    diag = IntMatrix.from_rows([[tors[i] if i == j else 0 for j in range(n)] for i in range(n)])
    return FgAbGroup(free, tuple(d for d in snf(diag).diagonal if d > 1))


def k_groups(model: GCWModel) -> tuple:
    """(K_0, K_1) from the split sequences available in dimension <= 2."""
    if model.dimension > 2:
        raise DimensionTooHigh(f"model has dimension {model.dimension}; only <= 2 is supported")
    h = list(bredon_homology(model)) + [FgAbGroup(0, ())] * 3
    return direct_sum(h[2], h[0]), h[1]


# -- chain maps for the Hecke operator ---------------------------------------

def restriction_chain_map(gamma: GCWModel, sub: GCWModel) -> dict:
    """C_n(Gamma_1 model) -> C_n(subgroup model): restrict each stabilizer
    representation to the stabilizers of the translates it splits into."""
    out = {}
    for n, (cs_g, cs_k) in enumerate(zip(gamma.cells, sub.cells)):
        blocks = {}
        for c in cs_k:
            e = gamma.cell(c.base)
            blocks[(c.label, e.label)] = _as_int(
                restriction_matrix(e.stabilizer, c.stabilizer, via=c.translate))
        out[n] = _blocks_to_matrix(blocks, cs_k, cs_g)
    return out


def corestriction_chain_map(sub: GCWModel, gamma: GCWModel) -> dict:
    """C_n(subgroup model) -> C_n(Gamma_1 model), blockwise induction."""
    out = {}
    for n, (cs_k, cs_g) in enumerate(zip(sub.cells, gamma.cells)):
        blocks = {}
        for c in cs_k:
            e = gamma.cell(c.base)
            blocks[(e.label, c.label)] = _as_int(
                induction_matrix(c.stabilizer, e.stabilizer, via=c.translate))
        out[n] = _blocks_to_matrix(blocks, cs_g, cs_k)
    return out


def _sigma_transport(gamma: GCWModel, k_model: GCWModel, gk_model: GCWModel) -> dict:
    """For each K-cell t.e, the gKg^-1-cell d.e whose orbit contains sigma t.e,
    with u such that x -> u x u^-1 maps Stab_K(t.e) onto Stab(d.e)."""
    t_up = gk_model.transversal
    rep_of = {(lab, j): cl[0] for lab, cls in gk_model.classes.items()
              for cl in cls for j in cl}
    out = {}
    for c in k_model.all_cells():
        base = gamma.cell(c.base).stabilizer
        y = SIGMA * c.translate
        m = coset_reduce(y, t_up)
        n = rep_of[(c.base, m)]
        dm, dni = t_up.reps[m], t_up.reps[n].inverse()
        s = next(s for s in (base.identity,) + base.elements if dm * s * dni in t_up.subgroup)
        h = y * s * dni
        target = next(x for x in gk_model.cells[c.dim]
                      if x.base == c.base and x.translate == t_up.reps[n])
        out[c.label] = (target, h.inverse() * SIGMA)
    return out


def aligned_conjugate_model(gamma: GCWModel, k_model: GCWModel, p: GaussianPrime):
    """The gKg^-1 model with cells listed in the order of their K-partners and
    stabilizer generator data transported along the conjugation, so both
    models use matching character orderings.  Returns (model, transport)."""
    gk = split_orbits(gamma, p, coset_transversal(p, UPPER))
    transport = _sigma_transport(gamma, k_model, gk)
    cells = []
    for cs in k_model.cells:
        row = []
        for c in cs:
            target, u = transport[c.label]
            ui = u.inverse()
            stab = target.stabilizer.with_generators(tuple(u * g * ui for g in c.stabilizer.generators))
            row.append(OrbitCell(target.dim, target.label, stab, target.translate,
                                 target.boundary, target.base))
        cells.append(tuple(row))
    if sorted(c.label for c in gk.all_cells()) != sorted(x.label for cs in cells for x in cs):
        raise ComplexInconsistent("conjugation does not match the cells of the two models")
    model = GCWModel(gk.group_tag, tuple(cells), gk.subgroup, gk.transversal, gk.classes)
    model.validate()
    transport = {lab: (model.cell(t.label), u) for lab, (t, u) in transport.items()}
    return model, transport


def conjugation_chain_map(k_model: GCWModel, gk_model: GCWModel, transport: dict) -> dict:
    out = {}
    for n, (cs_k, cs_gk) in enumerate(zip(k_model.cells, gk_model.cells)):
        blocks = {}
        for c in cs_k:
            target, u = transport[c.label]
            blocks[(target.label, c.label)] = _as_int(
                conjugation_map(c.stabilizer, target.stabilizer, u))
        out[n] = _blocks_to_matrix(blocks, cs_gk, cs_k)
    return out


def _compose(f: dict, g: dict) -> dict:
    """f after g, degreewise."""
    return {n: f[n] @ g[n] for n in g}


@dataclass(frozen=True)
class HeckeData:
    prime: GaussianPrime
    res: dict
    adg: dict
    cores: dict
    on_H: tuple
    on_K0: IntMatrix
    on_K1: IntMatrix
    gamma_complex: BredonComplex = field(repr=False)
    k_complex: BredonComplex = field(repr=False)
    gk_complex: BredonComplex = field(repr=False)

    @property
    def on_H0(self) -> IntMatrix:
        return self.on_H[0]

    @property
    def on_H1(self) -> IntMatrix:
        return self.on_H[1]

    @property
    def on_H2(self) -> IntMatrix:
        return self.on_H[2]

    @property
    def char_poly_H0(self) -> list[int]:
        return charpoly(self.on_H0)

    def chain_operator(self) -> dict:
        return _compose(self.cores, _compose(self.adg, self.res))

    def to_json(self) -> dict:
        return {"prime": str(self.prime),
                "on_H0": self.on_H0.tolist(), "on_H1": self.on_H1.tolist(),
                "on_H2": self.on_H2.tolist(),
                "on_K0": self.on_K0.tolist(), "on_K1": self.on_K1.tolist(),
                "char_poly_H0": self.char_poly_H0}


def _block_diag(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return block_matrix({(0, 0): a, (1, 1): b}, [a.rows, b.rows], [a.cols, b.cols])


def hecke_operator(p: GaussianPrime, gamma: GCWModel | None = None) -> HeckeData:
    """Hecke operator of diag(p, 1) on Bredon homology of Gamma_1.

    Every chain map is checked against both differentials, and the induced
    maps of the composite are checked against the product of the induced
    maps of the three factors.
    """
    gamma = gamma or gamma1_model()
    k_model = split_orbits(gamma, p, coset_transversal(p, LOWER))
    gk_model, transport = aligned_conjugate_model(gamma, k_model, p)
    cg = bredon_complex(gamma, HOMOLOGY)
    ck = bredon_complex(k_model, HOMOLOGY)
    cgk = bredon_complex(gk_model, HOMOLOGY)
    res = restriction_chain_map(gamma, k_model)
    adg = conjugation_chain_map(k_model, gk_model, transport)
    cores = corestriction_chain_map(gk_model, gamma)
    check_chain_map(cg.chain, ck.chain, res, "restriction")
    check_chain_map(ck.chain, cgk.chain, adg, "conjugation")
    check_chain_map(cgk.chain, cg.chain, cores, "corestriction")
    total = _compose(cores, _compose(adg, res))
    on_h = []
    for n in range(3):
        direct = induced_on_homology(cg.chain, cg.chain, total, n)
        factored = (induced_on_homology(cgk.chain, cg.chain, cores, n)
                    @ induced_on_homology(ck.chain, cgk.chain, adg, n)
                    @ induced_on_homology(cg.chain, ck.chain, res, n))
        if not cg.chain.homology(n).reduce_rows(direct - factored).is_zero():
            raise NotChainMap(f"Hecke operator does not factor on H_{n}", degree=n)
        on_h.append(direct)
    return HeckeData(p, res, adg, cores, tuple(on_h), _block_diag(on_h[2], on_h[0]), on_h[1],
                     cg, ck, cgk)
