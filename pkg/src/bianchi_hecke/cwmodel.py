"""Equivariant CW models: the stabilizer-labelled square for Gamma_1 and the
orbit-split structure for a finite-index subgroup."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ComplexInconsistent, InvariantError
from .gaussian import GaussianPrime
from .matgroup import (GENS, IDENTITY, CongruenceSubgroup, CosetTransversal,
                       ProjectiveMatrix, coset_reduce, coset_transversal)
from .reptheory import (FiniteMatrixGroup, character_table, group_from_generators,
                        identify)

GAMMA1 = "Gamma1"


@dataclass(frozen=True)
class Incidence:
    """The face ``carrier . target`` of a cell, with orientation sign."""

    sign: int
    target: str
    carrier: ProjectiveMatrix = IDENTITY


@dataclass(frozen=True)
class OrbitCell:
    dim: int
    label: str
    stabilizer: FiniteMatrixGroup
    translate: ProjectiveMatrix = IDENTITY
    boundary: tuple = ()
    base: str = ""  # label of the Gamma_1 cell this one translates

    @property
    def rank(self) -> int:
        return character_table(self.stabilizer).size


@dataclass(frozen=True)
class GCWModel:
    group_tag: str
    cells: tuple  # cells[n] = tuple of OrbitCell of dimension n
    subgroup: CongruenceSubgroup | None = None
    transversal: CosetTransversal | None = None
    classes: dict = field(default_factory=dict, compare=False)  # base label -> list of index classes

    @property
    def dimension(self) -> int:
        return max((n for n, cs in enumerate(self.cells) if cs), default=-1)

    def cell(self, label: str) -> OrbitCell:
        for cs in self.cells:
            for c in cs:
                if c.label == label:
                    return c
        raise KeyError(label)

    def all_cells(self):
        for cs in self.cells:
            yield from cs

    def counts(self) -> tuple:
        return tuple(len(cs) for cs in self.cells)

    def validate(self) -> None:
        """Faces have dimension one less and stabilizers embed into them."""
        for c in self.all_cells():
            for inc in c.boundary:
                t = self.cell(inc.target)
                if t.dim != c.dim - 1:
                    raise ComplexInconsistent(f"{c.label} -> {t.label}: dimension mismatch")
                hi = inc.carrier.inverse()
                if not all(hi * x * inc.carrier in t.stabilizer for x in c.stabilizer.elements):
                    raise ComplexInconsistent(
                        f"stabilizer of {c.label} does not embed into that of {t.label}")
                if self.subgroup is not None and inc.carrier not in self.subgroup:
                    raise ComplexInconsistent(f"carrier of {c.label} -> {t.label} not in {self.group_tag}")

    def to_json(self) -> dict:
        return {
            "group": self.group_tag,
            "cells": [[{
                "dim": c.dim,
                "label": c.label,
                "stabilizer": {"type": c.stabilizer.iso_type,
                               "elements": [x.to_json() for x in c.stabilizer.elements]},
                "translate": c.translate.to_json(),
                "boundary": [[inc.sign, inc.target, inc.carrier.to_json()] for inc in c.boundary],
            } for c in cs] for cs in self.cells],
        }


def empty_model() -> GCWModel:
    return GCWModel("empty", ((), (), ()))


def gamma1_model() -> GCWModel:
    """The square P(A4) - Q(S3) - R(D2) - S(S3') with one free 2-cell.

    Edges run P->Q->R->S->P; the 2-cell has incidence +1 on each edge.
    """
    a, b, c, d = GENS.a, GENS.b, GENS.c, GENS.d

    def grp(*gens, name):
        return group_from_generators(gens, name=name)

    verts = (
        OrbitCell(0, "P", grp(a, c, name="A4")),
        OrbitCell(0, "Q", grp(a, d, name="S3")),
        OrbitCell(0, "R", grp(d, b, name="D2")),
        OrbitCell(0, "S", grp(c, b, name="S3'")),
    )
    edge_data = (("PQ", (a,), "C3", "P", "Q"),
                 ("QR", (d,), "C2'", "Q", "R"),
                 ("RS", (b,), "C2", "R", "S"),
                 ("SP", (c,), "C3'", "S", "P"))
    edges = tuple(OrbitCell(1, lab, grp(*g, name=nm),
                            boundary=(Incidence(-1, tail), Incidence(1, head)))
                  for lab, g, nm, tail, head in edge_data)
    trivial = group_from_generators((), name="1", identity=IDENTITY)
    face = OrbitCell(2, "E", trivial,
                     boundary=tuple(Incidence(1, e.label) for e in edges))
    model = GCWModel(GAMMA1, (_with_base(verts), _with_base(edges), _with_base((face,))))
    model.validate()
    return model


def _with_base(cells):
    return tuple(OrbitCell(c.dim, c.label, c.stabilizer, c.translate, c.boundary, c.label)
                 for c in cells)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self):
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values())


def orbit_classes(stab: FiniteMatrixGroup, t: CosetTransversal) -> list[list[int]]:
    """Partition transversal indices: j ~ l iff reps[j] s reps[l]^-1 lies in
    the subgroup for some s in ``stab``."""
    uf = _UnionFind(len(t))
    for j, r in enumerate(t.reps):
        for s in stab.elements:
            uf.union(j, coset_reduce(r * s, t))
    return uf.classes()


def sub_label(t: CosetTransversal, j: int, label: str) -> str:
    """Label of the translate reps[j] . label; the identity rep keeps the bare label."""
    return label if t.reps[j].is_identity() else f"{t.names[j]}.{label}"


def _intersected_stabilizer(stab: FiniteMatrixGroup, u: ProjectiveMatrix,
                            sub: CongruenceSubgroup, name: str) -> FiniteMatrixGroup:
    conj = stab.conjugate(u)
    elements = [x for x in conj.elements if x in sub]
    gens = conj.generators
    if len(elements) == conj.order:
        return identify(elements, gens, name)
    return identify(elements, None, name)


def split_orbits(model: GCWModel, p: GaussianPrime, t: CosetTransversal | None = None) -> GCWModel:
    """Refine each Gamma_1-orbit of cells into orbits of the subgroup of ``t``."""
    if model.group_tag != GAMMA1:
        raise ValueError("orbit splitting starts from the Gamma_1 model")
    if t is None:
        t = coset_transversal(p)
    sub = t.subgroup
    classes = {c.label: orbit_classes(c.stabilizer, t) for c in model.all_cells()}
    rep_of = {}
    for lab, cls in classes.items():
        for cl in cls:
            for j in cl:
                rep_of[(lab, j)] = cl[0]

    new_cells = []
    for cs in model.cells:
        out = []
        for e in cs:
            for cl in classes[e.label]:
                j = cl[0]
                tj = t.reps[j]
                lab = sub_label(t, j, e.label)
                stab = _intersected_stabilizer(e.stabilizer, tj, sub, lab)
                boundary = []
                for inc in e.boundary:
                    f = model.cell(inc.target)
                    x = tj * inc.carrier
                    m = coset_reduce(x, t)
                    l = rep_of[(f.label, m)]
                    tm_, tl = t.reps[m], t.reps[l]
                    tli = tl.inverse()
                    candidates = (f.stabilizer.identity,) + f.stabilizer.elements
                    s = next((s for s in candidates if tm_ * s * tli in sub), None)
                    if s is None:
                        raise InvariantError(f"no stabilizer element joins indices {m}, {l} of {f.label}")
                    h = x * s * tli
                    boundary.append(Incidence(inc.sign, sub_label(t, l, f.label), h))
                out.append(OrbitCell(e.dim, lab, stab, tj, tuple(boundary), e.label))
        new_cells.append(tuple(out))
    result = GCWModel(sub.tag, tuple(new_cells), sub, t, classes)
    result.validate()
    return result


def congruence_model(p: GaussianPrime, kind: str = "lower") -> GCWModel:
    return split_orbits(gamma1_model(), p, coset_transversal(p, kind))


@dataclass(frozen=True)
class ModelSummary:
    group_tag: str
    counts: tuple
    stabilizer_types: tuple
    ranks: tuple

    def render(self) -> str:
        lines = [f"model {self.group_tag}: cells per dimension {self.counts}, "
                 f"Bredon chain ranks {self.ranks}"]
        for n, types in enumerate(self.stabilizer_types):
            lines.append(f"  dim {n}: " + ", ".join(f"{lab}[{ty}]" for lab, ty in types))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"group": self.group_tag, "counts": list(self.counts),
                "stabilizers": [[{"label": lab, "type": ty} for lab, ty in types]
                                for types in self.stabilizer_types],
                "ranks": list(self.ranks)}


def model_summary(model: GCWModel) -> ModelSummary:
    return ModelSummary(
        model.group_tag,
        model.counts(),
        tuple(tuple((c.label, c.stabilizer.iso_type) for c in cs) for cs in model.cells),
        tuple(sum(c.rank for c in cs) for cs in model.cells),
    )
