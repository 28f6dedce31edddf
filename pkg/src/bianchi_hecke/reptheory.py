"""Finite subgroups of PSL_2(Z[i]), their character tables, and the maps
between representation rings as integer matrices.

Group elements only need ``*``, ``inverse()``, ``is_identity()`` and a total
order; both ProjectiveMatrix and the small Perm class below qualify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

from .cyclotomic import Cyc
from .errors import NotClosed, NotIsomorphism, NotSubgroup, UnknownType

ORDERS = {"C1": 1, "C2": 2, "C3": 3, "C4": 4, "D2": 4, "S3": 6, "A4": 12}
SUPPORTED = tuple(ORDERS)


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple

    def __mul__(self, other: Perm) -> Perm:
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))


def element_order(x, bound: int = 64) -> int:
    y, k = x, 1
    while not y.is_identity():
        y, k = y * x, k + 1
        if k > bound:
            raise NotClosed(f"{x} has order larger than {bound}")
    return k


def generate(gens, identity=None) -> tuple:
    """Closure of ``gens`` under multiplication (finite groups only)."""
    gens = list(gens)
    if identity is None:
        if not gens:
            raise ValueError("need an identity element for the empty generating set")
        identity = gens[0] * gens[0].inverse()
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if len(seen) > 1000:
            raise NotClosed("generated group is not one of the supported finite types")
    return tuple(sorted(seen))


@dataclass(frozen=True)
class FiniteMatrixGroup:
    """A finite group given by its elements.

    ``generators`` is the datum fixing the character ordering: the generator
    of a cyclic group, the ordered pair of a D2, the 3-cycle of an A4.
    """

    elements: tuple
    iso_type: str
    generators: tuple = ()
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self):
        return next(x for x in self.elements if x.is_identity())

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.element_set

    def __len__(self):
        return len(self.elements)

    def is_subgroup_of(self, other: FiniteMatrixGroup) -> bool:
        return self.element_set <= other.element_set

    def conjugate(self, u, name: str = "") -> FiniteMatrixGroup:
        """u H u^-1, carrying the generator datum along."""
        ui = u.inverse()
        return FiniteMatrixGroup(
            tuple(sorted(u * x * ui for x in self.elements)), self.iso_type,
            tuple(u * x * ui for x in self.generators), name)

    def with_generators(self, gens) -> FiniteMatrixGroup:
        return identify(self.elements, gens, self.name)

    def __str__(self):
        return f"{self.iso_type}{'(' + self.name + ')' if self.name else ''}"


def _census(elements) -> dict:
    counts: dict[int, int] = {}
    for x in elements:
        k = element_order(x)
        counts[k] = counts.get(k, 0) + 1
    return counts


def _classify(n: int, census: dict) -> str:
    if n == 1:
        return "C1"
    if n == 2:
        return "C2"
    if n == 3:
        return "C3"
    if n == 4:
        return "C4" if census.get(4) else "D2"
    if n == 6 and census.get(2) == 3 and census.get(3) == 2:
        return "S3"
    if n == 12 and census.get(2) == 3 and census.get(3) == 8:
        return "A4"
    raise UnknownType(f"group of order {n} with element orders {sorted(census.items())} "
                      "is not a supported type")


def _default_generators(iso_type: str, elements) -> tuple:
    by_order: dict[int, list] = {}
    for x in elements:
        by_order.setdefault(element_order(x), []).append(x)
    if iso_type == "C1":
        return ()
    if iso_type in ("C2", "C3", "C4"):
        return (by_order[ORDERS[iso_type]][0],)
    if iso_type == "D2":
        return tuple(by_order[2][:2])
    if iso_type == "S3":
        return (by_order[3][0], by_order[2][0])
    return (by_order[3][0], by_order[2][0])


def _check_generators(iso_type: str, gens: tuple, elements) -> None:
    bad = None
    if iso_type in ("C2", "C3", "C4"):
        if not gens or element_order(gens[0]) != ORDERS[iso_type]:
            bad = "first generator must have full order"
    elif iso_type == "D2":
        if len(gens) < 2 or gens[0] == gens[1] or any(g.is_identity() for g in gens[:2]):
            bad = "need two distinct nontrivial generators"
    elif iso_type == "A4":
        if not gens or element_order(gens[0]) != 3:
            bad = "first generator must have order 3"
    if bad:
        raise UnknownType(f"generators {[str(g) for g in gens]} do not fit {iso_type}: {bad}")


def identify(elements, generators=None, name: str = "") -> FiniteMatrixGroup:
    """Determine the isomorphism type from order and element-order census.

    ``generators`` (if given) must lie in the group and fixes the character
    ordering; otherwise canonical-minimal elements are used.
    """
    elements = tuple(sorted(set(elements)))
    element_set = set(elements)
    for x in elements:
        if x.inverse() not in element_set:
            raise NotClosed(f"inverse of {x} missing")
        for y in elements:
            if x * y not in element_set:
                raise NotClosed(f"product {x} * {y} missing")
    iso_type = _classify(len(elements), _census(elements))
    if generators is None:
        generators = _default_generators(iso_type, elements)
    generators = tuple(generators)
    if not all(g in element_set for g in generators):
        raise NotSubgroup("generators outside the group")
    _check_generators(iso_type, generators, elements)
    return FiniteMatrixGroup(elements, iso_type, generators, name)


def group_from_generators(gens, name: str = "", datum=None, identity=None) -> FiniteMatrixGroup:
    gens = tuple(gens)
    return identify(generate(gens, identity), gens if datum is None else datum, name)


# -- character tables --------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    iso_type: str
    group: FiniteMatrixGroup = field(repr=False)
    classes: tuple
    class_sizes: tuple
    char_names: tuple
    chars: tuple  # chars[i][k]: value of character i on class k
    class_index: dict = field(repr=False, compare=False, hash=False)

    @property
    def size(self) -> int:
        return len(self.chars)

    @property
    def dims(self) -> tuple:
        return tuple(int(row[0].rational()) for row in self.chars)

    def value(self, i: int, x) -> Cyc:
        return self.chars[i][self.class_index[x]]

    def inner(self, f: Callable, g: Callable) -> Fraction:
        """<f, g> = 1/|G| sum f(x) conj(g(x)), summed class by class."""
        total = Cyc.of(0)
        for rep, size in zip(self.classes, self.class_sizes):
            total = total + f(rep) * g(rep).conj() * size
        return (total / self.group.order).rational()

    def decompose(self, f: Callable) -> list[int]:
        out = []
        for i in range(self.size):
            m = self.inner(f, lambda x, i=i: self.value(i, x))
            if m.denominator != 1:
                raise ValueError(f"class function is not a virtual character (multiplicity {m})")
            out.append(int(m))
        return out

    def to_json(self) -> dict:
        return {
            "type": self.iso_type,
            "order": self.group.order,
            "classes": [_elt_json(x) for x in self.classes],
            "class_sizes": list(self.class_sizes),
            "characters": [{"name": n, "values": [v.to_json() for v in row]}
                           for n, row in zip(self.char_names, self.chars)],
        }

    def render(self) -> str:
        cols = [f"[{k}] |{s}|" for k, s in enumerate(self.class_sizes)]
        rows = [[str(v) for v in row] for row in self.chars]
        width = max(len(c) for c in cols + [x for r in rows for x in r])
        namew = max(len(n) for n in self.char_names)
        lines = [f"{self.iso_type} (order {self.group.order})",
                 " " * (namew + 2) + " ".join(c.rjust(width) for c in cols)]
        for n, r in zip(self.char_names, rows):
            lines.append(n.ljust(namew) + "  " + " ".join(x.rjust(width) for x in r))
        lines.append("classes:")
        for k, x in enumerate(self.classes):
            lines.append(f"  [{k}] {x}")
        return "\n".join(lines)


def _elt_json(x):
    return x.to_json() if hasattr(x, "to_json") else list(x.images)


def conjugacy_classes(group: FiniteMatrixGroup) -> list[tuple]:
    seen = set()
    classes = []
    for x in group.elements:
        if x in seen:
            continue
        orbit = {g * x * g.inverse() for g in group.elements}
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: (element_order(c[0]), c[0]))
    return classes


def _power_index(g, x, n: int) -> int:
    y = g.inverse() * g
    for k in range(n):
        if y == x:
            return k
        y = y * g
    raise ValueError(f"{x} is not a power of {g}")


def _class_functions(group: FiniteMatrixGroup):
    t = group.iso_type
    gens = group.generators
    if t == "C1":
        return ("1",), [lambda x: Cyc.of(1)]
    if t in ("C2", "C3", "C4"):
        n = ORDERS[t]
        g = gens[0]
        return (tuple(f"chi{j}" for j in range(n)),
                [lambda x, j=j: Cyc.zeta(j * _power_index(g, x, n), n) for j in range(n)])
    if t == "D2":
        x0, y0 = gens[0], gens[1]
        exps = {}
        for a in range(2):
            for b in range(2):
                exps[_pow(x0, a) * _pow(y0, b)] = (a, b)

        def sign(x, sa, sb):
            a, b = exps[x]
            return Cyc.of((sa ** a) * (sb ** b))
        patterns = ((1, 1), (1, -1), (-1, 1), (-1, -1))
        names = tuple("".join("+" if s > 0 else "-" for s in pat) for pat in patterns)
        return names, [lambda x, p=p: sign(x, *p) for p in patterns]
    if t == "S3":
        return (("1", "sgn", "std"),
                [lambda x: Cyc.of(1),
                 lambda x: Cyc.of(-1 if element_order(x) == 2 else 1),
                 lambda x: Cyc.of({1: 2, 2: 0, 3: -1}[element_order(x)])])
    if t == "A4":
        r = gens[0]
        klein = [x for x in group.elements if element_order(x) <= 2]
        coset = {}
        for k in range(3):
            for v in klein:
                coset[_pow(r, k) * v] = k
        return (("1", "w", "w^2", "std"),
                [lambda x: Cyc.of(1),
                 lambda x: Cyc.zeta(coset[x], 3),
                 lambda x: Cyc.zeta(2 * coset[x], 3),
                 lambda x: Cyc.of({1: 3, 2: -1, 3: 0}[element_order(x)])])
    raise UnknownType(t)


def _pow(x, k: int):
    y = x * x.inverse()
    for _ in range(k):
        y = y * x
    return y


_TABLES: dict = {}


def character_table(group) -> CharacterTable:
    """Exact character table; accepts a group or an iso_type name."""
    if isinstance(group, str):
        group = abstract_group(group)
    key = (group.elements, group.generators)
    if key in _TABLES:
        return _TABLES[key]
    classes = conjugacy_classes(group)
    names, funcs = _class_functions(group)
    index = {x: k for k, cl in enumerate(classes) for x in cl}
    chars = tuple(tuple(f(cl[0]) for cl in classes) for f in funcs)
    table = CharacterTable(group.iso_type, group, tuple(cl[0] for cl in classes),
                           tuple(len(cl) for cl in classes), names, chars, index)
    _TABLES[key] = table
    return table


_ABSTRACT_GENS = {
    "C1": ((0,),),
    "C2": ((1, 0),),
    "C3": ((1, 2, 0),),
    "C4": ((1, 2, 3, 0),),
    "D2": ((1, 0, 3, 2), (2, 3, 0, 1)),
    "S3": ((1, 2, 0), (1, 0, 2)),
    "A4": ((1, 2, 0, 3), (1, 0, 3, 2)),
}


def abstract_group(iso_type: str) -> FiniteMatrixGroup:
    if iso_type not in _ABSTRACT_GENS:
        raise UnknownType(f"unsupported group type {iso_type!r}; expected one of {SUPPORTED}")
    gens = tuple(Perm(g) for g in _ABSTRACT_GENS[iso_type])
    return group_from_generators(gens, name=iso_type)


# -- maps between representation rings ----------------------------------------

@dataclass(frozen=True)
class RepRingMap:
    """Integer matrix; column j holds the target coordinates of the image of
    the j-th source irreducible."""

    source: CharacterTable
    target: CharacterTable
    matrix: tuple

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def _conj_map(via):
    if via is None:
        return lambda x: x
    vi = via.inverse()
    return lambda x: vi * x * via


def restriction_matrix(G: FiniteMatrixGroup, H: FiniteMatrixGroup, via=None) -> RepRingMap:
    """Restriction R(G) -> R(H) along x -> via^-1 x via (inclusion if via is None).

    Entry [j][i] is the multiplicity of the j-th irreducible of H in the
    pulled-back i-th irreducible of G.
    """
    phi = _conj_map(via)
    if not all(phi(x) in G for x in H.elements):
        raise NotSubgroup(f"{H} does not map into {G}")
    tg, th = character_table(G), character_table(H)
    cols = [th.decompose(lambda x, i=i: tg.value(i, phi(x))) for i in range(tg.size)]
    return RepRingMap(tg, th, tuple(tuple(col[j] for col in cols) for j in range(th.size)))


def induction_matrix(H: FiniteMatrixGroup, G: FiniteMatrixGroup, via=None) -> RepRingMap:
    """Induction R(H) -> R(G), H transported into G by x -> via^-1 x via.

    Computed from the induced-character formula, not by transposition.
    """
    phi = _conj_map(via)
    image = {phi(x): x for x in H.elements}
    if len(image) != H.order or not all(y in G for y in image):
        raise NotSubgroup(f"{H} does not map into {G}")
    tg, th = character_table(G), character_table(H)
    cols = []
    for j in range(th.size):
        def induced(g, j=j):
            total = Cyc.of(0)
            for x in G.elements:
                y = x.inverse() * g * x
                if y in image:
                    total = total + th.value(j, image[y])
            return total / H.order
        cols.append(tg.decompose(induced))
    return RepRingMap(th, tg, tuple(tuple(col[i] for col in cols) for i in range(tg.size)))


def conjugation_map(H: FiniteMatrixGroup, H2: FiniteMatrixGroup, u) -> RepRingMap:
    """R(H) -> R(H2) induced by the isomorphism x -> u x u^-1.

    Always a permutation matrix; the permutation records how the two
    character orderings correspond.
    """
    ui = u.inverse() if not callable(u) else None
    fwd = u if callable(u) else (lambda x: u * x * ui)
    images = [fwd(x) for x in H.elements]
    if len(set(images)) != H.order or set(images) != H2.element_set:
        raise NotIsomorphism(f"conjugation does not carry {H} onto {H2}")
    back = dict(zip(images, H.elements))
    for x in H.elements:
        for y in H.elements:
            if fwd(x * y) != fwd(x) * fwd(y):
                raise NotIsomorphism("map is not multiplicative")
    t1, t2 = character_table(H), character_table(H2)
    cols = [t2.decompose(lambda y, i=i: t1.value(i, back[y])) for i in range(t1.size)]
    m = tuple(tuple(col[j] for col in cols) for j in range(t2.size))
    return RepRingMap(t1, t2, m)


def is_permutation_matrix(m) -> bool:
    n = len(m)
    return (all(len(r) == n for r in m)
            and all(sorted(r) == [0] * (n - 1) + [1] for r in m)
            and all(sorted(c) == [0] * (n - 1) + [1] for c in zip(*m)))
