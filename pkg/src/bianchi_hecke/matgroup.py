"""PSL_2(Z[i]): elements, the four standard generators, congruence subgroups
and coset bookkeeping."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import reduce as _fold
from math import isqrt

from .errors import NoCoset, NotPrimePower, ParseError, TransversalInvalid
from .gaussian import (GaussianInt, GaussianPrime, I, ONE, ZERO, classify_prime,
                       residues)


def _positive(z: GaussianInt) -> bool:
    return z.re > 0 or (z.re == 0 and z.im > 0)


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over Z[i] of arbitrary determinant."""

    a: GaussianInt
    b: GaussianInt
    c: GaussianInt
    d: GaussianInt

    @classmethod
    def of(cls, a, b, c, d) -> Mat2:
        co = GaussianInt.coerce
        return cls(co(a), co(b), co(c), co(d))

    def det(self) -> GaussianInt:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: Mat2) -> Mat2:
        return Mat2(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def adjugate(self) -> Mat2:
        return Mat2(self.d, -self.b, -self.c, self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def to_json(self):
        return [[self.a.to_json(), self.b.to_json()],
                [self.c.to_json(), self.d.to_json()]]

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def _sign_normal(key: tuple) -> tuple:
    re, im = next(z for z in key if z != (0, 0))
    if re > 0 or (re == 0 and im > 0):
        return key
    return tuple((-x, -y) for x, y in key)


@dataclass(frozen=True, order=True)
class ProjectiveMatrix:
    """An element of PSL_2(Z[i]) stored in sign-canonical form.

    The first nonzero entry among (a, b, c, d) is made "positive"
    (re > 0, or re == 0 and im > 0), so the two SL_2 lifts of an element
    compare and hash equal.
    """

    key: tuple = field(repr=False)

    @classmethod
    def from_sl2(cls, m: Mat2) -> ProjectiveMatrix:
        if m.det() != ONE:
            raise ValueError(f"determinant of {m} is {m.det()}, not 1")
        return cls._canonical(m)

    @classmethod
    def _canonical(cls, m: Mat2) -> ProjectiveMatrix:
        first = next(z for z in m.entries() if z)
        if not _positive(first):
            m = Mat2(-m.a, -m.b, -m.c, -m.d)
        return cls(tuple((z.re, z.im) for z in m.entries()))

    @classmethod
    def of(cls, a, b, c, d) -> ProjectiveMatrix:
        return cls.from_sl2(Mat2.of(a, b, c, d))

    @property
    def matrix(self) -> Mat2:
        return Mat2(*(GaussianInt(r, i) for r, i in self.key))

    a = property(lambda self: GaussianInt(*self.key[0]))
    b = property(lambda self: GaussianInt(*self.key[1]))
    c = property(lambda self: GaussianInt(*self.key[2]))
    d = property(lambda self: GaussianInt(*self.key[3]))

    def __mul__(self, other: ProjectiveMatrix) -> ProjectiveMatrix:
        # plain integer arithmetic on the key; this is the hot path
        (ar, ai), (br, bi), (cr, ci), (dr, di) = self.key
        (er, ei), (fr, fi), (gr, gi), (hr, hi) = other.key
        key = ((ar * er - ai * ei + br * gr - bi * gi, ar * ei + ai * er + br * gi + bi * gr),
               (ar * fr - ai * fi + br * hr - bi * hi, ar * fi + ai * fr + br * hi + bi * hr),
               (cr * er - ci * ei + dr * gr - di * gi, cr * ei + ci * er + dr * gi + di * gr),
               (cr * fr - ci * fi + dr * hr - di * hi, cr * fi + ci * fr + dr * hi + di * hr))
        return ProjectiveMatrix(_sign_normal(key))

    def inverse(self) -> ProjectiveMatrix:
        (ar, ai), (br, bi), (cr, ci), (dr, di) = self.key
        return ProjectiveMatrix(_sign_normal(((dr, di), (-br, -bi), (-cr, -ci), (ar, ai))))

    def __pow__(self, n: int) -> ProjectiveMatrix:
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self == IDENTITY

    def order(self, bound: int = 64) -> int:
        x, k = self, 1
        while not x.is_identity():
            x, k = x * self, k + 1
            if k > bound:
                return 0
        return k

    def conjugate_by(self, g: ProjectiveMatrix) -> ProjectiveMatrix:
        """g x g^-1"""
        return g * self * g.inverse()

    def to_json(self):
        return self.matrix.to_json()

    def __str__(self):
        return str(self.matrix)

    def __repr__(self):
        return f"ProjectiveMatrix({self})"


IDENTITY = ProjectiveMatrix(((1, 0), (0, 0), (0, 0), (1, 0)))


def canonicalize(x: ProjectiveMatrix) -> ProjectiveMatrix:
    return ProjectiveMatrix._canonical(x.matrix)


def compose(x: ProjectiveMatrix, y: ProjectiveMatrix) -> ProjectiveMatrix:
    return x * y


def inverse(x: ProjectiveMatrix) -> ProjectiveMatrix:
    return x.inverse()


@dataclass(frozen=True)
class Generators:
    a: ProjectiveMatrix
    b: ProjectiveMatrix
    c: ProjectiveMatrix
    d: ProjectiveMatrix

    def as_dict(self) -> dict[str, ProjectiveMatrix]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


GENS = Generators(
    a=ProjectiveMatrix.of(0, I, I, 1),
    b=ProjectiveMatrix.of(0, I, I, 0),
    c=ProjectiveMatrix.of(1, 1, -1, 0),
    d=ProjectiveMatrix.of(0, -1, 1, 0),
)

# a^3 = b^2 = c^3 = d^2 = (ac)^2 = (ad)^2 = (bd)^2 = (bc)^2 = 1
RELATORS = ("a^3", "b^2", "c^3", "d^2", "(a*c)^2", "(a*d)^2", "(b*d)^2", "(b*c)^2")

SIGMA = ProjectiveMatrix.of(0, -1, 1, 0)


_TOKEN = re.compile(r"\s*(?:([abcd])|(\()|(\))|(\*)|(\^)\s*(-?\d+))")


def parse_word(text: str, gens: Generators | dict = GENS) -> ProjectiveMatrix:
    """Evaluate a generator word such as ``"a*c^2*d"`` or ``"(a*c)^2"``.

    ``*`` is optional between factors; ``^`` takes a (possibly negative)
    integer exponent.
    """
    table = gens.as_dict() if isinstance(gens, Generators) else gens
    stack: list[list[ProjectiveMatrix]] = [[]]
    pos = 0
    s = text.strip()
    if not s:
        return IDENTITY
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(text, pos, "unexpected character")
        letter, lpar, rpar, _star, caret, exp = m.groups()
        if letter:
            stack[-1].append(table[letter])
        elif lpar:
            stack.append([])
        elif rpar:
            if len(stack) == 1:
                raise ParseError(text, pos, "unbalanced ')'")
            inner = stack.pop()
            stack[-1].append(_fold(lambda x, y: x * y, inner, IDENTITY))
        elif caret:
            if not stack[-1]:
                raise ParseError(text, pos, "exponent without base")
            stack[-1][-1] = stack[-1][-1] ** int(exp)
        pos = m.end()
    if len(stack) != 1:
        raise ParseError(text, len(s), "unbalanced '('")
    return _fold(lambda x, y: x * y, stack[0], IDENTITY)


def verify_presentation(gens: Generators = GENS, relators=RELATORS) -> bool:
    return all(parse_word(w, gens).is_identity() for w in relators)


def random_word(rng: random.Random, max_len: int = 20,
                gens: Generators = GENS) -> ProjectiveMatrix:
    letters = list(gens.as_dict().values())
    x = IDENTITY
    for _ in range(rng.randint(0, max_len)):
        x = x * rng.choice(letters)
    return x


# -- congruence subgroups ----------------------------------------------------

LOWER, UPPER = "lower", "upper"


@dataclass(frozen=True)
class CongruenceSubgroup:
    """``lower``: c = 0 mod p, the group K = Gamma_1 cap g^-1 Gamma_1 g for
    g = diag(p, 1).  ``upper``: b = 0 mod p, which is g K g^-1."""

    prime: GaussianPrime
    kind: str = LOWER

    def __contains__(self, x: ProjectiveMatrix) -> bool:
        entry = x.c if self.kind == LOWER else x.b
        return self.prime.value.divides(entry)

    @property
    def tag(self) -> str:
        return f"K({self.prime})" if self.kind == LOWER else f"gKg^-1({self.prime})"


def in_congruence_subgroup(x: ProjectiveMatrix, p: GaussianPrime) -> bool:
    return x in CongruenceSubgroup(p, LOWER)


@dataclass(frozen=True)
class CosetTransversal:
    """Representatives of the right cosets H\\Gamma_1, listed as the unipotent
    matrices indexed by residues followed by sigma."""

    prime: GaussianPrime
    reps: tuple
    names: tuple
    subgroup: CongruenceSubgroup

    def __len__(self):
        return len(self.reps)

    def index_of_name(self, name: str) -> int:
        return self.names.index(name)


def coset_transversal(p: GaussianPrime, kind: str = LOWER) -> CosetTransversal:
    sub = CongruenceSubgroup(p, kind)
    reps, names = [], []
    for z in residues(p):
        if kind == LOWER:
            reps.append(ProjectiveMatrix.of(1, 0, z, 1))
        else:
            reps.append(ProjectiveMatrix.of(1, z, 0, 1))
        names.append(f"g[{z}]")
    reps.append(SIGMA)
    names.append("s")
    for i, x in enumerate(reps):
        for j in range(i):
            if x * reps[j].inverse() in sub:
                raise TransversalInvalid(
                    f"{names[i]} and {names[j]} lie in the same coset of {sub.tag}")
    return CosetTransversal(p, tuple(reps), tuple(names), sub)


def coset_reduce(x: ProjectiveMatrix, t: CosetTransversal) -> int:
    """Index j with x * reps[j]^-1 in the subgroup."""
    for j, r in enumerate(t.reps):
        if x * r.inverse() in t.subgroup:
            return j
    raise NoCoset(f"{x} matches no representative of {t.subgroup.tag}")


def _prime_power(q: int):
    if q < 2:
        return None
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return q


def psl2_order_fq(q: int) -> int:
    """Order of SL_2(F_q)/{+-I}."""
    if _prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    n = q * (q * q - 1)
    return n if q % 2 == 0 else n // 2


def double_coset_left_reps(p: GaussianPrime | None) -> list[Mat2]:
    """Matrices alpha_j with Gamma_1 g Gamma_1 = disjoint union Gamma_1 alpha_j
    for g = diag(p, 1); ``p=None`` stands for g = identity."""
    if p is None:
        return [Mat2.of(1, 0, 0, 1)]
    g = Mat2(p.value, ZERO, ZERO, ONE)
    alphas = [g * t.matrix for t in coset_transversal(p).reps]
    for i, x in enumerate(alphas):
        for j in range(i):
            # alpha_i alpha_j^-1 lies in scalar * SL_2(Z[i]) iff every entry of
            # alpha_i adj(alpha_j) (determinant p^2) is divisible by p
            m = x * alphas[j].adjugate()
            if all(p.value.divides(z) for z in m.entries()):
                raise TransversalInvalid(f"alpha_{i} and alpha_{j} share a coset")
    return alphas


def parse_prime(text: str) -> GaussianPrime:
    return classify_prime(GaussianInt.coerce(text))
