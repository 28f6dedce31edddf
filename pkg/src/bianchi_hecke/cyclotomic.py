"""Exact arithmetic in Q(zeta_12).

Elements are coordinate vectors over the power basis 1, z, z^2, z^3 where
z = exp(2 pi i / 12) satisfies z^4 = z^2 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEGREE = 4


def _reduce_poly(coeffs: list) -> tuple:
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        v = c[k]
        if v:
            c[k] = 0
            c[k - 2] += v
            c[k - 4] -= v
    c += [0] * (DEGREE - len(c))
    return tuple(Fraction(v) for v in c[:DEGREE])


@dataclass(frozen=True)
class Cyc:
    coords: tuple

    @classmethod
    def of(cls, value) -> Cyc:
        if isinstance(value, Cyc):
            return value
        return cls((Fraction(value), Fraction(0), Fraction(0), Fraction(0)))

    @classmethod
    def zeta(cls, k: int, n: int = 12) -> Cyc:
        """exp(2 pi i k / n) for n dividing 12."""
        if 12 % n:
            raise ValueError(f"zeta_{n} does not lie in Q(zeta_12)")
        e = (k * (12 // n)) % 12
        poly = [0] * (e + 1)
        poly[e] = 1
        return cls(_reduce_poly(poly))

    def __add__(self, other):
        other = Cyc.of(other)
        return Cyc(tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-Cyc.of(other))

    def __mul__(self, other):
        other = Cyc.of(other)
        prod = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(self.coords):
            if x:
                for j, y in enumerate(other.coords):
                    prod[i + j] += x * y
        return Cyc(_reduce_poly(prod))

    __rmul__ = __mul__

    def __truediv__(self, n):
        if isinstance(n, Cyc):
            raise TypeError("division by field elements is not needed here")
        return Cyc(tuple(x / n for x in self.coords))

    def conj(self) -> Cyc:
        # z -> z^-1 = z^11
        out = Cyc.of(0)
        for k, x in enumerate(self.coords):
            if x:
                out = out + Cyc.zeta(-k) * x
        return out

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.of(other)
        return isinstance(other, Cyc) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_json(self) -> list:
        return [str(x) for x in self.coords]

    def __complex__(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / 12)
        return sum(complex(float(x)) * z ** k for k, x in enumerate(self.coords))

    def __str__(self):
        known = _NAMES.get(self.coords)
        if known is not None:
            return known
        terms = []
        for k, x in enumerate(self.coords):
            if x:
                terms.append(f"{x}" if k == 0 else f"{x}*z^{k}")
        return " + ".join(terms) or "0"

    __repr__ = __str__


def _named():
    names = {}
    for n, sym in ((3, "w"), (4, "i")):
        for k in range(1, n):
            names[Cyc.zeta(k, n).coords] = sym if k == 1 else f"{sym}^{k}"
            names[(-Cyc.zeta(k, n)).coords] = f"-{names[Cyc.zeta(k, n).coords]}"
    for v in range(-4, 5):
        names[Cyc.of(v).coords] = str(v)
    return names


_NAMES = _named()
