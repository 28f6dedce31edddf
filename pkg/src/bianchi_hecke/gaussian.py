"""Gaussian integers Z[i], prime classification and residue systems."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import isqrt

from .errors import NotPrime, ParseError


@dataclass(frozen=True, order=True)
class GaussianInt:
    re: int
    im: int = 0

    @classmethod
    def coerce(cls, z) -> GaussianInt:
        if isinstance(z, GaussianInt):
            return z
        if isinstance(z, int):
            return cls(z, 0)
        if isinstance(z, complex) and z.real.is_integer() and z.imag.is_integer():
            return cls(int(z.real), int(z.imag))
        if isinstance(z, str):
            return parse_gaussian(z)
        raise TypeError(f"cannot interpret {z!r} as a Gaussian integer")

    def __add__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divides(self, other) -> bool:
        """True iff ``other`` is a multiple of ``self``."""
        other = GaussianInt.coerce(other)
        n = self.norm()
        if n == 0:
            return not other
        w = other * self.conj()
        return w.re % n == 0 and w.im % n == 0

    def exact_div(self, other) -> GaussianInt:
        other = GaussianInt.coerce(other)
        n = other.norm()
        w = self * other.conj()
        if n == 0 or w.re % n or w.im % n:
            raise ArithmeticError(f"{other} does not divide {self}")
        return GaussianInt(w.re // n, w.im // n)

    def to_json(self) -> dict:
        return {"re": self.re, "im": self.im}

    @classmethod
    def from_json(cls, obj) -> GaussianInt:
        return cls(int(obj["re"]), int(obj["im"]))

    def __str__(self):
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        if b == 1:
            ipart = "i"
        elif b == -1:
            ipart = "-i"
        else:
            ipart = f"{b}i"
        if a == 0:
            return ipart
        if ipart.startswith("-"):
            return f"{a}{ipart}"
        return f"{a}+{ipart}"

    def __repr__(self):
        return f"GaussianInt({self})"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


def norm(z) -> int:
    return GaussianInt.coerce(z).norm()


_TERM = re.compile(r"([+-]?)(\d*)(i?)")


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``"a+bi"``, ``"a-bi"``, ``"bi"``, ``"i"`` or a bare integer.

    Whitespace is ignored.  Positions in error messages refer to the
    whitespace-stripped string.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError(text, 0, "empty input")
    pos = 0
    re_part = im_part = 0
    seen_re = seen_im = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, unit = m.groups()
        if not digits and not unit:
            raise ParseError(text, pos, "expected a number or 'i'")
        if pos > 0 and not sign:
            raise ParseError(text, pos, "expected '+' or '-' between terms")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if unit:
            if seen_im:
                raise ParseError(text, pos, "imaginary part given twice")
            im_part, seen_im = value, True
        else:
            if seen_re or seen_im:
                raise ParseError(text, pos, "real part must come first and only once")
            re_part, seen_re = value, True
        pos = m.end()
    return GaussianInt(re_part, im_part)


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


RAMIFIED, INERT, SPLIT = "ramified", "inert", "split"


@dataclass(frozen=True)
class GaussianPrime:
    value: GaussianInt
    splitting_class: str

    def norm(self) -> int:
        return self.value.norm()

    @cached_property
    def _root_of_i(self) -> int:
        # image of i in Z[i]/p = Z/N for the residue-degree-one primes
        n = self.norm()
        a, b = self.value.re, self.value.im
        return (-a * pow(b, -1, n)) % n

    def reduce(self, z) -> GaussianInt:
        return reduce(z, self)

    def __str__(self):
        return str(self.value)


def _find_factor(z: GaussianInt):
    n = z.norm()
    for d in range(2, n):
        if n % d:
            continue
        for a in range(isqrt(d), 0, -1):
            b2 = d - a * a
            b = isqrt(b2)
            if b * b != b2:
                continue
            w = GaussianInt(a, b)
            if w.divides(z):
                return w, z.exact_div(w)
    return None


def classify_prime(z) -> GaussianPrime:
    """Return ``z`` tagged with its splitting class, or raise NotPrime.

    For a reducible input the exception carries a witness factorisation.
    """
    z = GaussianInt.coerce(z)
    n = z.norm()
    if n <= 1:
        raise NotPrime(z)
    if _is_rational_prime(n):
        return GaussianPrime(z, RAMIFIED if n == 2 else SPLIT)
    q = isqrt(n)
    if q * q == n and _is_rational_prime(q) and q % 4 == 3:
        return GaussianPrime(z, INERT)
    raise NotPrime(z, _find_factor(z))


def reduce(z, p: GaussianPrime) -> GaussianInt:
    """Canonical representative of ``z`` modulo ``p``.

    Residue-degree-one primes (ramified, split) use the integers
    ``0..N(p)-1``; an inert prime ``q`` uses ``a+bi`` with ``0 <= a, b < q``.
    """
    z = GaussianInt.coerce(z)
    n = p.norm()
    if p.splitting_class == INERT:
        q = isqrt(n)
        return GaussianInt(z.re % q, z.im % q)
    return GaussianInt((z.re + z.im * p._root_of_i) % n, 0)


def residues(p: GaussianPrime) -> list[GaussianInt]:
    n = p.norm()
    if p.splitting_class == INERT:
        q = isqrt(n)
        return [GaussianInt(a, b) for a in range(q) for b in range(q)]
    return [GaussianInt(a, 0) for a in range(n)]


def congruent(z, w, p: GaussianPrime) -> bool:
    return p.value.divides(GaussianInt.coerce(z) - GaussianInt.coerce(w))
