"""Exact arithmetic for values of the form a + b * i^e * sqrt(m).

This tiny class of algebraic numbers (a, b rational, e in {0,1}, m a
squarefree positive integer) is closed under every operation the character
formulas need: sums of a rational with one radical term, products sharing a
radical, negation and complex conjugation.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, sqrt

Rational = int | Fraction


class IncompatibleRadicals(ArithmeticError):
    """Two distinct non-rational radical terms met; never reachable in scope."""


def _squarefree(m: int) -> tuple[int, int]:
    # m = s*s * m0 with m0 squarefree
    s, m0, d = 1, m, 2
    while d * d <= m0:
        while m0 % (d * d) == 0:
            m0 //= d * d
            s *= d
        d += 1
    return s, m0


@dataclass(frozen=True)
class AlgValue:
    a: Fraction
    b: Fraction
    e: int
    m: int

    def __add__(self, other: "AlgValue") -> "AlgValue":
        if self.b == 0:
            return make(self.a + other.a, other.b, other.e, other.m)
        if other.b == 0 or (self.e, self.m) == (other.e, other.m):
            return make(self.a + other.a, self.b + other.b, self.e, self.m)
        raise IncompatibleRadicals(f"cannot add {self} and {other}")

    def __neg__(self) -> "AlgValue":
        return make(-self.a, -self.b, self.e, self.m)

    def __sub__(self, other: "AlgValue") -> "AlgValue":
        return self + (-other)

    def __mul__(self, other: "AlgValue") -> "AlgValue":
        if self.b == 0:
            return make(self.a * other.a, self.a * other.b, other.e, other.m)
        if other.b == 0:
            return make(self.a * other.a, other.a * self.b, self.e, self.m)
        if (self.e, self.m) == (other.e, other.m):
            # (i^e sqrt(m))^2 = m for e = 0, -m for e = 1
            sq = -self.m if self.e else self.m
            return make(
                self.a * other.a + sq * self.b * other.b,
                self.a * other.b + other.a * self.b,
                self.e,
                self.m,
            )
        raise IncompatibleRadicals(f"cannot multiply {self} and {other}")

    def conjugate(self) -> "AlgValue":
        """Complex conjugate; flips the sign of the i-carrying term."""
        if self.e:
            return make(self.a, -self.b, self.e, self.m)
        return self

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __complex__(self) -> complex:
        unit = 1j if self.e else 1
        return complex(self.a) + complex(self.b) * unit * sqrt(self.m)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        den = lcm(self.a.denominator, self.b.denominator)
        na = self.a.numerator * (den // self.a.denominator)
        nb = self.b.numerator * (den // self.b.denominator)
        if self.m == 1:
            core = "i"
        else:
            core = f"i·√{self.m}" if self.e else f"√{self.m}"
        term = core if abs(nb) == 1 else f"{abs(nb)}·{core}"
        if na == 0:
            body = term if nb > 0 else f"-{term}"
            return body if den == 1 else f"{body}/{den}"
        body = f"{na} + {term}" if nb > 0 else f"{na} - {term}"
        return body if den == 1 else f"({body})/{den}"

    def to_json(self) -> dict:
        return {
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
            "e": self.e,
            "m": self.m,
        }


def make(a: Rational, b: Rational = 0, e: int = 0, m: int = 1) -> AlgValue:
    """Canonicalize and build a value a + b * i^e * sqrt(m).

    Powers of i are reduced mod 4 into the sign of b, square factors of m are
    pulled into b, and a plain rational collapses to (a, 0, 0, 1).
    """
    if m < 1:
        raise ValueError("radicand must be positive")
    a, b = Fraction(a), Fraction(b)
    if e % 4 in (2, 3):
        b = -b
    e %= 2
    s, m = _squarefree(m)
    b *= s
    if m == 1 and e == 0:
        a += b
        b = Fraction(0)
    if b == 0:
        e, m = 0, 1
    return AlgValue(a, b, e, m)


def rational(q: Rational) -> AlgValue:
    return make(q)


ZERO = make(0)
ONE = make(1)


def add(x: AlgValue, y: AlgValue) -> AlgValue:
    return x + y


def scale(x: AlgValue, q: Rational) -> AlgValue:
    return make(Fraction(q)) * x


def negate(x: AlgValue) -> AlgValue:
    return -x


def is_zero(x: AlgValue) -> bool:
    return x.is_zero()


def from_json(obj: dict) -> AlgValue:
    return make(
        Fraction(obj["a"][0], obj["a"][1]),
        Fraction(obj["b"][0], obj["b"][1]),
        obj["e"],
        obj["m"],
    )
