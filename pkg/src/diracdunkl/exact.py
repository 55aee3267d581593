"""Exact scalar arithmetic: rationals, Gaussian rationals, rising factorials.

Everything computed in this package reduces to a polynomial identity over
Q(i) once the three deformation parameters mu1, mu2, mu3 are fixed to
rational values.  Keeping every scalar an exact rational therefore turns
each operator identity into a strict equality check, with no tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Rational scalar: arbitrary-precision numerator, positive denominator,
# always in lowest terms (fractions.Fraction maintains both invariants).
Rational = Fraction

HALF = Fraction(1, 2)


def rational_str(value) -> str:
    """Serialize a rational as "p/q" with q > 0 and gcd(|p|, q) = 1."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare, possibly signed, integer)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


class GRational:
    """Gaussian rational re + im*i with exact rational parts.

    Values are immutable by convention; every operation returns a new value.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def _coerce(value):
        if isinstance(value, GRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GRational(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GRational(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # Matches hash of the plain rational when the value is real.
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GRational":
        return GRational(self.re, -self.im)

    def __repr__(self):
        return f"GRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im > 0 else ''}{self.im}i)"

    def to_json_dict(self) -> dict:
        return {"re": rational_str(self.re), "im": rational_str(self.im)}


I = GRational(0, 1)
MINUS_I = GRational(0, -1)


def as_grational(value) -> GRational:
    out = GRational._coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return out


@dataclass(frozen=True)
class Params:
    """The three non-negative rational deformation parameters.

    gamma3 = mu1 + mu2 + mu3 + 3/2 and gamma2 = mu1 + mu2 + 1 are the
    conformal constants of the three- and two-dimensional settings.
    """

    mu1: Fraction
    mu2: Fraction
    mu3: Fraction

    def __post_init__(self):
        for name in ("mu1", "mu2", "mu3"):
            value = Fraction(getattr(self, name))
            if value < 0:
                raise ValueError("mu must be non-negative")
            object.__setattr__(self, name, value)

    @property
    def gamma3(self) -> Fraction:
        return self.mu1 + self.mu2 + self.mu3 + Fraction(3, 2)

    @property
    def gamma2(self) -> Fraction:
        return self.mu1 + self.mu2 + 1

    @property
    def mu_sum(self) -> Fraction:
        return self.mu1 + self.mu2 + self.mu3

    def mu(self, axis: int) -> Fraction:
        return (self.mu1, self.mu2, self.mu3)[axis - 1]

    def cycled(self) -> "Params":
        """Parameters under the cyclic relabeling 1 -> 2 -> 3 -> 1 of the axes."""
        return Params(self.mu2, self.mu3, self.mu1)

    def mu_strings(self) -> list[str]:
        return [rational_str(m) for m in (self.mu1, self.mu2, self.mu3)]

    @classmethod
    def parse(cls, text: str) -> "Params":
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError("mu must be three comma-separated rationals")
        return cls(*(parse_rational(p) for p in parts))


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+n-1); equals 1 when n = 0."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def gamma_ratio(a, b) -> Fraction:
    """Gamma(a) / Gamma(b), defined only when a - b is a non-negative integer.

    For other argument pairs the ratio is not rational in general, so this
    raises instead of approximating.
    """
    a = Fraction(a)
    b = Fraction(b)
    diff = a - b
    if diff.denominator != 1 or diff < 0:
        raise ValueError("gamma_ratio requires a - b to be a non-negative integer")
    return pochhammer(b, int(diff))


def factorial(n: int) -> Fraction:
    return Fraction(math.factorial(n))
