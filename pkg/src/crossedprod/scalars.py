"""Complex scalars in two numeric modes.

Float mode uses the builtin ``complex``.  Exact mode uses :class:`QComplex`,
a complex number with rational real and imaginary parts.  A computation runs
in one mode throughout; mixing raises :class:`ModeMismatchError`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ModeMismatchError


@dataclass(frozen=True)
class QComplex:
    """Complex number with exact rational parts."""

    re: Fraction
    im: Fraction

    def __add__(self, other):
        if not isinstance(other, QComplex):
            return NotImplemented
        return QComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, QComplex):
            return NotImplemented
        return QComplex(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, QComplex):
            return NotImplemented
        return QComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        if not isinstance(other, QComplex):
            return NotImplemented
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return QComplex(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def conjugate(self) -> "QComplex":
        return QComplex(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(float(self.abs2()))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return f"{self.re}+{self.im}i" if self.im >= 0 else f"{self.re}{self.im}i"


QZERO = QComplex(Fraction(0), Fraction(0))
QONE = QComplex(Fraction(1), Fraction(0))


def qc(re, im=0) -> QComplex:
    """Exact scalar from rational-convertible parts."""
    return QComplex(Fraction(re), Fraction(im))


def is_exact(z) -> bool:
    return isinstance(z, QComplex)


def check_same_mode(values) -> bool:
    """Return True when the values are exact, False when float.

    Raises ModeMismatchError on a mix.  An empty collection counts as float.
    """
    exact = None
    for v in values:
        e = isinstance(v, QComplex)
        if exact is None:
            exact = e
        elif exact != e:
            raise ModeMismatchError("exact and floating scalars mixed")
    return bool(exact)


def zero_like(exact: bool):
    return QZERO if exact else 0j


def one_like(exact: bool):
    return QONE if exact else 1 + 0j


def conj(z):
    return z.conjugate()


def abs2(z) -> float | Fraction:
    if isinstance(z, QComplex):
        return z.abs2()
    z = complex(z)
    return z.real * z.real + z.imag * z.imag


def absval(z) -> float:
    return abs(z)


def is_zero(z, tol: float = 0.0) -> bool:
    """Zero test: exact equality for QComplex, |z| <= tol otherwise."""
    if isinstance(z, QComplex):
        return z.re == 0 and z.im == 0
    return abs(complex(z)) <= tol


def close(z, w, tol: float) -> bool:
    if isinstance(z, QComplex) and isinstance(w, QComplex):
        return z == w
    return abs(complex(z) - complex(w)) <= tol


def scalar_add(z, w):
    return z + w


def scalar_mul(z, w):
    return z * w


def unit_pow(lam, n: int):
    """lam**n for unimodular lam; negative powers via conjugation.

    Conjugation keeps exact-mode values exact and avoids the loss of
    modulus that repeated float division would cause.
    """
    if n == 0:
        return QONE if isinstance(lam, QComplex) else 1 + 0j
    base = lam if n > 0 else conj(lam)
    out = base
    for _ in range(abs(n) - 1):
        out = out * base
    return out


def to_complex(z) -> complex:
    return complex(z)


def roots_of_unity(order: int) -> list[complex]:
    """The order-th roots of unity as floats, starting at 1."""
    return [cmath.exp(2j * math.pi * k / order) for k in range(order)]


def rational_circle_point(t) -> QComplex:
    """Exact unimodular scalar ((1-t^2) + 2t i)/(1+t^2) for rational t."""
    t = Fraction(t)
    d = 1 + t * t
    return QComplex((1 - t * t) / d, 2 * t / d)
