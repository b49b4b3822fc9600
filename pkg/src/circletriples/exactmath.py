"""Exact integer, rational, and Gaussian-integer arithmetic.

Rationals are stdlib :class:`fractions.Fraction`, which already maintains the
canonical form every other module relies on: positive denominator, numerator
and denominator coprime. The helpers below exist so callers never have to
think about normalization.

Gaussian integers (elements m + n*i of Z[i]) get their own small class; the
stdlib has nothing exact for them. Division with remainder rounds the
quotient coordinates to nearest, which makes the Euclidean algorithm in Z[i]
terminate (the remainder norm drops by a factor of at least 2).
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def rat_add(x: Fraction, y: Fraction) -> Fraction:
    return x + y


def rat_mul(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def rat_neg(x: Fraction) -> Fraction:
    return -x


def rat_inv(x: Fraction) -> Fraction:
    if x == 0:
        raise ZeroDivisionError("cannot invert zero")
    return 1 / x


class GaussianInt:
    """An element re + im*i of Z[i], exact at any magnitude."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = GaussianInt(other)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def __add__(self, other):
        if isinstance(other, int):
            other = GaussianInt(other)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = GaussianInt(other)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers leave Z[i]")
        result = GaussianInt(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """re**2 + im**2, the squared absolute value. Multiplicative."""
        return self.re * self.re + self.im * self.im

    def __divmod__(self, other):
        """Quotient with coordinates rounded to nearest, plus remainder.

        Guarantees norm(remainder) <= norm(other) / 2.
        """
        if isinstance(other, int):
            other = GaussianInt(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[i]")
        n = other.norm()
        num = self * other.conjugate()
        # nearest integer to x/n for n > 0
        q = GaussianInt((2 * num.re + n) // (2 * n), (2 * num.im + n) // (2 * n))
        return q, self - q * other

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def divexact(z: GaussianInt, d: GaussianInt) -> GaussianInt:
    """Exact quotient z / d in Z[i]; raises if d does not divide z."""
    if not d:
        raise ZeroDivisionError("division by zero in Z[i]")
    n = d.norm()
    num = z * d.conjugate()
    if num.re % n or num.im % n:
        raise ValueError(f"{d!r} does not divide {z!r} in Z[i]")
    return GaussianInt(num.re // n, num.im // n)


def try_divexact(z: GaussianInt, d: GaussianInt):
    """divexact, or None when d does not divide z."""
    n = d.norm()
    num = z * d.conjugate()
    if num.re % n or num.im % n:
        return None
    return GaussianInt(num.re // n, num.im // n)


def gaussian_gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """A greatest common divisor of a and b in Z[i] (unique up to units)."""
    while b:
        a, b = b, a % b
    return a
