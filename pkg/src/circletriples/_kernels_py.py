"""Pure-Python scan kernels; fallback for the compiled _kernels module."""

from math import gcd, isqrt

BACKEND = "python"


def triples_scan(c: int) -> list[tuple[int, int]]:
    """All (a, b) with 0 < a < b, a^2 + b^2 = c^2, gcd(a, b) = 1, sorted by a.

    gcd(a, b) = 1 already implies gcd(a, b, c) = 1: any common factor of the
    legs divides c^2 and hence c.
    """
    cc = c * c
    out = []
    a = 1
    while 2 * a * a < cc:
        bsq = cc - a * a
        b = isqrt(bsq)
        if b * b == bsq and gcd(a, b) == 1:
            out.append((a, b))
        a += 1
    return out


def two_squares_scan(p: int):
    """The (m, n) with 0 < m < n and m^2 + n^2 = p, by exhaustive search."""
    m = 1
    while 2 * m * m < p:
        r = p - m * m
        n = isqrt(r)
        if n * n == r:
            return (m, n)
        m += 1
    return None
