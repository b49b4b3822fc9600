# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: same contracts as _kernels_py, fixed-width ints.

Callers must keep c below 2**31 so that c*c fits in 64 bits; the oracle
module routes anything larger to the pure-Python kernel.
"""

from libc.math cimport sqrt

BACKEND = "c"


cdef unsigned long long _isqrt(unsigned long long x):
    cdef unsigned long long r = <unsigned long long> sqrt(<double> x)
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


cdef unsigned long long _gcd(unsigned long long a, unsigned long long b):
    cdef unsigned long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def triples_scan(unsigned long long c):
    """All (a, b) with 0 < a < b, a^2 + b^2 = c^2, gcd(a, b) = 1, sorted by a."""
    cdef unsigned long long cc = c * c
    cdef unsigned long long a = 1, bsq, b
    out = []
    while 2 * a * a < cc:
        bsq = cc - a * a
        b = _isqrt(bsq)
        if b * b == bsq and _gcd(a, b) == 1:
            out.append((a, b))
        a += 1
    return out


def two_squares_scan(unsigned long long p):
    """The (m, n) with 0 < m < n and m^2 + n^2 = p, by exhaustive search."""
    cdef unsigned long long m = 1, r, n
    while 2 * m * m < p:
        r = p - m * m
        n = _isqrt(r)
        if n * n == r:
            return (m, n)
        m += 1
    return None
