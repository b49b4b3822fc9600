"""Primality, integer factorization, residue classes, and two-squares.

The primes split by residue mod 4 into three classes; only the class with
p = 1 (mod 4) admits a decomposition p = m**2 + n**2, which is what seeds
every circle basis point downstream.
"""

from __future__ import annotations

import math
import random
from enum import Enum
from typing import NamedTuple, Optional

from .exactmath import GaussianInt, gaussian_gcd

# Witnesses proving compositeness for every composite below 3.3e24
# (so in particular the test is deterministic for all 64-bit inputs).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981

_TRIAL_LIMIT = 10**6


class PrimeClass(Enum):
    P1 = 1  # p = 1 (mod 4)
    P2 = 2  # p = 2
    P3 = 3  # p = 3 (mod 4)


class TwoSquares(NamedTuple):
    m: int
    n: int


# entries (prime, exponent), primes strictly increasing, exponents >= 1
Factorization = list[tuple[int, int]]


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < _MR_PROVEN_BOUND:
        return _miller_rabin(n, _MR_BASES)
    # Inputs this large are far outside the intended scale; add a fixed
    # batch of extra pseudorandom witnesses on top of the proven base set.
    rng = random.Random(n)
    extra = tuple(rng.randrange(2, n - 1) for _ in range(24))
    return _miller_rabin(n, _MR_BASES + extra)


def primes_below(limit: int) -> list[int]:
    """All primes < limit, by sieve of Eratosthenes."""
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(c: int) -> Factorization:
    """Prime factorization of c as sorted (prime, exponent) pairs."""
    if c < 2:
        raise ValueError("factorize requires an integer >= 2")
    factors: dict[int, int] = {}
    n = c
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    d = 3
    while d * d <= n and d <= _TRIAL_LIMIT:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        if d * d > n or is_prime(n):
            factors[n] = factors.get(n, 0) + 1
        else:
            # cofactor beyond the trial range: split it with Pollard rho
            rng = random.Random(n)
            stack = [n]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    factors[m] = factors.get(m, 0) + 1
                    continue
                f = _pollard_rho(m, rng)
                stack.append(f)
                stack.append(m // f)
    entries = sorted(factors.items())
    assert math.prod(p**e for p, e in entries) == c
    return entries


def classify(p: int) -> PrimeClass:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return PrimeClass.P2
    return PrimeClass.P1 if p % 4 == 1 else PrimeClass.P3


def _sqrt_minus_one(p: int, rng: random.Random) -> int:
    """An x with x**2 = -1 (mod p), for p = 1 (mod 4).

    A random residue a is a quadratic nonresidue half the time, and then
    a**((p-1)/4) is such a root; expected two attempts.
    """
    e = (p - 1) // 4
    while True:
        a = rng.randrange(2, p - 1)
        x = pow(a, e, p)
        if x * x % p == p - 1:
            return x


_default_rng = random.Random(0)


def set_default_seed(seed: int) -> None:
    """Reseed the rng used by two_squares when no rng is passed explicitly."""
    global _default_rng
    _default_rng = random.Random(seed)


def two_squares(p: int, rng: Optional[random.Random] = None) -> TwoSquares:
    """The unique decomposition p = m**2 + n**2 with 0 < m < n.

    Finds a square root of -1 mod p, then takes the Gaussian gcd of p and
    root + i; its coordinates are the answer up to unit and conjugation,
    so the normalized output does not depend on the rng.
    """
    cls = classify(p)
    if cls is not PrimeClass.P1:
        raise ValueError(
            f"{p} is in class {cls.name}; only primes = 1 (mod 4) are sums of two squares"
        )
    if rng is None:
        rng = _default_rng
    x = _sqrt_minus_one(p, rng)
    g = gaussian_gcd(GaussianInt(p), GaussianInt(x, 1))
    m, n = sorted((abs(g.re), abs(g.im)))
    assert 0 < m < n and m * m + n * n == p
    return TwoSquares(m, n)
