"""Structure of the rational circle group, and triple enumeration.

The group splits as (torsion) x (free part): the four units times a free
abelian group whose basis points are indexed by the primes p = 1 (mod 4).
For such a prime with p = m**2 + n**2, 0 < m < n, the basis point is
q / conj(q) where q = m + n*i. Writing an arbitrary point in these
coordinates, and reading the hypotenuse off the exponents, turns counting
and enumerating triples with a given hypotenuse into bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .circle import (
    CirclePoint,
    NormalizedTriple,
    UNIT_POINTS,
    is_unit,
    pt,
    point_from_triple,
)
from .exactmath import GaussianInt, divexact, try_divexact
from .primes import PrimeClass, classify, factorize, two_squares


@dataclass(frozen=True)
class BasisFactorization:
    """A point written as i**unit_exp times a product of basis-point powers.

    terms holds (p, e) pairs with p = 1 (mod 4), e nonzero, primes strictly
    increasing. Negative e means a power of the conjugate basis point.
    """

    unit_exp: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.unit_exp not in (0, 1, 2, 3):
            raise ValueError("unit_exp must be in {0, 1, 2, 3}")
        ps = [p for p, _ in self.terms]
        if ps != sorted(set(ps)):
            raise ValueError("term primes must be strictly increasing")
        if any(e == 0 for _, e in self.terms):
            raise ValueError("term exponents must be nonzero")


@dataclass(frozen=True)
class GaussianFactorization:
    """unit times a product of canonical irreducible powers in Z[i]."""

    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]


def canonical_irreducible(p: int) -> GaussianInt:
    """The canonical irreducible of Z[i] above the prime p.

    For p = 1 (mod 4) this is m + n*i with 0 < m < n; for 2 it is 1 + i;
    for p = 3 (mod 4) the prime itself stays irreducible.
    """
    cls = classify(p)
    if cls is PrimeClass.P2:
        return GaussianInt(1, 1)
    if cls is PrimeClass.P3:
        return GaussianInt(p)
    m, n = two_squares(p)
    return GaussianInt(m, n)


def gaussian_factorize(z: GaussianInt) -> GaussianFactorization:
    """Unique factorization of z over the canonical irreducibles.

    Factors the integer norm, then peels off the matching Gaussian
    irreducibles; what remains must be a unit. Factors are sorted by norm,
    with the second-octant irreducible preceding its conjugate.
    """
    if not z:
        raise ValueError("zero has no factorization")
    factors: list[tuple[GaussianInt, int]] = []
    rest = z
    nrm = z.norm()
    if nrm > 1:
        for p, e in factorize(nrm):
            if p == 2:
                q = GaussianInt(1, 1)
                for _ in range(e):
                    rest = divexact(rest, q)
                factors.append((q, e))
            elif p % 4 == 3:
                # inert prime: contributes its square to the norm
                assert e % 2 == 0, (z, p, e)
                q = GaussianInt(p)
                for _ in range(e // 2):
                    rest = divexact(rest, q)
                factors.append((q, e // 2))
            else:
                q = canonical_irreducible(p)
                e1 = 0
                while e1 < e:
                    nxt = try_divexact(rest, q)
                    if nxt is None:
                        break
                    rest = nxt
                    e1 += 1
                qbar = q.conjugate()
                for _ in range(e - e1):
                    rest = divexact(rest, qbar)
                if e1:
                    factors.append((q, e1))
                if e - e1:
                    factors.append((qbar, e - e1))
    assert rest.norm() == 1
    factors.sort(key=lambda qe: (qe[0].norm(), qe[0].im < 0))
    return GaussianFactorization(rest, tuple(factors))


def zeta_p(p: int) -> CirclePoint:
    """The basis point q / conj(q) for a prime p = 1 (mod 4).

    With p = m**2 + n**2 this is ((m**2 - n**2)/p, 2mn/p).
    """
    cls = classify(p)
    if cls is not PrimeClass.P1:
        raise ValueError(f"{p} is in class {cls.name}; basis points need p = 1 (mod 4)")
    m, n = two_squares(p)
    return CirclePoint(Fraction(m * m - n * n, p), Fraction(2 * m * n, p))


def zeta_power(p: int, e: int) -> CirclePoint:
    """zeta_p(p) ** e, computed in Z[i] as q**(2e) / p**e.

    Keeps all intermediates integral; equality with the rational-arithmetic
    power is enforced in the test suite.
    """
    if e == 0:
        return UNIT_POINTS[0]
    m, n = two_squares(p)
    q = GaussianInt(m, n) if e > 0 else GaussianInt(m, -n)
    w = q ** (2 * abs(e))
    den = p ** abs(e)
    return CirclePoint(Fraction(w.re, den), Fraction(w.im, den))


def recombine(f: BasisFactorization) -> CirclePoint:
    x = UNIT_POINTS[f.unit_exp]
    for p, e in f.terms:
        x = x * zeta_power(p, e)
    return x


def factor_point(x: CirclePoint) -> BasisFactorization:
    """Coordinates of x in the torsion x free-part decomposition.

    Clears denominators to land in Z[i], factors there, and converts each
    conjugate pair q**e * conj(q)**e' into the basis-point power (e - e')/2.
    The factors above 2 and above the inert primes come entirely from the
    cleared denominator and drop out; the final unit assertion certifies
    that nothing real was discarded.
    """
    den = x.s.denominator
    if x.t.denominator != den:
        den = den * x.t.denominator // math.gcd(den, x.t.denominator)
    z = GaussianInt(int(x.s * den), int(x.t * den))
    gf = gaussian_factorize(z)
    exps: dict[int, int] = {}
    for q, e in gf.factors:
        nrm = q.norm()
        if nrm == 2 or q.im == 0:
            # unit absolute value forces even total contributions here
            continue
        p = nrm
        signed = e if q.im > 0 else -e
        exps[p] = exps.get(p, 0) + signed
    terms = []
    for p in sorted(exps):
        diff = exps[p]
        assert diff % 2 == 0, (x, p, diff)
        if diff:
            terms.append((p, diff // 2))
    free = UNIT_POINTS[0]
    for p, e in terms:
        free = free * zeta_power(p, e)
    u = x * free.inverse()
    assert is_unit(u), (x, terms, u)
    return BasisFactorization(UNIT_POINTS.index(u), tuple(terms))


def hypotenuse_of(f: BasisFactorization) -> int:
    """Product of p**|e| over the terms: the hypotenuse of the encoded triple."""
    if not f.terms:
        raise ValueError("unit points encode no triple, so no hypotenuse")
    return math.prod(p ** abs(e) for p, e in f.terms)


def _splittable(c: int) -> Optional[list[tuple[int, int]]]:
    """Factorization of c if every prime factor is 1 (mod 4), else None."""
    if c == 1:
        return None
    fac = factorize(c)
    if any(p % 4 != 1 for p, _ in fac):
        return None
    return fac


def count_triples(c: int) -> int:
    """Number of normalized triples with hypotenuse c: 2**(k-1) or 0.

    k is the number of distinct prime factors; no enumeration happens.
    """
    if c <= 0:
        raise ValueError("hypotenuse must be positive")
    fac = _splittable(c)
    if fac is None:
        return 0
    return 2 ** (len(fac) - 1)


def enumerate_triples(c: int) -> list[NormalizedTriple]:
    """All normalized triples with hypotenuse c, sorted by the short leg.

    One triple per sign pattern on the basis-point exponents, with the sign
    fixed positive on the smallest prime to pick one representative per
    conjugation orbit.
    """
    if c <= 0:
        raise ValueError("hypotenuse must be positive")
    fac = _splittable(c)
    if fac is None:
        return []
    (p0, n0), rest = fac[0], fac[1:]
    base = zeta_power(p0, n0)
    triples = []
    for signs in product((1, -1), repeat=len(rest)):
        x = base
        for (p, n), sign in zip(rest, signs):
            x = x * zeta_power(p, sign * n)
        triples.append(pt(x))
    triples.sort(key=lambda t: t.a)
    assert all(t.c == c for t in triples)
    return triples


def powers_table(
    seed: NormalizedTriple, n_max: int
) -> list[tuple[int, CirclePoint, Optional[NormalizedTriple]]]:
    """Rows (n, x**n, triple) for the point x encoding the seed triple.

    The triple entry is None on rows where the power happens to be a unit.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    base = point_from_triple(seed)
    rows = []
    x = UNIT_POINTS[0]
    for n in range(1, n_max + 1):
        x = x * base
        rows.append((n, x, None if is_unit(x) else pt(x)))
    return rows
