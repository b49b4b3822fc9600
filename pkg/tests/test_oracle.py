import math

import pytest

from circletriples import _kernels_py, oracle
from circletriples.circle import NormalizedTriple


def test_brute_examples():
    assert oracle.brute_triples(5) == [NormalizedTriple(3, 4, 5)]
    assert oracle.brute_triples(4) == []
    assert oracle.brute_triples(625) == [NormalizedTriple(336, 527, 625)]


def test_brute_rejects_nonpositive():
    with pytest.raises(ValueError):
        oracle.brute_triples(0)


def test_brute_output_is_validated_and_sorted():
    for c in (5, 25, 65, 325, 1105):
        triples = oracle.brute_triples(c)
        assert [t.a for t in triples] == sorted(t.a for t in triples)
        for t in triples:
            # constructor-checked, but restate the defining equations
            assert t.a**2 + t.b**2 == t.c**2 == c * c
            assert math.gcd(t.a, t.b, t.c) == 1


def test_isqrt_is_exact():
    for x in list(range(200)) + [10**12, 10**12 + 1, (10**6 + 3) ** 2]:
        r = math.isqrt(x)
        assert r * r <= x < (r + 1) * (r + 1)


def test_point_corpus_counts():
    assert len(oracle.brute_rational_points(4)) == 4  # units only
    assert len(oracle.brute_rational_points(5)) == 12  # units + one orbit
    # hypotenuses 5, 13, 17, 25 each contribute a disjoint 8-point orbit
    assert len(oracle.brute_rational_points(25)) == 4 + 8 * 4


def test_point_corpus_is_duplicate_free():
    pts = oracle.brute_rational_points(100)
    assert len(pts) == len(set(pts))


def test_backends_agree():
    for c in range(1, 400):
        assert _kernels_py.triples_scan(c) == oracle._pick(c).triples_scan(c)
    for p in range(2, 2000):
        assert _kernels_py.two_squares_scan(p) == oracle._pick(p).two_squares_scan(p)


def test_python_fallback_beyond_kernel_range():
    c = 2**31 + 11  # routed to the pure kernel regardless of build
    assert oracle._pick(c) is _kernels_py


def test_exhaustive_two_squares():
    assert oracle.exhaustive_two_squares(5) == (1, 2)
    assert oracle.exhaustive_two_squares(7) is None
    assert oracle.exhaustive_two_squares(25) == (3, 4)
