"""Command-line interface.

Every subcommand accepts --json (one well-formed document on stdout, all
numeric fields as decimal strings so exactness survives any JSON parser)
and --seed (reseeds the two-squares root finding; results never depend on
it). Exit codes: 0 success, 1 verification mismatch or selftest failure,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import circle, oracle, primes, structure
from .circle import CirclePoint, NormalizedTriple


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _rat(x: Fraction) -> str:
    return str(x)


def _point_json(x: CirclePoint) -> dict:
    return {"s": _rat(x.s), "t": _rat(x.t)}


def _triple_json(t: NormalizedTriple) -> dict:
    return {"a": str(t.a), "b": str(t.b), "c": str(t.c)}


def _emit(args, payload, text_lines):
    if args.json:
        doc = {"command": args.command, "input": args.input_echo, "result": payload}
        print(json.dumps(doc))
    else:
        for line in text_lines:
            print(line)


def _cmd_count(args) -> int:
    n = structure.count_triples(args.c)
    _emit(args, str(n), [str(n)])
    return 0


def _cmd_triples(args) -> int:
    triples = structure.enumerate_triples(args.c)
    status = 0
    verified = None
    if args.verify:
        verified = triples == oracle.brute_triples(args.c)
        if not verified:
            print(f"verification failed for c={args.c}", file=sys.stderr)
            status = 1
    shown = triples if args.limit is None else triples[: args.limit]
    payload = {"triples": [_triple_json(t) for t in shown]}
    if verified is not None:
        payload["verified"] = verified
    _emit(args, payload, [str(t) for t in shown])
    return status


def _cmd_zeta(args) -> int:
    x = structure.zeta_p(args.p)
    _emit(args, _point_json(x), [str(x)])
    return 0


def _cmd_pow(args) -> int:
    x = structure.zeta_power(args.p, args.n)
    if circle.is_unit(x):
        _emit(args, {"point": _point_json(x), "triple": None}, [str(x), "unit"])
    else:
        t = circle.pt(x)
        _emit(args, {"point": _point_json(x), "triple": _triple_json(t)}, [str(x), str(t)])
    return 0


def _cmd_table(args) -> int:
    seed = NormalizedTriple(3, 4, 5)
    rows = structure.powers_table(seed, args.n_max)
    payload = []
    lines = []
    for n, x, t in rows:
        payload.append(
            {"n": str(n), "point": _point_json(x), "triple": None if t is None else _triple_json(t)}
        )
        lines.append(f"{n} {x} {t if t is not None else 'unit'}")
    _emit(args, payload, lines)
    return 0


def _cmd_factor_point(args) -> int:
    x = circle.make_point(args.s, args.t)
    f = structure.factor_point(x)
    payload = {
        "unit_exp": str(f.unit_exp),
        "terms": [{"p": str(p), "e": str(e)} for p, e in f.terms],
    }
    lines = [f"unit i^{f.unit_exp}"] + [f"{p} {e}" for p, e in f.terms]
    _emit(args, payload, lines)
    return 0


def _cmd_project(args) -> int:
    x = circle.make_point(args.s, args.t)
    r = circle.stereo_project(x)
    _emit(args, _rat(r), [_rat(r)])
    return 0


def _cmd_unproject(args) -> int:
    x = circle.stereo_unproject(args.r)
    _emit(args, _point_json(x), [str(x)])
    return 0


def _cmd_oracle(args) -> int:
    triples = oracle.brute_triples(args.c)
    _emit(args, [_triple_json(t) for t in triples], [str(t) for t in triples])
    return 0


def _selftest_checks():
    from fractions import Fraction as F
    from random import Random

    def enumeration_matches_oracle():
        for c in range(1, 301):
            assert structure.enumerate_triples(c) == oracle.brute_triples(c), c
            assert structure.count_triples(c) == len(oracle.brute_triples(c)), c

    def two_squares_matches_search():
        for p in primes.primes_below(2000):
            if p % 4 == 1:
                assert tuple(primes.two_squares(p)) == oracle.exhaustive_two_squares(p), p

    def factorization_roundtrip():
        rng = Random(7)
        pool = [p for p in primes.primes_below(200) if p % 4 == 1]
        for _ in range(50):
            ps = sorted(rng.sample(pool, rng.randint(0, 3)))
            terms = tuple((p, rng.choice([-3, -2, -1, 1, 2, 3])) for p in ps)
            f = structure.BasisFactorization(rng.randrange(4), terms)
            assert structure.factor_point(structure.recombine(f)) == f, f

    def projection_roundtrip():
        rng = Random(11)
        for _ in range(200):
            r = F(rng.randint(-500, 500), rng.randint(1, 500))
            assert circle.stereo_project(circle.stereo_unproject(r)) == r, r

    def orbits_have_size_8():
        for x in oracle.brute_rational_points(100):
            if not circle.is_unit(x):
                assert len(circle.gamma_orbit(x)) == 8, x

    return [
        enumeration_matches_oracle,
        two_squares_matches_search,
        factorization_roundtrip,
        projection_roundtrip,
        orbits_have_size_8,
    ]


def _cmd_selftest(args) -> int:
    results = []
    failed = False
    for check in _selftest_checks():
        name = check.__name__
        try:
            check()
        except AssertionError as exc:
            failed = True
            results.append({"check": name, "ok": False})
            if not args.json:
                print(f"FAIL {name}: {exc}")
        else:
            results.append({"check": name, "ok": True})
            if not args.json:
                print(f"ok {name}")
    if args.json:
        _emit(args, results, [])
    return 1 if failed else 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--seed", type=int, metavar="U64", help="reseed two-squares root finding")

    parser = argparse.ArgumentParser(
        prog="circletriples",
        description="Count and enumerate normalized Pythagorean triples via the rational unit circle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of triples with hypotenuse c")
    p.add_argument("c", type=_positive_int)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("triples", parents=[common], help="enumerate triples with hypotenuse c")
    p.add_argument("c", type=_positive_int)
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--limit", type=_positive_int, metavar="N", help="print at most N rows")
    p.set_defaults(func=_cmd_triples)

    p = sub.add_parser("zeta", parents=[common], help="basis circle point for a prime p = 1 (mod 4)")
    p.add_argument("p", type=_positive_int)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("pow", parents=[common], help="n-th power of the basis point for p")
    p.add_argument("p", type=_positive_int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_pow)

    p = sub.add_parser("table", parents=[common], help="powers of the (3,4,5) point and their triples")
    p.add_argument("n_max", type=_positive_int)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("factor-point", parents=[common], help="basis factorization of a circle point")
    p.add_argument("s", type=_fraction)
    p.add_argument("t", type=_fraction)
    p.set_defaults(func=_cmd_factor_point)

    p = sub.add_parser("project", parents=[common], help="stereographic projection of a circle point")
    p.add_argument("s", type=_fraction)
    p.add_argument("t", type=_fraction)
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("unproject", parents=[common], help="circle point of a rational projection value")
    p.add_argument("r", type=_fraction)
    p.set_defaults(func=_cmd_unproject)

    p = sub.add_parser("oracle", parents=[common], help="brute-force triples with hypotenuse c")
    p.add_argument("c", type=_positive_int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("selftest", parents=[common], help="run the bounded invariant suite")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        primes.set_default_seed(args.seed)
    args.input_echo = {
        k: str(v)
        for k, v in vars(args).items()
        if k not in ("command", "func", "json", "seed", "input_echo") and v is not None
    }
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
