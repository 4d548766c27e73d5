"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines. Every
comparison is exact integer or exact rational equality; there are no
tolerances anywhere.
"""

import json
import random
import subprocess
import sys
from contextlib import contextmanager
from fractions import Fraction

from schmidt import core, hypergeometric as hyp
from schmidt.combinatorics import binomial
from schmidt.legendre import legendre_forward, legendre_inverse, triangular_solve


@contextmanager
def reported(name: str):
    try:
        yield
    except BaseException:
        print(f"FAIL {name}")
        raise
    print(f"PASS {name}")


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "schmidt", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )


def test_route_agreement():
    with reported("route agreement for exponents 2..8, orders up to 12"):
        for r in range(2, 9):
            oracle = core.c_by_definition(r, 12)
            assert all(isinstance(v, int) for v in oracle)
            for n in range(13):
                assert core.c_from_t(n, r) == oracle[n], (r, n)
                assert core.c_general(n, r) == oracle[n], (r, n)


def test_scaled_ratio_integrality():
    with reported("scaled inner numbers integral for all j <= n <= 12, r <= 8"):
        for r in range(2, 9):
            for n in range(13):
                for j in range(n + 1):
                    ratio = core.integrality_ratio(n, j, r)
                    assert isinstance(ratio, int)


def test_closed_form_inner_numbers():
    with reported("closed inner-number forms match the defining sum"):
        for n in range(16):
            for j in range(n + 1):
                assert core.t3_closed(n, j) == core.t_sum(n, j, 3), (n, j)
        for n in range(13):
            for j in range(n + 1):
                assert core.t4_closed(n, j) == core.t_sum(n, j, 4), (n, j)
                assert core.t5_closed(n, j) == core.t_sum(n, j, 5), (n, j)
        for r in range(4, 9):
            for n in range(11):
                for j in range(n + 1):
                    assert core.t_general(n, j, r) == core.t_sum(n, j, r), (r, n, j)


def test_known_sequences():
    with reported("known sequence values: cube-sum family and first-order values"):
        assert core.c_by_definition(2, 5) == [1, 2, 10, 56, 346, 2252]
        for n in range(21):
            cubes = sum(binomial(n, j) ** 3 for j in range(n + 1))
            alt = sum(binomial(n, j) ** 2 * binomial(2 * j, n) for j in range(n + 1))
            assert core.c2_closed(n) == cubes == alt, n
        for r in range(1, 11):
            assert core.c_by_definition(r, 1)[1] == 2 ** (r - 1), r


def test_hypergeometric_identities():
    with reported("classical summation identities over seeded pole-free samples"):
        rng = random.Random("acceptance/dougall")
        for _ in range(100):
            a, c, d, m = hyp.sample_dougall(rng, 5)
            assert hyp.check_dougall(a, c, d, m), (a, c, d, m)
        rng = random.Random("acceptance/whipple")
        for _ in range(100):
            args = hyp.sample_whipple(rng, 5)
            assert hyp.check_whipple(*args), args
        for s in (1, 2, 3):
            rng = random.Random(f"acceptance/andrews/{s}")
            for _ in range(100):
                spec = hyp.sample_well_poised(rng, s, 5)
                assert hyp.check_andrews(spec), spec
        rng = random.Random("acceptance/reduction")
        for _ in range(100):
            spec = hyp.sample_well_poised(rng, 1, 5)
            ((c, d),) = spec.pairs
            assert hyp.andrews_rhs(spec) == hyp.dougall_rhs(spec.a, c, d, spec.m)
            spec = hyp.sample_well_poised(rng, 2, 5)
            (b, c), (d, e) = spec.pairs
            assert hyp.andrews_rhs(spec) == hyp.whipple_rhs(spec.a, b, c, d, e, spec.m)


def test_series_representation_of_inner_numbers():
    with reported("series representation equals the defining inner-number sum"):
        for n in range(11):
            for j in range(n + 1):
                for r in range(2, 8):
                    assert hyp.t_as_hypergeometric(n, j, r) == core.t_sum(n, j, r), (n, j, r)


def test_legendre_roundtrip():
    with reported("transform inversion is the identity on random sequences"):
        rng = random.Random("acceptance/legendre")
        for _ in range(100):
            c = [rng.randint(-100, 100) for _ in range(rng.randint(1, 10))]
            a = [legendre_forward(c, n) for n in range(len(c))]
            assert triangular_solve(a) == c
            for n in range(len(c)):
                assert legendre_inverse(a, n) == Fraction(c[n])


def test_prefix_reproduces_every_order():
    with reported("one computed prefix satisfies the defining sums for every order"):
        for r in range(1, 9):
            c = core.c_by_definition(r, 12)
            for n in range(13):
                assert legendre_forward(c, n) == core.lhs_sum(n, r), (r, n)


def test_cli_contract():
    with reported("command line contract: reproducibility, exit codes, JSON round-trip"):
        first = run_cli("identities", "--trials", "25", "--seed", "314")
        second = run_cli("identities", "--trials", "25", "--seed", "314")
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout

        assert run_cli("compute", "--r", "2", "--n-max", "6").returncode == 0
        assert run_cli("verify", "--r-max", "3", "--n-max", "6").returncode == 0
        assert run_cli("compute", "--n-max", "6").returncode == 2
        assert run_cli("compute", "--r", "0").returncode == 2
        assert run_cli("compute", "--r", "2", "--routes", "nonsense").returncode == 2

        result = run_cli("t-table", "--r", "6", "--n-max", "6", "--format", "json")
        assert result.returncode == 0
        doc = json.loads(result.stdout)
        assert json.dumps(doc, indent=2) == result.stdout.rstrip("\n")
        for row in doc["results"]["rows"]:
            assert int(row["t"]) >= 0
            assert int(row["ratio"]) >= 0
