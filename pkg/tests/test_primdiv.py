from math import gcd

import pytest

from polysmooth.primdiv import (
    has_primitive_divisor,
    n_arctan,
    r_b,
    verify_prop63,
)
from polysmooth.primes import factorize


def _primitive_by_definition(b, n):
    """Direct definition: some d > 1 divides n^2 + b with gcd(d, m^2 + b) = 1
    for every nonzero earlier term (literal scan over all divisors)."""
    a_n = abs(n * n + b)
    if a_n <= 1:
        return False
    for d in range(2, a_n + 1):
        if a_n % d:
            continue
        if all(gcd(d, m * m + b) == 1 for m in range(1, n) if m * m + b != 0):
            return True
    return False


def _first_occurrence_flags(b, x):
    """Definition oracle at scale: n has a primitive divisor iff some prime
    of n^2 + b appears in no earlier term, i.e. first occurs at n.

    (A composite primitive divisor would hand each of its primes the same
    coprimality, so primes decide; this matches the literal scan, which the
    small-range test below pins.)"""
    first_seen = {}
    for m in range(1, x + 1):
        for p in factorize(abs(m * m + b)):
            first_seen.setdefault(p, m)
    return [
        abs(n * n + b) > 1
        and any(first_seen[p] == n for p in factorize(abs(n * n + b)))
        for n in range(1, x + 1)
    ]


def test_examples():
    assert has_primitive_divisor(1, 2).has_primitive  # P+(5) = 5 > 4
    assert not has_primitive_divisor(1, 3).has_primitive  # arctan 3 reducible
    assert not has_primitive_divisor(1, 7).has_primitive  # 50 = 2 * 5^2


def test_hypothesis_violation():
    with pytest.raises(ValueError):
        has_primitive_divisor(-4, 3)
    with pytest.raises(ValueError):
        r_b(-4, 10)
    with pytest.raises(ValueError):
        r_b(0, 10)


def test_n1_definition_vs_criterion():
    rec = has_primitive_divisor(1, 1)
    assert rec.has_primitive  # A_1 = 2, empty earlier-term relation
    assert rec.method == "direct"
    assert rec.criterion_mismatch  # P+(2) = 2 is not > 2


def test_first_occurrence_oracle_matches_literal_scan():
    for b in [1, 3, -2]:
        flags = _first_occurrence_flags(b, 150)
        for n in range(1, 151):
            assert flags[n - 1] == _primitive_by_definition(b, n), (b, n)


def test_criterion_matches_definition():
    # spec grid: b in {1, 2, 3, 5, -2}, all |b| < n <= 2000
    for b in [1, 2, 3, 5, -2]:
        flags = _first_occurrence_flags(b, 2000)
        table = r_b(b, 2000, collect_records=True).records
        for n in range(abs(b) + 1, 2001):
            assert table[n - 1].has_primitive == flags[n - 1], (b, n)


def test_boundary_direct_method():
    for b in [3, 5, 7]:
        for n in range(1, b + 1):
            rec = has_primitive_divisor(b, n)
            assert rec.method == "direct"
            assert rec.has_primitive == _primitive_by_definition(b, n), (b, n)


def test_r1_of_10():
    res = r_b(1, 10, collect_records=True)
    assert res.count == 7
    members = [r.n for r in res.records if r.has_primitive]
    assert members == [1, 2, 4, 5, 6, 9, 10]


def test_r_b_definition_oracle():
    for b in [1, 2, -2]:
        for x in [10, 50, 200]:
            expect = sum(1 for n in range(1, x + 1) if _primitive_by_definition(b, n))
            assert r_b(b, x).count == expect, (b, x)


def test_n_arctan_examples():
    assert n_arctan(10).count == 7
    assert n_arctan(3).count == 2  # n = 1, 2; arctan 3 reducible


def test_n_equals_r1():
    res = r_b(1, 2000, collect_records=True)
    flags_rb = [r.has_primitive for r in res.records]
    # per-n equality => N(x) = R_1(x) for every x <= 2000
    count = 0
    for n in range(1, 2001):
        rec = has_primitive_divisor(1, n)
        if rec.has_primitive:
            count += 1
        assert rec.has_primitive == flags_rb[n - 1], n
    assert n_arctan(2000).count == count == res.count


def test_prop63_shape():
    rep = verify_prop63(1, 1000)
    assert rep.residual == abs(rep.r_b - rep.x_minus_psi)
    assert rep.r_over_x < 0.5


def test_degenerate_range_below_b():
    res = r_b(100, 5, collect_records=True)
    assert len(res.records) == 5
    assert all(r.method == "direct" for r in res.records)
