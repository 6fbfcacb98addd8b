"""Literal nested-loop transcriptions of the displayed V/W formulas, checked
against the implementation term by term.

The oracles enumerate prime powers independently, test divisibility by
evaluating f(n) mod k directly, decide smoothness through the generic
factorization P+ (not the sieve), and count roots by residue scan for small
moduli.
"""

from math import fsum, log, sqrt

import pytest

from polysmooth.polyarith import build_factored
from polysmooth.primes import primes_up_to
from polysmooth.modroots import omega, omega_scan
from polysmooth.smoothsieve import pplus_oracle
from polysmooth.vwmachinery import (
    VWInstance,
    lemma31_check,
    lemma41_sums,
    vw_depth_pair,
    vw_prop21,
    vw_prop32,
)

T2P1 = build_factored(["t^2+1"])
T2M2 = build_factored(["t^2-2"])
T_T2P1 = build_factored(["t", "t^2+1"])
MIXED = build_factored(["t+1", "t^2+2"])


def _oracle_prime_powers(limit, lo_excl, hi_incl):
    """Prime powers k = p^v <= limit with lo_excl < p <= hi_incl."""
    out = []
    for p in primes_up_to(int(hi_incl)):
        if p <= lo_excl or p > hi_incl:
            continue
        k = p
        while k <= limit:
            out.append((k, p))
            k *= p
    return out


def _oracle_smooth_set(f, x, z, y):
    return {n for n in range(z + 1, x + 1)
            if f(n) != 0 and pplus_oracle(f(n)) <= y}


def _oracle_omega(f, k):
    return omega_scan(f, k) if k <= 3 * 10**4 else omega(f, k)


def _oracle_prop21(f, x, z, y):
    fx = f(x)
    log_fz = log(f(z))
    smooth = _oracle_smooth_set(f, x, z, y)
    v_terms = []
    for k, p in _oracle_prime_powers(fx, sqrt(y), y):
        cnt = sum(1 for n in smooth if f(n) % k == 0)
        v_terms.append(log(p) * cnt)
    V = fsum(v_terms) / log_fz
    w_terms = []
    sq = _oracle_prime_powers(fx, 1, sqrt(y))
    for k1, p1 in sq:
        for k2, p2 in sq:
            lcm = k1 * k2 if p1 != p2 else max(k1, k2)
            cnt = sum(1 for n in smooth if f(n) % lcm == 0)
            w_terms.append(log(p1) * log(p2) * cnt)
    W = fsum(w_terms) / log_fz**2
    return V, W


def test_prop21_matches_literal_oracle():
    cases = [
        (T2P1, 50, 10, 10),
        (T2P1, 80, 20, 13),
        (T2M2, 60, 12, 8),
        (T_T2P1, 50, 9, 6),
        (MIXED, 40, 8, 5),
    ]
    for f, x, z, y in cases:
        rep = vw_prop21(VWInstance(f, x, z, y))
        V, W = _oracle_prop21(f, x, z, y)
        assert abs(rep.V - V) <= 1e-9 * max(1, abs(V)), (f, x, z, y)
        assert abs(rep.W - W) <= 1e-9 * max(1, abs(W)), (f, x, z, y)


def test_prop21_verdicts_and_chain():
    # the proposition guarantees (2.1); (2.2) must follow whenever lhs > 0
    count_nonzero = 0
    for f in [T2P1, T2M2, T_T2P1]:
        for x, z in [(60, 12), (100, 25), (200, 40)]:
            for y in [5, 10, 20, 50]:
                rep = vw_prop21(VWInstance(f, x, z, y))
                assert rep.verdict_2_1
                assert rep.verdict_2_2
                if rep.lhs > 0:
                    count_nonzero += 1
                    assert rep.lhs < rep.V + sqrt(rep.lhs) * sqrt(rep.W)
                    assert rep.lhs < rep.V + rep.W / 2 + sqrt(
                        rep.V * rep.W + rep.W**2 / 4
                    )
    assert count_nonzero >= 10


def test_prop21_empty_lhs_vacuous():
    # t^2+1 has very sparse 2-smooth values: (z, x] window with none
    rep = vw_prop21(VWInstance(T2P1, 30, 10, 2))
    assert rep.lhs == 0
    assert rep.vacuous
    assert rep.verdict_2_1 and rep.verdict_2_2


def test_prop21_scale_guard():
    with pytest.raises(ValueError):
        vw_prop21(VWInstance(T2P1, 2 * 10**4, 10, 5))
    with pytest.raises(ValueError):
        VWInstance(T2P1, 50, 1, 5)  # z <= T_0 = 2


def _oracle_prop32_m1(f, x, z, y):
    """Literal depth-1 components of the split."""
    fx, h = f(x), x - z
    log_fz = log(f(z))
    smooth = _oracle_smooth_set(f, x, z, y)
    v_plus = fsum(
        log(p) * sum(1 for n in smooth if f(n) % k == 0)
        for k, p in _oracle_prime_powers(h, sqrt(y), y)
    ) / log_fz
    sq = _oracle_prime_powers(h, 1, sqrt(y))
    w_plus = fsum(
        log(p1) * log(p2) * sum(1 for n in smooth if f(n) % max(k1, k2) == 0
                                if p1 == p2) if p1 == p2 else
        log(p1) * log(p2) * sum(1 for n in smooth if f(n) % (k1 * k2) == 0)
        for k1, p1 in sq
        for k2, p2 in sq
        if (max(k1, k2) if p1 == p2 else k1 * k2) <= h
    ) / log_fz**2
    v1m = fsum(
        log(p) * _oracle_omega(f, k)
        for k, p in _oracle_prime_powers(fx, 1, y)
        if k > h
    ) / log_fz
    w1m = fsum(
        log(p1) * log(p2) * _oracle_omega(f, max(k1, k2) if p1 == p2 else k1 * k2)
        for k1, p1 in _oracle_prime_powers(fx, 1, y)
        for k2, p2 in _oracle_prime_powers(fx, 1, y)
        if (max(k1, k2) if p1 == p2 else k1 * k2) > h
    ) / log_fz**2
    return v_plus, w_plus, v1m, w1m


def test_prop32_depth1_matches_literal_oracle():
    for f, x, z, y in [(T2P1, 50, 10, 10), (T2M2, 60, 14, 8)]:
        rep = vw_prop32(VWInstance(f, x, z, y, depth=1))
        v_plus, w_plus, v1m, w1m = _oracle_prop32_m1(f, x, z, y)
        assert abs(rep.v_plus - v_plus) <= 1e-9 * max(1, v_plus)
        assert abs(rep.w_plus - w_plus) <= 1e-9 * max(1, w_plus)
        assert abs(rep.v_minus[0] - v1m) <= 1e-9 * max(1, v1m)
        assert abs(rep.w_minus[0] - w1m) <= 1e-9 * max(1, w1m)
        assert abs(rep.V - (rep.v_plus + sum(rep.v_minus))) < 1e-12
        assert abs(rep.W - (rep.w_plus + sum(rep.w_minus))) < 1e-12


def test_prop32_depth1_sandwiches_prop21():
    # The m=1 split is an upper-bound relaxation of the Prop 2.1 pair:
    # the "+" parts agree on k <= h and the tails dominate (see ledger).
    for f, x, z, y in [(T2P1, 50, 10, 10), (T2M2, 60, 14, 8), (T_T2P1, 50, 9, 6)]:
        r21 = vw_prop21(VWInstance(f, x, z, y))
        r32 = vw_prop32(VWInstance(f, x, z, y, depth=1))
        assert r32.v_plus <= r21.V + 1e-12
        assert r21.V <= r32.V + 1e-12
        assert r32.w_plus <= r21.W + 1e-12
        assert r21.W <= r32.W + 1e-12


def _oracle_v2_plus(f, x, z, y):
    h = x - z
    log_fz, log_fzx = log(f(z)), log(f(z)) - log(x)
    smooth = _oracle_smooth_set(f, x, z, y)
    terms = []
    for k1, p1 in _oracle_prime_powers(h, sqrt(y), y):
        for k2, p2 in _oracle_prime_powers(h, 1, y):
            if k1 * k2 > h:
                continue
            cnt = sum(1 for n in smooth if f(n) % (k1 * k2) == 0)
            terms.append(log(p1) * log(p2) * cnt)
    return fsum(terms) / (log_fz * log_fzx)


def _oracle_v2_minus(f, x, z, y):
    fx, h = f(x), x - z
    log_fz, log_fzx = log(f(z)), log(f(z)) - log(x)
    terms = []
    for k1, p1 in _oracle_prime_powers(h, 1, y):
        for k2, p2 in _oracle_prime_powers(fx, 1, y):
            if k1 * k2 <= h:
                continue
            terms.append(log(p1) * log(p2) * _oracle_omega(f, k1 * k2))
    return fsum(terms) / (log_fz * log_fzx)


def test_prop32_depth2_matches_literal_oracle():
    f, x, z, y = T2P1, 200, 60, 6
    rep = vw_prop32(VWInstance(f, x, z, y, depth=2))
    v2p = _oracle_v2_plus(f, x, z, y)
    v2m = _oracle_v2_minus(f, x, z, y)
    assert abs(rep.v_plus - v2p) <= 1e-9 * max(1, v2p)
    assert abs(rep.v_minus[1] - v2m) <= 1e-9 * max(1, v2m)
    assert len(rep.v_minus) == 2 and len(rep.w_minus) == 2
    assert rep.verdict_2_1 and rep.verdict_2_2


def test_prop32_monotone_relations():
    # strict with nonzero sums
    for f, x, z, y in [(T2P1, 200, 60, 50), (T2M2, 150, 40, 50), (MIXED, 120, 25, 20)]:
        rep1, rep2 = vw_depth_pair(VWInstance(f, x, z, y, depth=1))
        assert rep1.v_plus > 0
        assert rep1.v_plus < rep2.v_plus + rep2.v_minus[-1]
        assert rep1.w_plus < rep2.w_plus + rep2.w_minus[-1]
        assert rep1.monotone_v and rep1.monotone_w
        assert rep2.depth == 2
    # sparse windows, including the fully degenerate 0 < 0 convention
    for f, x, z, y in [(T2P1, 200, 60, 6), (T2M2, 200, 55, 6)]:
        rep1, rep2 = vw_depth_pair(VWInstance(f, x, z, y, depth=1))
        assert rep1.monotone_v and rep1.monotone_w, (f, x, z, y)


def test_prop32_requires_fz_above_x():
    # f(z) = 101 > x fails for x = 150
    with pytest.raises(ValueError):
        vw_prop32(VWInstance(T2P1, 150, 10, 5))


def test_lemma31_examples():
    res = lemma31_check(VWInstance(T2P1, 100, 40, 7), kappa=2)
    assert res.verdict
    assert res.lhs >= 0 and res.rhs >= 0
    # kappa = h: head sum only over lambda = 1, i.e. empty (Lambda(1)=0)
    inst = VWInstance(T2P1, 100, 40, 7)
    res = lemma31_check(inst, kappa=inst.h)
    assert res.head_sum == 0.0
    assert res.verdict


def test_lemma31_literal_oracle():
    f, x, z, y = T2P1, 100, 40, 7
    kappa = 2
    fx, h = f(x), x - z
    log_fzx = log(f(z)) - log(x)
    smooth = _oracle_smooth_set(f, x, z, y)
    lhs = sum(1 for n in smooth if f(n) % kappa == 0)
    head = fsum(
        log(p) * sum(1 for n in smooth if f(n) % (kappa * lam) == 0)
        for lam, p in _oracle_prime_powers(fx, 1, y)
        if lam * kappa <= h
    )
    tail = fsum(
        log(p) * _oracle_omega(f, kappa * lam)
        for lam, p in _oracle_prime_powers(fx, 1, y)
        if lam * kappa > h
    )
    rhs = (head + tail) / log_fzx
    res = lemma31_check(VWInstance(f, x, z, y), kappa)
    assert res.lhs == lhs
    assert abs(res.rhs - rhs) <= 1e-9 * max(1, rhs)
    assert res.verdict == (lhs < rhs)


def test_lemma31_verdict_across_grid():
    for f in [T2P1, T2M2, T_T2P1]:
        inst = VWInstance(f, 120, 30, 8)
        if f(30) <= 120:
            continue
        for kappa in [1, 2, 3, 5, 8, 90]:
            res = lemma31_check(inst, kappa)
            assert res.verdict, (f, kappa)


def test_lemma31_kappa_range():
    inst = VWInstance(T2P1, 100, 40, 7)
    with pytest.raises(ValueError):
        lemma31_check(inst, 0)
    with pytest.raises(ValueError):
        lemma31_check(inst, 61)


def test_lemma41_direct_summation_oracle():
    T = build_factored(["t"])
    res = lemma41_sums(T, 10**4, 10**4)
    # omega_t == 1: s1 = sum over prime powers p^v <= x of log p / p^v
    expect = fsum(
        log(p) / k
        for k, p in _oracle_prime_powers(10**4, 1, 10**4)
    )
    assert abs(res.s1 - expect) < 1e-9
    assert abs(res.res1) <= 3  # calibrated band vs log y
    res2 = lemma41_sums(T2P1, 10**4, 10**2)
    expect2 = fsum(
        log(p) / k * omega(T2P1, k)
        for k, p in _oracle_prime_powers(10**4, 1, 10**2)
    )
    assert abs(res2.s1 - expect2) < 1e-9
    assert abs(res2.res1) < 5


def test_lemma41_no_primes_below_2():
    res = lemma41_sums(T2P1, 100, 1.5)
    assert res.s1 == res.s2 == res.s3 == res.s4 == 0.0


def test_lemma41_scale_guard():
    with pytest.raises(ValueError):
        lemma41_sums(T2P1, 10**7 + 1, 10)
