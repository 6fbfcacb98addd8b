"""The acceptance suite: every criterion with its stated tolerance, runnable
via `polysmooth verify` or the pytest gate.

Each criterion returns a CriterionResult with the measurements that decided
it.  Criterion 4 is known to fail: the exact count Psi(10^6, 10^3) = 344299
sits 0.0374 above rho(2), beyond the stated 0.02 tolerance (second-order
de Bruijn deviation; see the analysis shipped with the repository notes).
The quick level drives the same code paths at reduced scale and skips the
10^6-scale criteria (4, 5) and the determinism double-run (10).
"""

import json
import os
import random
import tempfile
import time
from dataclasses import dataclass
from math import fsum, isqrt, log, sqrt

from .bounds import cassels_coeff, gamma_f, thm11_main_term
from .dickman import delay_residual, rho, rho_rk4_oracle
from .modroots import lift_roots, omega, omega_factored, omega_scan
from .polyarith import build_factored
from .primes import factorize, primes_up_to
from .primdiv import n_arctan, r_b, verify_prop63
from .quadfield import (
    c_alpha,
    classify_prime,
    make_context,
    verify_prop54,
    windowed_cassels,
)
from .smoothsieve import (
    coeff_bound,
    pplus_oracle,
    pplus_table,
    psi,
    psi_oracle,
    smooth_bound,
)
from .vwmachinery import VWInstance, lemma31_check, vw_depth_pair, vw_prop21, vw_prop32

GAMMA_211 = (19 + sqrt(105)) / 32


@dataclass
class CriterionResult:
    cid: int
    name: str
    passed: bool
    seconds: float
    details: dict


def _poly(label):
    return build_factored(_POLY_SPECS[label])


_POLY_SPECS = {
    "t": ["t"],
    "t^2+1": ["t^2+1"],
    "t^2-2": ["t^2-2"],
    "t(t^2+1)": ["t", "t^2+1"],
    "(t+1)(t^2+2)": ["t+1", "t^2+2"],
}


# --------------------------------------------------------------- criterion 1

def criterion_1(quick=False, threads=1):
    details = {}
    ok = True
    g211 = gamma_f(2, 1, 1)
    details["gamma_2_1_1"] = g211
    details["gamma_target"] = GAMMA_211
    ok &= abs(g211 - GAMMA_211) <= 1e-12
    c2 = cassels_coeff(2)
    details["cassels_2"] = c2
    ok &= c2 > 0.543
    worst = max(
        abs(cassels_coeff(d) - (1 - gamma_f(d, 1, 1) / d)) for d in range(2, 101)
    )
    details["identity_max_err"] = worst
    ok &= worst <= 1e-12
    return ok, details


# --------------------------------------------------------------- criterion 2

def criterion_2(quick=False, threads=1):
    details = {}
    ok = True
    steps = 128 if quick else 512
    worst = max(
        abs(rho(1 + i / steps) - (1 - log(1 + i / steps))) for i in range(steps + 1)
    )
    details["closed_form_max_err"] = worst
    ok &= worst <= 1e-10

    umax = 5.0 if quick else 10.0
    grid, vals = rho_rk4_oracle(u_max=umax)
    stride = 1000  # compare every 0.01
    worst = max(
        abs(rho(float(grid[i])) - float(vals[i]))
        for i in range(0, len(grid), stride)
    )
    details["solver_agreement_max_err"] = worst
    ok &= worst <= 1e-8

    res_worst = 0.0
    u = 1 + 1 / 32  # mesh midpoints: dyadic, never an integer knot
    top = 10.0 if quick else 19.9
    while u <= top:
        res_worst = max(res_worst, abs(delay_residual(u)))
        u += 1 / 16
    details["delay_residual_max"] = res_worst
    ok &= res_worst <= 1e-8
    return ok, details


# --------------------------------------------------------------- criterion 3

def criterion_3(quick=False, threads=1):
    details = {}
    ok = True
    x = 300 if quick else 2000
    y_grid = [1, 2, 3, 5, 10, 50, x, x * x]
    mismatches = 0
    for label in _POLY_SPECS:
        f = _poly(label)
        oracle_pp = [pplus_oracle(f(n)) for n in range(1, x + 1)]
        tab_pp = pplus_table(f, x, isqrt(coeff_bound(f, x)) + 1,
                             threads=threads)
        if [tab_pp.pplus_of(n) for n in range(1, x + 1)] != oracle_pp:
            mismatches += 1
        for y in y_grid:
            table = psi(f, x, y, threads=threads)
            expect = bytearray(
                1 if (f(n) != 0 and oracle_pp[n - 1] <= y) else 0
                for n in range(1, x + 1)
            )
            if table.flags != expect:
                mismatches += 1
        # spot-check the count oracle too
        if psi(f, min(x, 300), 10).psi != psi_oracle(f, min(x, 300), 10):
            mismatches += 1
    details["x"] = x
    details["polys"] = len(_POLY_SPECS)
    details["y_grid"] = y_grid
    details["mismatches"] = mismatches
    ok &= mismatches == 0
    return ok, details


# --------------------------------------------------------------- criterion 4

def criterion_4(quick=False, threads=1):
    # stated tolerance 0.02; the exact count conflicts with it (see module
    # docstring and the repo notes) -- asserted as specified, expected red
    f = _poly("t")
    count = psi(f, 10**6, 10**3, threads=threads).psi
    ratio = count / 10**6
    rho2 = rho(2.0)
    diff = abs(ratio - rho2)
    details = {
        "psi": count,
        "ratio": ratio,
        "rho_2": rho2,
        "abs_diff": diff,
        "stated_tolerance": 0.02,
    }
    return diff <= 0.02, details


# --------------------------------------------------------------- criterion 5

def criterion_5(quick=False, threads=1):
    details = {"ratios": {}}
    ok = True
    f = _poly("t^2+1")
    x = 10**6
    psi_full = psi(f, x, x, threads=threads).psi
    main_1 = thm11_main_term(f, x, 1)
    details["psi_x_x"] = psi_full
    details["thm11_main_u1"] = main_1
    details["ratios"]["1"] = psi_full / main_1
    ok &= psi_full < main_1
    for u in (1.5, 2.0):
        y = smooth_bound(x, u)
        count = psi(f, x, y, threads=threads).psi
        main = thm11_main_term(f, x, u)
        ratio = count / main
        details["ratios"][str(u)] = ratio
        details[f"psi_u{u}"] = count
        ok &= ratio < 1.2
    return ok, details


# ------------------------------------------------- criterion 6 (V/W oracle)

def _opp(limit, lo_excl, hi_incl):
    out = []
    for p in primes_up_to(int(hi_incl)):
        if p <= lo_excl or p > hi_incl:
            continue
        k = p
        while k <= limit:
            out.append((k, p))
            k *= p
    return out


def _osmooth(f, x, z, y):
    return {n for n in range(z + 1, x + 1)
            if f(n) != 0 and pplus_oracle(f(n)) <= y}


def _oomega(f, k):
    return omega_scan(f, k) if k <= 3 * 10**4 else omega(f, k)


def _oracle_v_w(f, x, z, y):
    fx, log_fz = f(x), log(f(z))
    smooth = _osmooth(f, x, z, y)
    V = fsum(
        log(p) * sum(1 for n in smooth if f(n) % k == 0)
        for k, p in _opp(fx, sqrt(y), y)
    ) / log_fz
    sq = _opp(fx, 1, sqrt(y))
    W = fsum(
        log(p1) * log(p2)
        * sum(1 for n in smooth if f(n) % (max(k1, k2) if p1 == p2 else k1 * k2) == 0)
        for k1, p1 in sq
        for k2, p2 in sq
    ) / log_fz**2
    return V, W


def _oracle_depth2(f, x, z, y):
    """Literal V_2^+, V_2^-, W_2^+, W_2^- sums."""
    fx, h = f(x), x - z
    log_fz = log(f(z))
    log_fzx = log_fz - log(x)
    smooth = _osmooth(f, x, z, y)
    v2p = fsum(
        log(p1) * log(p2) * sum(1 for n in smooth if f(n) % (k1 * k2) == 0)
        for k1, p1 in _opp(h, sqrt(y), y)
        for k2, p2 in _opp(h, 1, y)
        if k1 * k2 <= h
    ) / (log_fz * log_fzx)
    v2m = fsum(
        log(p1) * log(p2) * _oomega(f, k1 * k2)
        for k1, p1 in _opp(h, 1, y)
        for k2, p2 in _opp(fx, 1, y)
        if k1 * k2 > h
    ) / (log_fz * log_fzx)
    sq = _opp(h, 1, sqrt(y))
    yy = _opp(h, 1, y)
    w2p_terms = []
    for k1, p1 in sq:
        for k2, p2 in sq:
            lcm = max(k1, k2) if p1 == p2 else k1 * k2
            if lcm > h:
                continue
            for k3, p3 in yy:
                if lcm * k3 > h:
                    continue
                cnt = sum(1 for n in smooth if f(n) % (lcm * k3) == 0)
                w2p_terms.append(log(p1) * log(p2) * log(p3) * cnt)
    w2p = fsum(w2p_terms) / (log_fz**2 * log_fzx)
    w2m_terms = []
    for k1, p1 in yy:
        for k2, p2 in yy:
            lcm = max(k1, k2) if p1 == p2 else k1 * k2
            if lcm > h:
                continue
            for k3, p3 in _opp(fx, 1, y):
                if lcm * k3 <= h:
                    continue
                w2m_terms.append(
                    log(p1) * log(p2) * log(p3) * _oomega(f, lcm * k3)
                )
    w2m = fsum(w2m_terms) / (log_fz**2 * log_fzx)
    return v2p, v2m, w2p, w2m


def criterion_6(quick=False, threads=1):
    details = {}
    ok = True
    if quick:
        polys = ["t^2+1", "t^2-2"]
        xz_grid = [(60, 12), (100, 25)]
        y_grid = [5, 10, 20]
    else:
        polys = list(_POLY_SPECS)[1:]  # the four d >= 2 polynomials
        xz_grid = [(60, 12), (100, 25), (150, 40), (200, 50)]
        y_grid = [5, 10, 20, 50]
    n_instances = 0
    n_nonzero = 0
    worst_rel = 0.0
    lemma31_all = True
    for label in polys:
        f = _poly(label)
        for x, z in xz_grid:
            for y in y_grid:
                inst = VWInstance(f, x, z, y)
                rep = vw_prop21(inst)
                n_instances += 1
                if rep.lhs > 0:
                    n_nonzero += 1
                    ok &= rep.lhs < rep.V + sqrt(rep.lhs) * sqrt(rep.W)
                ok &= rep.verdict_2_1 and rep.verdict_2_2
                V, W = _oracle_v_w(f, x, z, y)
                for got, want in [(rep.V, V), (rep.W, W)]:
                    rel = abs(got - want) / max(1.0, abs(want))
                    worst_rel = max(worst_rel, rel)
                if f(z) > x:
                    for kappa in (2, 3):
                        res = lemma31_check(inst, kappa)
                        lemma31_all &= res.verdict
    ok &= worst_rel <= 1e-9
    ok &= lemma31_all

    if quick:
        depth_grid = [
            ("t(t^2+1)", 100, 25, 20),  # nonzero sums, small pools
            ("t^2-2", 200, 55, 6),      # degenerate 0 < 0 convention
        ]
    else:
        depth_grid = [
            # strict relations with nonzero sums
            ("t^2+1", 200, 60, 50),
            ("t^2-2", 150, 40, 50),
            ("t(t^2+1)", 150, 40, 50),
            ("(t+1)(t^2+2)", 150, 30, 50),
            # sparse-smooth windows, including the degenerate 0 < 0 convention
            ("t^2+1", 200, 60, 6),
            ("t(t^2+1)", 100, 25, 5),
            ("t^2-2", 200, 55, 6),
        ]
    monotone_all = True
    for label, x, z, y in depth_grid:
        rep1, rep2 = vw_depth_pair(VWInstance(_poly(label), x, z, y, depth=1))
        monotone_all &= rep1.monotone_v and rep1.monotone_w
        ok &= rep2.verdict_2_1 and rep2.verdict_2_2
    ok &= monotone_all

    oracle2_worst = 0.0
    for label, x, z, y in depth_grid[:1 if quick else 2]:
        f = _poly(label)
        rep = vw_prop32(VWInstance(f, x, z, y, depth=2))
        v2p, v2m, w2p, w2m = _oracle_depth2(f, x, z, y)
        for got, want in [
            (rep.v_plus, v2p),
            (rep.v_minus[1], v2m),
            (rep.w_plus, w2p),
            (rep.w_minus[1], w2m),
        ]:
            oracle2_worst = max(
                oracle2_worst, abs(got - want) / max(1.0, abs(want))
            )
    ok &= oracle2_worst <= 1e-9

    details.update(
        instances=n_instances,
        nonzero_lhs=n_nonzero,
        oracle_worst_rel=worst_rel,
        depth2_oracle_worst_rel=oracle2_worst,
        lemma31_all=lemma31_all,
        monotone_all=monotone_all,
    )
    if not quick:
        ok &= n_instances >= 50
    return ok, details


# --------------------------------------------------------------- criterion 7

def criterion_7(quick=False, threads=1):
    details = {}
    ok = True
    prod_cap = 2000 if quick else 10**4
    sample_n = 200 if quick else 2000
    polys = ["t^2+1", "t^2-2", "t(t^2+1)"]
    from math import gcd

    mult_fail = 0
    for label in polys:
        f = _poly(label)
        table = {k: omega(f, k) for k in range(1, prod_cap + 1)}
        for a in range(1, prod_cap + 1):
            for b in range(1, prod_cap // a + 1):
                if gcd(a, b) == 1 and table[a * b] != table[a] * table[b]:
                    mult_fail += 1
        rng = random.Random(f"mult|{label}")
        for _ in range(sample_n):
            a = rng.randrange(1, 10**4 + 1)
            b = rng.randrange(1, 10**4 + 1)
            if gcd(a, b) == 1 and omega(f, a * b) != omega(f, a) * omega(f, b):
                mult_fail += 1
    details["multiplicativity_failures"] = mult_fail
    ok &= mult_fail == 0

    p_top = 200 if quick else 1000
    hensel_fail = huxley_fail = 0
    for label in polys + ["(t+1)(t^2+2)"]:
        f = _poly(label)
        delta = f.discriminant_abs
        theta = factorize(delta)
        for p in primes_up_to(p_top):
            w1 = len(lift_roots(f, p, 1))
            tp = theta.get(p, 0)
            for v in range(1, 5):
                w = len(lift_roots(f, p, v))
                if w * w > f.d * f.d * p**tp or w * w > f.d * f.d * delta:
                    huxley_fail += 1
                if delta % p != 0 and w != w1:
                    hensel_fail += 1
    details["hensel_failures"] = hensel_fail
    details["huxley_failures"] = huxley_fail
    ok &= hensel_fail == 0 and huxley_fail == 0

    # Lemma 4.2 on the exhaustive grid: prime powers p <= 50, v <= 3, m <= 3
    from itertools import combinations_with_replacement

    pps = [(p, v) for p in primes_up_to(50) for v in (1, 2, 3)]
    m_top = 2 if quick else 3
    l42_fail = 0
    n_tuples = 0
    scan_fail = 0
    for label in polys:
        f = _poly(label)
        delta = f.discriminant_abs
        scan_candidates = []
        for m in range(1, m_top + 1):
            for tup in combinations_with_replacement(pps, m):
                n_tuples += 1
                fact = {}
                for p, v in tup:
                    fact[p] = fact.get(p, 0) + v
                lhs = omega_factored(f, fact)
                s_idx = [j for j, (p, _) in enumerate(tup) if delta % p != 0]
                rhs_prod = 1
                for j in s_idx:
                    p, v = tup[j]
                    rhs_prod *= len(lift_roots(f, p, v))
                k = m - len(s_idx)
                if lhs * lhs > (f.d * f.d * delta) ** k * rhs_prod * rhs_prod:
                    l42_fail += 1
                modulus = 1
                for p, e in fact.items():
                    modulus *= p**e
                if modulus <= 10**5:
                    scan_candidates.append((modulus, lhs))
        rng = random.Random(f"l42|{label}")
        take = 10 if quick else 40
        for modulus, lhs in rng.sample(
            scan_candidates, min(take, len(scan_candidates))
        ):
            if omega_scan(f, modulus) != lhs:
                scan_fail += 1
    details["lemma42_tuples"] = n_tuples
    details["lemma42_failures"] = l42_fail
    details["scan_oracle_failures"] = scan_fail
    ok &= l42_fail == 0 and scan_fail == 0
    return ok, details


# --------------------------------------------------------------- criterion 8

def criterion_8(quick=False, threads=1):
    details = {}
    ok = True
    ctx2 = make_context(2)
    small = [c_alpha(ctx2, x).count for x in (1, 2, 3)]
    details["c_alpha_1_2_3"] = small
    ok &= small == [0, 1, 2]

    n_top = 500 if quick else 10**4
    xthr = 500 if quick else 10**4
    dual_fail = 0
    for m in (2, 3, 6):
        ctx = make_context(m)
        table = pplus_table(ctx.f, n_top, 2 * n_top + m)
        for n in range(1, n_top + 1):
            v = abs(n * n - m)
            if v <= 1:
                continue
            path_a = table.pplus_of(n) > xthr
            path_b = False
            for p in factorize(v):
                if p > xthr:
                    cls = classify_prime(ctx, p)
                    if cls.kind != "split" or n % p not in {
                        (-u) % p for u in cls.roots
                    } | set(cls.roots):
                        dual_fail += 1
                    path_b = True
            if path_a != path_b:
                dual_fail += 1
    details["lemma52_failures"] = dual_fail
    ok &= dual_fail == 0

    xs = (10**3, 10**4) if quick else (10**3, 10**4, 10**5)
    ratios = []
    rx = []
    for x in xs:
        rep = verify_prop54(ctx2, x)
        ratios.append(rep.ratio_rlogx_over_x)
        rx.append(rep.r_over_x)
    details["prop54_ratio_rlogx_x"] = ratios
    details["prop54_r_over_x"] = rx
    ok &= all(r <= 4.0 for r in ratios)
    ok &= all(rx[i] > rx[i + 1] for i in range(len(rx) - 1))

    window_fail = 0
    for N, M in [(0, 30), (100, 50), (37, 80)]:
        for inc0 in (True, False):
            got = windowed_cassels(ctx2, N, M, include_zero=inc0).count
            want = _windowed_oracle(2, N, M, inc0)
            if got != want:
                window_fail += 1
    for x in (10, 50, 120):
        if windowed_cassels(ctx2, 0, x, include_zero=False).count != \
                c_alpha(ctx2, x).count:
            window_fail += 1
    details["window_oracle_failures"] = window_fail
    ok &= window_fail == 0

    if not quick:
        smoke = windowed_cassels(ctx2, 10**6, 1)
        details["thm56_smoke_N1e6_M1"] = smoke.count
        ok &= smoke.count in (0, 1)
    return ok, details


def _windowed_oracle(m, N, M, include_zero):
    from collections import defaultdict

    lo = 0 if include_zero else 1
    classes = defaultdict(list)
    for k in range(lo, N + M + 1):
        v = abs(k * k - m)
        if v <= 1:
            continue
        for p in factorize(v):
            classes[(p, k % p)].append(k)
    count = 0
    for n in range(N + 1, N + M + 1):
        v = abs(n * n - m)
        if v <= 1:
            continue
        if any(classes[(p, n % p)] == [n] for p in factorize(v)):
            count += 1
    return count


# --------------------------------------------------------------- criterion 9

def _primitive_definition_oracle(b, n):
    from math import gcd

    a_n = abs(n * n + b)
    if a_n <= 1:
        return False
    for d in range(2, a_n + 1):
        if a_n % d:
            continue
        if all(gcd(d, m * m + b) == 1 for m in range(1, n) if m * m + b != 0):
            return True
    return False


def criterion_9(quick=False, threads=1):
    details = {}
    ok = True
    res10 = r_b(1, 10, collect_records=True)
    oracle10 = sum(1 for n in range(1, 11) if _primitive_definition_oracle(1, n))
    details["r1_10"] = res10.count
    ok &= res10.count == 7 == oracle10

    x_eq = 2000 if quick else 10**4
    rb_records = r_b(1, x_eq, collect_records=True).records
    f1 = _poly("t^2+1")
    table = pplus_table(f1, x_eq, 2 * x_eq + 1)
    per_n_fail = 0
    count_arc = 0
    for n in range(1, x_eq + 1):
        arc_flag = True if n == 1 else table.pplus_of(n) > 2 * n
        if arc_flag:
            count_arc += 1
        if arc_flag != rb_records[n - 1].has_primitive:
            per_n_fail += 1
    details["n_eq_r1_per_n_failures"] = per_n_fail
    ok &= per_n_fail == 0
    ok &= n_arctan(x_eq).count == count_arc

    if not quick:
        ratios = {}
        rep_chain = {x: verify_prop63(1, x) for x in (10**4, 10**5, 10**6)}
        r1_1e6 = rep_chain[10**6].r_b / 10**6
        ratios["1"] = r1_1e6
        ok &= 0.5377 < r1_1e6 < 0.86
        threshold = cassels_coeff(2)
        ok &= r1_1e6 > threshold
        for b in (2, 3):
            rb_ratio = r_b(b, 10**6).count / 10**6
            ratios[str(b)] = rb_ratio
            ok &= rb_ratio > threshold
        details["rb_1e6_ratios"] = ratios
        details["cassels_threshold"] = threshold
        rx = [rep_chain[x].r_over_x for x in (10**4, 10**5, 10**6)]
        details["prop63_r_over_x"] = rx
        details["prop63_normalized"] = [
            rep_chain[x].ratio_normalized for x in (10**4, 10**5, 10**6)
        ]
        ok &= all(rx[i] > rx[i + 1] for i in range(len(rx) - 1))
    return ok, details


# -------------------------------------------------------------- criterion 10

def criterion_10(quick=False, threads=1):
    from . import cli

    details = {}
    ok = True
    with tempfile.TemporaryDirectory() as tmp:
        paths = [os.path.join(tmp, f"verify{i}.jsonl") for i in range(3)]
        rc0 = cli.main(["verify", "--level", "quick", "--threads", "1",
                        "--out", paths[0]])
        rc1 = cli.main(["verify", "--level", "quick", "--threads", "1",
                        "--out", paths[1]])
        rc2 = cli.main(["verify", "--level", "quick", "--threads", "2",
                        "--out", paths[2]])
        blobs = []
        for p in paths:
            with open(p, "rb") as fh:
                blobs.append(fh.read())
        details["verify_rc"] = [rc0, rc1, rc2]
        details["bytes"] = [len(b) for b in blobs]
        ok &= blobs[0] == blobs[1] == blobs[2]
        ok &= rc0 == rc1 == rc2 == 0

        ppaths = [os.path.join(tmp, f"psi{i}.json") for i in range(2)]
        for i, th in enumerate(("1", "4")):
            cli.main(["psi", "--poly", "t^2+1", "--x", "200000", "--u", "2",
                      "--threads", th, "--segment-size", "16384",
                      "--out", ppaths[i]])
        with open(ppaths[0], "rb") as fh:
            a = fh.read()
        with open(ppaths[1], "rb") as fh:
            b = fh.read()
        # the config echo records the thread count; strip it before comparing
        ja = json.loads(a)
        jb = json.loads(b)
        for j in (ja, jb):
            j["config"].pop("threads")
            j["config"].pop("out")
        ok &= ja == jb
        details["psi_runs_equal"] = ja == jb
    return ok, details


_CRITERIA = [
    (1, "closed-form exactness (gamma, cassels, identity)", criterion_1),
    (2, "Dickman rho: closed form, dual solvers, delay residual", criterion_2),
    (3, "sieve == oracle (psi flags and pplus)", criterion_3),
    (4, "Dickman consistency at scale (stated 0.02 tolerance)", criterion_4),
    (5, "Theorem 1.1 empirical monitor", criterion_5),
    (6, "V/W machinery vs literal oracles, monotone, lemma 3.1", criterion_6),
    (7, "omega suite: multiplicativity, Hensel, Huxley, lemma 4.2", criterion_7),
    (8, "quadratic-field bridge", criterion_8),
    (9, "applications: R_b, N(x), prop 6.3 trend", criterion_9),
    (10, "determinism across runs and thread counts", criterion_10),
]

_QUICK_SET = {1, 2, 3, 6, 7, 8, 9}


def run_all(level="full", threads=1):
    """Run the acceptance criteria; quick level = reduced scales, skipping
    the 10^6-scale criteria (4, 5) and the determinism double-run (10)."""
    quick = level == "quick"
    results = []
    for cid, name, fn in _CRITERIA:
        if quick and cid not in _QUICK_SET:
            continue
        start = time.time()
        passed, details = fn(quick=quick, threads=threads)
        results.append(
            CriterionResult(
                cid=cid,
                name=name,
                passed=bool(passed),
                seconds=time.time() - start,
                details=details,
            )
        )
    return results
