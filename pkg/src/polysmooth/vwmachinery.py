"""Exact evaluation of the V/W sum machinery on desk-scale instances.

V and W are the Cauchy-Schwarz parameters that bound the count of n in
(z, x] with f(n) y-smooth:  lhs < V + sqrt(lhs) sqrt(W), hence
lhs < V + W/2 + sqrt(VW + W^2/4).  The depth-m refinement splits each of V, W
into a "+" part (multiple sums over prime-power tuples with product <= h,
inner counts smooth-restricted) and tail "-" parts (products escaping h,
bounded through the root-count omega_f).  Every sum here is a literal
evaluation of its defining display; Lambda-weighted terms accumulate via
math.fsum.
"""

from dataclasses import dataclass, field
from math import fsum, log, sqrt

from .modroots import lift_roots, omega_factored
from .polyarith import FactoredPoly, t0 as compute_t0
from .primes import factorize, primes_up_to
from .smoothsieve import sieve_range

__all__ = [
    "VWInstance",
    "VWReport",
    "Lemma31Result",
    "Lemma41Sums",
    "vw_prop21",
    "vw_prop32",
    "vw_depth_pair",
    "lemma31_check",
    "lemma41_sums",
]

MAX_X = 10**4
MAX_FX = 10**8
MAX_DEPTH = 3
MAX_LEMMA41_X = 10**7


def _log_big(n):
    """log(n) for arbitrarily large positive int."""
    if n.bit_length() <= 900:
        return log(n)
    shift = n.bit_length() - 53
    return log(n >> shift) + shift * log(2)


@dataclass(frozen=True)
class VWInstance:
    """One evaluation instance: x > z > T_0(f), h = x - z, smoothness
    bound y, recursion depth."""

    f: FactoredPoly
    x: int
    z: int
    y: float
    depth: int = 1

    def __post_init__(self):
        T = compute_t0(self.f)
        if not (self.x > self.z > T):
            raise ValueError(
                f"need x > z > T_0(f) = {T}, got x={self.x}, z={self.z}"
            )
        if self.y < 1:
            raise ValueError("y must be >= 1")
        if not 1 <= self.depth <= MAX_DEPTH:
            raise ValueError(f"depth must be in [1, {MAX_DEPTH}]")

    @property
    def h(self):
        return self.x - self.z


@dataclass
class VWReport:
    """Exact totals, the depth split, and the inequality verdicts.

    Verdicts treat lhs = 0 as a vacuous pass (the paper's strict
    inequalities degenerate to 0 < 0 on empty counts)."""

    lhs: int
    V: float
    W: float
    v_plus: float
    w_plus: float
    v_minus: list
    w_minus: list
    verdict_2_1: bool
    verdict_2_2: bool
    vacuous: bool
    depth: int
    method: str
    t0: int
    monotone_v: bool = None
    monotone_w: bool = None


@dataclass
class Lemma31Result:
    kappa: int
    lhs: int
    rhs: float
    head_sum: float
    tail_sum: float
    verdict: bool
    vacuous: bool
    t0: int


@dataclass
class Lemma41Sums:
    x: int
    y: float
    s1: float  # sum Lambda(k) omega(k) / k,  P+(k) <= y
    s2: float  # same over sqrt(y) < P+(k) <= y
    s3: float  # sum (2 log k - Lambda(k)) Lambda(k) omega(k) / k
    s4: float  # sum Lambda(k) omega(k)
    comp1: float = field(init=False, default=0.0)
    comp2: float = field(init=False, default=0.0)
    comp3: float = field(init=False, default=0.0)
    comp4: float = field(init=False, default=0.0)
    res1: float = field(init=False, default=0.0)
    res2: float = field(init=False, default=0.0)
    res3: float = field(init=False, default=0.0)
    res4: float = field(init=False, default=0.0)
    g: int = 1

    def finalize(self, g, logy, logx):
        self.g = g
        self.comp1 = g * logy
        self.comp2 = g / 2 * logy
        self.comp3 = g / 2 * logy * logy
        self.comp4 = (self.y * logx / logy) if logy > 0 else 0.0
        self.res1 = self.s1 - self.comp1
        self.res2 = self.s2 - self.comp2
        self.res3 = self.s3 - self.comp3
        self.res4 = self.s4 - self.comp4
        return self


def _check_scale(inst):
    if inst.x > MAX_X:
        raise ValueError(f"x={inst.x} exceeds the desk-scale bound {MAX_X}")
    fx = inst.f(inst.x)
    if fx > MAX_FX:
        raise ValueError(f"f(x)={fx} exceeds the desk-scale bound {MAX_FX}")
    return fx


def _prime_powers(limit, primes, pred):
    """(k, p, v, log p) for prime powers k = p^v <= limit with pred(p)."""
    out = []
    for p in primes:
        if p > limit:
            break
        if not pred(p):
            continue
        lp = log(p)
        k = p
        v = 1
        while k <= limit:
            out.append((k, p, v, lp))
            k *= p
            v += 1
    return out


def _crt_roots(f, fact):
    """(modulus, residues mod modulus) of f = 0 for a factored modulus."""
    mod = 1
    roots = [0]
    for p, e in fact.items():
        rs = lift_roots(f, p, e).residues
        pe = p**e
        if not rs:
            return mod * pe, []
        if mod == 1:
            roots = list(rs)
        else:
            minv = pow(mod, -1, pe)
            roots = [
                r1 + mod * (((r2 - r1) * minv) % pe)
                for r1 in roots
                for r2 in rs
            ]
        mod *= pe
    return mod, roots


def _count_smooth(f, fact, table):
    """#{lo <= n <= hi : K | f(n), f(n) y-smooth} for K = prod p^e."""
    mod, roots = _crt_roots(f, fact)
    if not roots:
        return 0
    lo, hi = table.lo, table.hi
    flags = table.flags
    count = 0
    for r in roots:
        n = lo + ((r - lo) % mod)
        while n <= hi:
            if flags[n - lo]:
                count += 1
            n += mod
    return count


def vw_prop21(inst: VWInstance) -> VWReport:
    """Exact V and W of the initial (depth-free) inequality.

    V sums Lambda(k) times smooth-restricted divisor counts over prime powers
    k <= f(x) with sqrt(y) < P+(k) <= y; W is the analogous double sum over
    P+(k_i) <= sqrt(y) with modulus lcm(k1, k2).
    """
    fx = _check_scale(inst)
    f, x, z, y = inst.f, inst.x, inst.z, inst.y
    table = sieve_range(f, z + 1, x, y)
    lhs = table.psi
    log_fz = _log_big(f(z))
    primes = primes_up_to(int(y))

    v_terms = []
    for k, p, v, lp in _prime_powers(fx, primes, lambda p: p * p > y):
        cnt = _count_smooth(f, {p: v}, table)
        if cnt:
            v_terms.append(lp * cnt)
    V = fsum(v_terms) / log_fz

    w_terms = []
    sq_pool = _prime_powers(fx, primes, lambda p: p * p <= y)
    for i, (k1, p1, v1, lp1) in enumerate(sq_pool):
        for j in range(i, len(sq_pool)):
            k2, p2, v2, lp2 = sq_pool[j]
            if p1 == p2:
                fact = {p1: max(v1, v2)}
            else:
                fact = {p1: v1, p2: v2}
            cnt = _count_smooth(f, fact, table)
            if cnt:
                weight = lp1 * lp2 * cnt
                w_terms.append(weight if i == j else 2 * weight)
    W = fsum(w_terms) / (log_fz * log_fz)

    return _finish_report(lhs, V, W, V, W, [], [], 1, "prop21", inst)


def _finish_report(lhs, V, W, v_plus, w_plus, v_minus, w_minus, depth, method, inst):
    vacuous = lhs == 0
    if vacuous:
        v21 = v22 = True
    else:
        v21 = lhs < V + sqrt(lhs) * sqrt(W)
        v22 = lhs < V + W / 2 + sqrt(V * W + W * W / 4)
    return VWReport(
        lhs=lhs,
        V=V,
        W=W,
        v_plus=v_plus,
        w_plus=w_plus,
        v_minus=v_minus,
        w_minus=w_minus,
        verdict_2_1=v21,
        verdict_2_2=v22,
        vacuous=vacuous,
        depth=depth,
        method=method,
        t0=compute_t0(inst.f),
    )


def vw_prop32(inst: VWInstance) -> VWReport:
    """Exact depth-m split V = V_m^+ + sum_i V_i^-, W = W_m^+ + sum_i W_i^-.

    Requires f(z) > x.  Tuples are ordered; the first index of V_m^+ carries
    the sqrt(y) < P+ <= y constraint, the first two of W_m^+ carry
    P+ <= sqrt(y), and every tail sum relaxes to P+ <= y with the inner count
    bounded by omega_f of the full product.
    """
    fx = _check_scale(inst)
    f, x, z, y, m = inst.f, inst.x, inst.z, inst.y, inst.depth
    fz = f(z)
    if fz <= x:
        raise ValueError(f"depth recursion requires f(z) > x, got f(z)={fz}")
    h = inst.h
    table = sieve_range(f, z + 1, x, y)
    lhs = table.psi
    log_fz = _log_big(fz)
    log_fzx = _log_big(fz) - log(x)
    primes = primes_up_to(int(y))

    pool_y_h = _prime_powers(h, primes, lambda p: True)
    pool_v1 = _prime_powers(h, primes, lambda p: p * p > y)
    pool_sq_h = _prime_powers(h, primes, lambda p: p * p <= y)
    pool_y_fx = _prime_powers(fx, primes, lambda p: True)

    def descend(fact, p, v):
        old = fact.get(p, 0)
        fact[p] = old + v
        return old

    def undo(fact, p, old):
        if old:
            fact[p] = old
        else:
            del fact[p]

    # ---- V_m^+ ----------------------------------------------------------
    v_plus_terms = []

    def v_rec(idx, budget, fact, weight):
        if idx == m:
            cnt = _count_smooth(f, fact, table)
            if cnt:
                v_plus_terms.append(weight * cnt)
            return
        for k, p, v, lp in pool_y_h:
            if k > budget:
                continue
            old = descend(fact, p, v)
            v_rec(idx + 1, budget // k, fact, weight * lp)
            undo(fact, p, old)

    for k1, p1, v1, lp1 in pool_v1:
        v_rec(1, h // k1, {p1: v1}, lp1)
    v_plus = fsum(v_plus_terms) / (log_fz * log_fzx ** (m - 1))

    # ---- W_m^+ ----------------------------------------------------------
    w_plus_terms = []

    def w_rec(idx, budget, fact, weight):
        # idx counts k_3 .. k_{m+1}
        if idx == m - 1:
            cnt = _count_smooth(f, fact, table)
            if cnt:
                w_plus_terms.append(weight * cnt)
            return
        for k, p, v, lp in pool_y_h:
            if k > budget:
                continue
            old = descend(fact, p, v)
            w_rec(idx + 1, budget // k, fact, weight * lp)
            undo(fact, p, old)

    for k1, p1, v1, lp1 in pool_sq_h:
        for k2, p2, v2, lp2 in pool_sq_h:
            if p1 == p2:
                fact = {p1: max(v1, v2)}
                lcm = p1 ** fact[p1]
            else:
                fact = {p1: v1, p2: v2}
                lcm = k1 * k2
            if lcm > h:
                continue
            w_rec(0, h // lcm, fact, lp1 * lp2)
    w_plus = fsum(w_plus_terms) / (log_fz * log_fz * log_fzx ** (m - 1))

    # ---- V_i^- ----------------------------------------------------------
    v_minus = []
    for i in range(1, m + 1):
        terms = []

        def tail_v(idx, prefix_prod, fact, weight):
            if idx == i - 1:
                for k, p, v, lp in pool_y_fx:
                    if k * prefix_prod <= h:
                        continue
                    old = descend(fact, p, v)
                    w = omega_factored(f, fact)
                    if w:
                        terms.append(weight * lp * w)
                    undo(fact, p, old)
                return
            for k, p, v, lp in pool_y_h:
                if k * prefix_prod > h:
                    continue
                old = descend(fact, p, v)
                tail_v(idx + 1, prefix_prod * k, fact, weight * lp)
                undo(fact, p, old)

        tail_v(0, 1, {}, 1.0)
        v_minus.append(fsum(terms) / (log_fz * log_fzx ** (i - 1)))

    # ---- W_i^- ----------------------------------------------------------
    w_minus = []
    for i in range(1, m + 1):
        terms = []
        if i == 1:
            for k1, p1, v1, lp1 in pool_y_fx:
                for k2, p2, v2, lp2 in pool_y_fx:
                    if p1 == p2:
                        lcm_fact = {p1: max(v1, v2)}
                        lcm = p1 ** lcm_fact[p1]
                    else:
                        lcm_fact = {p1: v1, p2: v2}
                        lcm = k1 * k2
                    if lcm <= h:
                        continue
                    w = omega_factored(f, lcm_fact)
                    if w:
                        terms.append(lp1 * lp2 * w)
            w_minus.append(fsum(terms) / (log_fz * log_fz))
            continue

        def tail_w(idx, base_prod, fact, weight):
            # idx counts k_3 .. k_i; then k_{i+1} is the escaping index
            if idx == i - 2:
                for k, p, v, lp in pool_y_fx:
                    if k * base_prod <= h:
                        continue
                    old = descend(fact, p, v)
                    w = omega_factored(f, fact)
                    if w:
                        terms.append(weight * lp * w)
                    undo(fact, p, old)
                return
            for k, p, v, lp in pool_y_h:
                if k * base_prod > h:
                    continue
                old = descend(fact, p, v)
                tail_w(idx + 1, base_prod * k, fact, weight * lp)
                undo(fact, p, old)

        for k1, p1, v1, lp1 in pool_y_h:
            for k2, p2, v2, lp2 in pool_y_h:
                if p1 == p2:
                    base_fact = {p1: max(v1, v2)}
                    lcm = p1 ** base_fact[p1]
                else:
                    base_fact = {p1: v1, p2: v2}
                    lcm = k1 * k2
                if lcm > h:
                    continue
                tail_w(0, lcm, base_fact, lp1 * lp2)
        w_minus.append(fsum(terms) / (log_fz * log_fz * log_fzx ** (i - 1)))

    V = v_plus + fsum(v_minus)
    W = w_plus + fsum(w_minus)
    return _finish_report(lhs, V, W, v_plus, w_plus, v_minus, w_minus, m,
                          "prop32", inst)


def vw_depth_pair(inst: VWInstance):
    """Reports at depth m and m+1 with the monotone relations
    V_m^+ < V_{m+1}^+ + V_{m+1}^- (and the W analogue) filled in.

    The strict relations inherit the empty-sum convention: when both sides
    are empty (0 < 0, e.g. no y-smooth values anywhere near the window) the
    verdict is a vacuous pass."""
    rep = vw_prop32(inst)
    nxt_inst = VWInstance(inst.f, inst.x, inst.z, inst.y, inst.depth + 1)
    nxt = vw_prop32(nxt_inst)
    rhs_v = nxt.v_plus + nxt.v_minus[-1]
    rhs_w = nxt.w_plus + nxt.w_minus[-1]
    rep.monotone_v = rep.v_plus < rhs_v or rep.v_plus == rhs_v == 0.0
    rep.monotone_w = rep.w_plus < rhs_w or rep.w_plus == rhs_w == 0.0
    return rep, nxt


def lemma31_check(inst: VWInstance, kappa: int) -> Lemma31Result:
    """One application of the recursion inequality: the smooth-restricted
    count of n with kappa | f(n) against the two-term lambda sum."""
    fx = _check_scale(inst)
    f, x, z, y = inst.f, inst.x, inst.z, inst.y
    h = inst.h
    if not 1 <= kappa <= h:
        raise ValueError(f"kappa must lie in [1, h] = [1, {h}]")
    fz = f(z)
    if fz <= x:
        raise ValueError("lemma requires f(z) > x")
    table = sieve_range(f, z + 1, x, y)
    kfact = factorize(kappa) if kappa > 1 else {}
    lhs = _count_smooth(f, dict(kfact), table)
    log_fzx = _log_big(fz) - log(x)
    primes = primes_up_to(int(y))
    head = []
    tail = []
    for lam, p, v, lp in _prime_powers(fx, primes, lambda p: True):
        fact = dict(kfact)
        fact[p] = fact.get(p, 0) + v
        if lam * kappa <= h:
            cnt = _count_smooth(f, fact, table)
            if cnt:
                head.append(lp * cnt)
        else:
            w = omega_factored(f, fact)
            if w:
                tail.append(lp * w)
    head_sum = fsum(head) / log_fzx
    tail_sum = fsum(tail) / log_fzx
    rhs = head_sum + tail_sum
    vacuous = lhs == 0
    return Lemma31Result(
        kappa=kappa,
        lhs=lhs,
        rhs=rhs,
        head_sum=head_sum,
        tail_sum=tail_sum,
        verdict=True if vacuous else lhs < rhs,
        vacuous=vacuous,
        t0=compute_t0(f),
    )


def lemma41_sums(f: FactoredPoly, x: int, y) -> Lemma41Sums:
    """The four Lambda * omega_f partial sums over prime powers k <= x with
    P+(k) <= y, next to their stated comparators."""
    if x > MAX_LEMMA41_X:
        raise ValueError(f"x={x} exceeds the bound {MAX_LEMMA41_X}")
    if x < 1:
        raise ValueError("x must be >= 1")
    t1, t2, t3, t4 = [], [], [], []
    for p in primes_up_to(min(int(y), x)):
        lp = log(p)
        k = p
        v = 1
        while k <= x:
            w = len(lift_roots(f, p, v))
            if w:
                t1.append(lp * w / k)
                if p * p > y:
                    t2.append(lp * w / k)
                t3.append((2 * v - 1) * lp * lp * w / k)
                t4.append(lp * w)
            k *= p
            v += 1
    sums = Lemma41Sums(x=x, y=float(y), s1=fsum(t1), s2=fsum(t2),
                       s3=fsum(t3), s4=fsum(t4))
    logy = log(y) if y >= 2 else 0.0
    return sums.finalize(f.g, logy, log(x))
