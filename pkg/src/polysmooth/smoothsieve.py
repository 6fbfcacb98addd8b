"""Exact Psi_f(x, y) and per-n largest prime factors of f(n) by a segmented
sieve over root classes.

Per segment the cofactor r[n] = |f(n)| is divided to full multiplicity by
every prime p <= y along the arithmetic progressions n = u (mod p), u a root
of f mod p.  n is y-smooth iff the cofactor ends at 1 (P+(0) = +inf keeps
f(n) = 0 non-smooth; f(n) = +-1 is always smooth).  When y exceeds
isqrt(max |f|) the sieve switches to cofactor-primality mode: any surviving
cofactor is prime, so P+ is known exactly and flags become P+ <= y.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import exp, isqrt, log

from .polyarith import FactoredPoly
from .primes import largest_prime_factor, primes_up_to
from .modroots import roots_mod_p

__all__ = ["SmoothTable", "psi", "pplus_table", "psi_oracle", "smooth_bound",
           "sieve_range"]

DEFAULT_SEGMENT = 1 << 20


@dataclass
class SmoothTable:
    """Per-n smoothness data for f(n), n in [lo, hi], plus the count psi."""

    f: FactoredPoly
    lo: int
    hi: int
    y: float
    flags: bytearray
    psi: int
    pplus: list = None
    sieve_bound: int = field(default=0)

    def flag(self, n):
        return bool(self.flags[n - self.lo])

    def pplus_of(self, n):
        if self.pplus is None:
            raise ValueError("table was built without pplus")
        return self.pplus[n - self.lo]

    def __len__(self):
        return self.hi - self.lo + 1 if self.hi >= self.lo else 0


def coeff_bound(f, height):
    """sum |a_i| height^i >= max |f(n)| over |n| <= height."""
    poly = f.product if isinstance(f, FactoredPoly) else f
    h = max(1, abs(height))
    return sum(abs(c) * h**i for i, c in enumerate(poly.coeffs))


def iroot(n, k):
    """Largest integer r with r^k <= n (integer Newton; no float overflow)."""
    if n < 0:
        raise ValueError("negative radicand")
    if k < 1:
        raise ValueError("k must be >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    r = 1 << (n.bit_length() + k - 1) // k  # r^k >= n
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def smooth_bound(x, u):
    """x^(1/u) as the smoothness bound for psi(x, x^(1/u)).

    For u with a small exact rational representation (every test grid value),
    the bound is the exact integer floor of x^(1/u):  p <= x^(b/a)  iff
    p^a <= x^b.  Irrational-looking u falls back to extended-precision float.
    """
    if u <= 0:
        raise ValueError("u must be positive")
    fr = Fraction(u).limit_denominator(64)
    if float(fr) == float(u) and fr.numerator <= 64:
        a, b = fr.numerator, fr.denominator
        return iroot(x**b, a)
    return exp(log(x) / u)


def eval_range(poly, n0, count):
    """[f(n0), ..., f(n0+count-1)] exactly, by integer forward differences."""
    d = poly.degree
    if count <= 0:
        return []
    if count <= d + 1:
        return [poly(n0 + i) for i in range(count)]
    # difference table at n0
    row = [poly(n0 + i) for i in range(d + 1)]
    diffs = []
    for _ in range(d + 1):
        diffs.append(row[0])
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    out = []
    append = out.append
    for _ in range(count):
        append(diffs[0])
        for i in range(d):
            diffs[i] += diffs[i + 1]
    return out


def _sieve_segment(f, seg_lo, seg_len, roots, need_best):
    vals = [abs(v) for v in eval_range(f.product, seg_lo, seg_len)]
    best = [1] * seg_len if need_best else None
    for p, residues in roots:
        for u in residues:
            i = (u - seg_lo) % p
            while i < seg_len:
                v = vals[i]
                if v:
                    v //= p
                    while v % p == 0:
                        v //= p
                    vals[i] = v
                    if need_best:
                        best[i] = p
                i += p
    return vals, best


def sieve_range(f, lo, hi, y, *, need_pplus=False, pplus_bound=None,
                segment_size=DEFAULT_SEGMENT, threads=1):
    """SmoothTable for n in [lo, hi] (lo >= 0).

    `y` is the smoothness bound (real).  With need_pplus, `pplus_bound` B must
    satisfy B^2 > max |f(n)| so surviving cofactors are prime, and the table
    carries exact P+(|f(n)|) per n.

    Each hit divides out the prime to full multiplicity; sieving prime powers
    through lifted root classes instead would save the inner division loop
    and is the one optimization hook left open here.
    """
    if lo < 0:
        raise ValueError("range must start at a nonnegative integer")
    if y < 1:
        raise ValueError("y must be >= 1")
    count = hi - lo + 1
    if count <= 0:
        return SmoothTable(f, lo, hi, y, bytearray(), 0,
                           pplus=[] if need_pplus else None)
    mbound = coeff_bound(f, max(abs(lo), abs(hi)))
    b0 = isqrt(mbound) + 1
    if need_pplus:
        if pplus_bound is None:
            pplus_bound = b0
        if pplus_bound**2 <= mbound:
            raise ValueError(
                f"B={pplus_bound} fails the primality guarantee: need "
                f"B^2 > {mbound}"
            )
        effective = min(pplus_bound, b0)
        prime_mode = True
    else:
        yf = int(y)  # floor for y >= 1
        if yf >= b0:
            effective = b0
            prime_mode = True
        else:
            effective = yf
            prime_mode = False
    primes = primes_up_to(effective)
    roots = []
    for p in primes:
        rs = roots_mod_p(f, p)
        if rs.residues:
            roots.append((p, rs.residues))

    segments = []
    s = lo
    while s <= hi:
        seg_len = min(segment_size, hi - s + 1)
        segments.append((s, seg_len))
        s += seg_len

    need_best = need_pplus or prime_mode

    def work(seg):
        return _sieve_segment(f, seg[0], seg[1], roots, need_best)

    if threads > 1 and len(segments) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(work, segments))
    else:
        results = [work(seg) for seg in segments]

    flags = bytearray(count)
    pplus = [0] * count if need_pplus else None
    total = 0
    pos = 0
    for (seg_lo, seg_len), (vals, best) in zip(segments, results):
        for i in range(seg_len):
            v = vals[i]
            if v == 0:
                ok = False
                pv = float("inf")
            elif prime_mode:
                pv = v if v > 1 else best[i]
                ok = pv <= y
            else:
                ok = v == 1
                pv = None
            if ok:
                flags[pos] = 1
                total += 1
            if need_pplus:
                pplus[pos] = pv
            pos += 1
    return SmoothTable(f, lo, hi, y, flags, total, pplus=pplus,
                       sieve_bound=effective)


def psi(f, x, y, *, segment_size=DEFAULT_SEGMENT, threads=1):
    """Exact Psi_f(x, y): the number of n in [1, x] with f(n) y-smooth."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return sieve_range(f, 1, x, y, segment_size=segment_size, threads=threads)


def pplus_table(f, x, B, *, segment_size=DEFAULT_SEGMENT, threads=1):
    """SmoothTable over [1, x] carrying exact P+(|f(n)|) for every n.

    Requires B^2 > max_{n<=x} |f(n)| (checked via the coefficient bound), so
    a cofactor surviving division by all sieved primes is prime.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    return sieve_range(f, 1, x, B, need_pplus=True, pplus_bound=B,
                       segment_size=segment_size, threads=threads)


def psi_oracle(f, x, y):
    """Independent brute-force Psi_f(x, y) by trial division of each |f(n)|."""
    if x > 10**5:
        raise ValueError("oracle scale is x <= 1e5")
    if x < 1:
        return 0
    count = 0
    for n in range(1, x + 1):
        v = abs(f(n))
        if v == 0:
            continue
        d = 2
        while d <= y and d * d <= v:
            while v % d == 0:
                v //= d
            d += 1 if d == 2 else 2
        if v == 1 or v <= y:
            count += 1
    return count


def pplus_oracle(value):
    """Oracle-side P+ via generic factorization (trial + deterministic
    Miller-Rabin + rho); independent of the sieve path."""
    return largest_prime_factor(value)
