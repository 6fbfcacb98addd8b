"""Prime-ideal counting in real quadratic fields Q(sqrt(m)) for squarefree
m = 2, 3 (mod 4), where the ring of integers is Z[sqrt(m)] and the ideal
denominator of (sqrt(m)) is trivial.

Prime ideals above p exist here only as (p, root-class) tags: an odd split p
gives two classes n = -u, u (mod p) from u^2 = m (mod p); ramified p | 2m
gives one; inert p never divides n^2 - m.  The count c_alpha(x) of n whose
ideal (n + sqrt(m)) has a prime divisor shared with no other (k + sqrt(m)),
k <= x, therefore reduces to a largest-prime-factor threshold test per n,
which the root-class sieve answers exactly.
"""

from dataclasses import dataclass
from math import isqrt, log

from .polyarith import FactoredPoly, build_factored
from .primes import factorize, is_prime, legendre, sqrt_mod_p
from .smoothsieve import psi, sieve_range

__all__ = [
    "QuadContext",
    "QuadPrimeClass",
    "make_context",
    "classify_prime",
    "c_alpha",
    "windowed_cassels",
    "verify_prop54",
    "CAlphaResult",
    "Prop54Report",
]

MAX_X = 10**5
MAX_WINDOW_END = 10**6 + 10


@dataclass(frozen=True)
class QuadContext:
    """alpha = sqrt(m) with minimal polynomial t^2 - m, field discriminant
    4m, and trivial ideal denominator."""

    m: int
    f: FactoredPoly
    disc: int
    ideal_denominator_norm: int = 1


def make_context(m: int) -> QuadContext:
    if m < 2:
        raise ValueError("m must be >= 2")
    if m % 4 not in (2, 3):
        raise ValueError("m must be 2 or 3 (mod 4) so that O_K = Z[sqrt(m)]")
    r = isqrt(m)
    if r * r == m:
        raise ValueError("m must not be a square")
    if any(e > 1 for e in factorize(m).values()):
        raise ValueError("m must be squarefree")
    f = build_factored([[-m, 0, 1]])  # t^2 - m
    return QuadContext(m=m, f=f, disc=4 * m)


@dataclass(frozen=True)
class QuadPrimeClass:
    """Splitting data of a rational prime: the root classes are the residues
    u with u^2 = m (mod p), and membership in P_K (first degree and
    unambiguous) holds exactly for split primes."""

    p: int
    kind: str  # split | inert | ramified
    roots: tuple
    in_P_K: bool


def classify_prime(ctx: QuadContext, p: int) -> QuadPrimeClass:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    m = ctx.m
    if p == 2:
        # p | disc = 4m always here (m = 2, 3 mod 4)
        return QuadPrimeClass(p, "ramified", (m % 2,), False)
    if m % p == 0:
        return QuadPrimeClass(p, "ramified", (0,), False)
    if legendre(m, p) == 1:
        u = sqrt_mod_p(m, p)
        return QuadPrimeClass(p, "split", tuple(sorted((u, p - u))), True)
    return QuadPrimeClass(p, "inert", (), False)


@dataclass
class CAlphaResult:
    m: int
    x: int
    count: int
    witnesses: list  # (n, p, n mod p) per counted n
    include_zero: bool = False
    lo: int = 1


def _unique_class_count(ctx, lo, hi, exclusion_lo, exclusion_hi,
                        collect_witnesses):
    """Count n in [lo, hi] such that some prime p | n^2 - m has its class
    n (mod p) free of any other k in [exclusion_lo, exclusion_hi].

    The class of n mod p contains another excluded k iff p <= n - exclusion_lo
    or p <= exclusion_hi - n, so the test is P+(|n^2 - m|) > threshold; the
    sieve provides exact P+ per n.
    """
    table = sieve_range(ctx.f, lo, hi, float("inf"), need_pplus=True)
    count = 0
    witnesses = [] if collect_witnesses else None
    for n in range(lo, hi + 1):
        if abs(n * n - ctx.m) <= 1:
            continue  # unit: no prime ideal divides (n + sqrt(m))
        pp = table.pplus_of(n)
        threshold = max(n - exclusion_lo, exclusion_hi - n)
        if pp > threshold:
            count += 1
            if collect_witnesses:
                witnesses.append((n, pp, n % pp))
    return count, witnesses


def c_alpha(ctx: QuadContext, x: int, collect_witnesses: bool = True) -> CAlphaResult:
    """The number of n in [1, x] such that some prime ideal divides
    (n + sqrt(m)) and divides no other (k + sqrt(m)), 1 <= k <= x."""
    if x > MAX_X:
        raise ValueError(f"x={x} exceeds the oracle-grade bound {MAX_X}")
    if x < 1:
        raise ValueError("x must be >= 1")
    count, wit = _unique_class_count(ctx, 1, x, 1, x, collect_witnesses)
    return CAlphaResult(m=ctx.m, x=x, count=count, witnesses=wit or [])


def windowed_cassels(ctx: QuadContext, N: int, M: int,
                     include_zero: bool = True,
                     collect_witnesses: bool = False) -> CAlphaResult:
    """Count n in (N, N+M] whose ideal (n + sqrt(m)) has a prime divisor
    dividing no (k + sqrt(m)) for k in [0, N+M] (k from 1 with
    include_zero=False), k != n."""
    if M < 0:
        raise ValueError("M must be >= 0")
    if N < 0:
        raise ValueError("N must be >= 0")
    if N + M > MAX_WINDOW_END:
        raise ValueError(f"N+M exceeds the oracle-grade bound {MAX_WINDOW_END}")
    if M == 0:
        return CAlphaResult(m=ctx.m, x=N, count=0, witnesses=[],
                            include_zero=include_zero, lo=N + 1)
    k0 = 0 if include_zero else 1
    count, wit = _unique_class_count(ctx, N + 1, N + M, k0, N + M,
                                     collect_witnesses)
    return CAlphaResult(m=ctx.m, x=N + M, count=count, witnesses=wit or [],
                        include_zero=include_zero, lo=N + 1)


@dataclass
class Prop54Report:
    m: int
    x: int
    c_alpha: int
    x_minus_psi: int
    residual: int
    ratio_rlogx_over_x: float
    r_over_x: float


def verify_prop54(ctx: QuadContext, x: int) -> Prop54Report:
    """c_alpha(x) against x - Psi_f(x, x) for f = t^2 - m, with the residual
    normalized by x/log x (the error-term shape, constant not explicit)."""
    c = c_alpha(ctx, x, collect_witnesses=False).count
    ps = psi(ctx.f, x, x).psi
    r = abs(c - (x - ps))
    return Prop54Report(
        m=ctx.m,
        x=x,
        c_alpha=c,
        x_minus_psi=x - ps,
        residual=r,
        ratio_rlogx_over_x=r * log(x) / x,
        r_over_x=r / x,
    )
