"""Closed-form bound coefficients: the improvement factor gamma_f(u), the
main-term coefficient it multiplies, the Timofeev and Hmyrova comparators,
and the quadratic-field count coefficient.

All formulas are evaluated in 36-digit decimal arithmetic and returned as
floats, so every identity below holds far inside the 1e-12 gates.
"""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import exp, log, sqrt

from .polyarith import FactoredPoly

__all__ = [
    "gamma_f",
    "thm11_main_term",
    "thm11_in_range",
    "timofeev_main_term",
    "hmyrova_main_term",
    "cassels_coeff",
    "BoundReport",
    "make_bound_report",
]

_PREC = 36


def _dec(x):
    return Decimal(x) if isinstance(x, int) else Decimal(float(x))


def gamma_f(d, g, u):
    """gamma_f(u) = 1/2 + (2g+1)/(16du) + sqrt((2g+1)/(16du) + ((2g+1)/(16du))^2)."""
    if d < 2:
        raise ValueError("gamma_f requires total degree d >= 2")
    if g < 1 or g > d:
        raise ValueError("factor count g must satisfy 1 <= g <= d")
    if not u >= 1:
        raise ValueError("u must be >= 1")
    with localcontext() as ctx:
        ctx.prec = _PREC
        t = _dec(2 * g + 1) / (_dec(16) * _dec(d) * _dec(u))
        val = Decimal(1) / 2 + t + (t + t * t).sqrt()
    return float(val)


def _floor_u(u):
    m = int(u)
    return m if m <= u else m - 1


def _main_coeff(d, g, u):
    """g^[u] / (d (d-1)^([u]-1) u^[u]) in decimal."""
    m = _floor_u(u)
    with localcontext() as ctx:
        ctx.prec = _PREC
        num = _dec(g) ** m
        den = _dec(d) * _dec(d - 1) ** (m - 1) * _dec(u) ** m
        return num / den


def thm11_in_range(x, u):
    """The main theorem's stated u-range: 1 <= u <= sqrt(log x)/log log x."""
    return 1 <= u <= sqrt(log(x)) / log(log(x))


def thm11_main_term(f, x, u):
    """Main-term value gamma_f(u) * g^[u] / (d (d-1)^([u]-1) u^[u]) * x.

    The O(x/log log x) error term carries no explicit constant, so only the
    main term is evaluated; out-of-range u is allowed (see thm11_in_range and
    the warning flag on BoundReport).
    """
    d, g = (f.d, f.g) if isinstance(f, FactoredPoly) else f
    if d < 2:
        raise ValueError("theorem hypothesis requires d >= 2")
    with localcontext() as ctx:
        ctx.prec = _PREC
        val = _dec(gamma_f(d, g, u)) * _main_coeff(d, g, u) * _dec(x)
    return float(val)


def timofeev_main_term(d, g, u, eps):
    """(g+eps)^[u] / (d (d-1)^([u]-1) u^[u])."""
    if not u >= 1:
        raise ValueError("u must be >= 1")
    if eps < 0:
        raise ValueError("eps must be >= 0")
    m = _floor_u(u)
    with localcontext() as ctx:
        ctx.prec = _PREC
        num = (_dec(g) + _dec(eps)) ** m
        den = _dec(d) * _dec(d - 1) ** (m - 1) * _dec(u) ** m
        return float(num / den)


def hmyrova_main_term(u):
    """exp(-u log(u/e)) with the constant c(f) normalized to 1; applies to
    irreducible f only (flagged in BoundReport, never enforced here)."""
    if u <= 0:
        raise ValueError("u must be positive")
    return exp(-u * log(u / exp(1)))


def cassels_coeff(d):
    """1 - 1/(2d) - 3/(16d^2) - (1/d) sqrt(3/(16d) + (3/(16d))^2); equals
    1 - gamma_f(d, 1, 1)/d."""
    if d < 2:
        raise ValueError("cassels_coeff requires d >= 2")
    with localcontext() as ctx:
        ctx.prec = _PREC
        dd = _dec(d)
        t = _dec(3) / (16 * dd)
        val = 1 - 1 / (2 * dd) - _dec(3) / (16 * dd * dd) - (t + t * t).sqrt() / dd
    return float(val)


@dataclass
class BoundReport:
    """Every closed-form coefficient at one (d, g, u) point, with the range
    and applicability flags recorded rather than silently enforced."""

    d: int
    g: int
    u: float
    m: int
    gamma: float
    thm11_main: float
    timofeev_main: float
    timofeev_eps: float
    hmyrova_main: float
    hmyrova_applicable: bool
    cassels: float
    x: float = None
    thm11_main_x: float = None
    thm11_u_in_range: bool = None


def make_bound_report(d, g, u, eps=0.0, x=None):
    gamma = gamma_f(d, g, u)
    coeff = float(_dec(gamma) * _main_coeff(d, g, u))
    rep = BoundReport(
        d=d,
        g=g,
        u=float(u),
        m=_floor_u(u),
        gamma=gamma,
        thm11_main=coeff,
        timofeev_main=timofeev_main_term(d, g, u, eps),
        timofeev_eps=eps,
        hmyrova_main=hmyrova_main_term(u),
        hmyrova_applicable=g == 1,
        cassels=cassels_coeff(d) if g == 1 else None,
    )
    if x is not None:
        rep.x = float(x)
        rep.thm11_main_x = float(_dec(coeff) * _dec(x))
        rep.thm11_u_in_range = thm11_in_range(x, u)
    return rep
