"""Exact integer polynomial arithmetic, validated factored input, and the
monotonicity threshold t0.

Polynomials are dense integer coefficient tuples, lowest degree first.  A
FactoredPoly is a product of distinct irreducible factors f_1 ... f_g; its
absolute discriminant is assembled multiplicatively from per-factor
discriminants and pairwise resultants.
"""

import json
import re
from math import gcd

from .primes import factorize

__all__ = [
    "IntPoly",
    "FactoredPoly",
    "parse_poly",
    "build_factored",
    "t0",
    "resultant",
    "discriminant",
]


class IntPoly:
    """Dense integer polynomial in t, lowest-degree-first coefficients.

    The zero polynomial is rejected; the leading coefficient is nonzero by
    construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ValueError("zero polynomial")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def __call__(self, n):
        """Exact f(n) by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def derivative(self):
        if self.degree == 0:
            raise ValueError("derivative of a constant is the zero polynomial")
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def taylor_shift(self, a):
        """Coefficients of f(t + a), exactly (synthetic division)."""
        cs = list(self.coeffs)
        n = len(cs)
        for j in range(n - 1):
            for i in range(n - 2, j - 1, -1):
                cs[i] += a * cs[i + 1]
        return IntPoly(cs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            cs = list(self.coeffs)
            cs[0] -= other
            return IntPoly(cs)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x - y for x, y in zip(a, b)])

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self.pretty()!r})"

    def pretty(self):
        """Human form like 't^2-2' (highest degree first)."""
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(t(?:(?:\^|\*\*)(\d+))?)?$")


def parse_poly(text):
    """Parse a polynomial from a JSON coefficient array (lowest degree
    first) or a symbolic ASCII string in the variable t, e.g. 't^2+1'."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial input")
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as e:
            raise ValueError(f"bad coefficient array: {e}") from None
        if not isinstance(data, list) or not data:
            raise ValueError("coefficient array must be a nonempty list")
        for c in data:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"non-integer coefficient {c!r}")
        return IntPoly(data)
    # symbolic: split into signed terms
    s = s.replace(" ", "")
    chunks = s.replace("-", "+-").split("+")
    coeffs = {}
    seen_term = False
    for chunk in chunks:
        if chunk == "":
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            exp = 0
        else:
            exp = int(m.group(3)) if m.group(3) is not None else 1
        coeffs[exp] = coeffs.get(exp, 0) + (-coeff if neg else coeff)
        seen_term = True
    if not seen_term:
        raise ValueError(f"no terms found in {text!r}")
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(out)  # raises on the zero polynomial


def _det_bareiss(rows):
    """Exact integer determinant by fraction-free Gaussian elimination."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def resultant(f, g):
    """Res(f, g) over the integers via the Sylvester matrix."""
    df, dg = f.degree, g.degree
    if df == 0:
        return f.coeffs[0] ** dg
    if dg == 0:
        return g.coeffs[0] ** df
    n = df + dg
    fa = list(reversed(f.coeffs))
    ga = list(reversed(g.coeffs))
    rows = []
    for i in range(dg):
        rows.append([0] * i + fa + [0] * (n - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + ga + [0] * (n - dg - 1 - i))
    return _det_bareiss(rows)


def discriminant(f):
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lead(f); exact integer."""
    d = f.degree
    if d == 0:
        raise ValueError("discriminant of a constant")
    if d == 1:
        return 1
    res = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, f.lead)
    if r != 0:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q


def _divisors_abs(n):
    n = abs(n)
    fac = factorize(n)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def _has_rational_root(f):
    """Rational root test: any root p/q has p | a0 and q | lead."""
    a0 = f.coeffs[0]
    if a0 == 0:
        return True
    for q in _divisors_abs(f.lead):
        for p in _divisors_abs(a0):
            if gcd(p, q) > 1:
                continue
            for pp in (p, -p):
                # f(pp/q) = 0  <=>  sum a_i pp^i q^(d-i) = 0
                acc = 0
                d = f.degree
                for i, c in enumerate(f.coeffs):
                    acc += c * pp**i * q ** (d - i)
                if acc == 0:
                    return True
    return False


class FactoredPoly:
    """A product of distinct irreducible factors over Z[t], with total degree
    d, factor count g, and absolute discriminant.

    Factors of degree <= 3 are proven irreducible by the rational root test;
    higher degrees are accepted as asserted with a warning flag.
    """

    __slots__ = (
        "factors",
        "degrees",
        "g",
        "d",
        "discriminant_abs",
        "statuses",
        "warned",
        "orientation_flipped",
        "product",
        "_root_cache",
        "_lift_cache",
        "_t0",
    )

    def __init__(self, factors, degrees, g, d, disc_abs, statuses, warned, flipped, product):
        self.factors = factors
        self.degrees = degrees
        self.g = g
        self.d = d
        self.discriminant_abs = disc_abs
        self.statuses = statuses
        self.warned = warned
        self.orientation_flipped = flipped
        self.product = product
        self._root_cache = {}
        self._lift_cache = {}
        self._t0 = None

    def __call__(self, n):
        return self.product(n)

    def __eq__(self, other):
        return isinstance(other, FactoredPoly) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"FactoredPoly({self.pretty()!r})"

    def pretty(self):
        if self.g == 1:
            return self.factors[0].pretty()
        return "".join(f"({f.pretty()})" for f in self.factors)

    def key(self):
        """Stable string key (used for caches and reproducible seeding)."""
        return "|".join(",".join(map(str, f.coeffs)) for f in self.factors)


def build_factored(factors):
    """Validate a factor list and assemble a FactoredPoly.

    disc(FG) = disc(F) disc(G) Res(F, G)^2 is applied pairwise, so the total
    discriminant never requires expanding-then-factoring.  Rejects duplicate
    factors, non-primitive factors, and any factor of degree >= 2 with a
    rational root.
    """
    if not factors:
        raise ValueError("empty factor list")
    polys = []
    flipped = 0
    for item in factors:
        if isinstance(item, IntPoly):
            f = item
        elif isinstance(item, str):
            f = parse_poly(item)
        else:
            f = IntPoly(item)
        if f.degree < 1:
            raise ValueError(f"constant factor {f.pretty()}")
        if f.lead < 0:
            f = -f
            flipped += 1
        if f.content() != 1:
            raise ValueError(f"factor {f.pretty()} is not primitive")
        polys.append(f)
    if len(set(polys)) != len(polys):
        raise ValueError("duplicate factor")
    statuses = []
    warned = False
    for f in polys:
        if f.degree == 1:
            statuses.append("proven")
        elif _has_rational_root(f):
            raise ValueError(f"factor {f.pretty()} has a rational root (reducible)")
        elif f.degree <= 3:
            statuses.append("proven")
        else:
            statuses.append("asserted")
            warned = True
    disc_total = 1
    for f in polys:
        disc_total *= discriminant(f)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            disc_total *= resultant(polys[i], polys[j]) ** 2
    if disc_total == 0:
        raise ValueError("vanishing discriminant: factors share a root")
    product = polys[0]
    for f in polys[1:]:
        product = product * f
    return FactoredPoly(
        factors=tuple(polys),
        degrees=tuple(f.degree for f in polys),
        g=len(polys),
        d=sum(f.degree for f in polys),
        disc_abs=abs(disc_total),
        statuses=tuple(statuses),
        warned=warned,
        flipped=flipped % 2 == 1,
        product=product,
    )


def _cauchy_bound(f):
    """Integer B with every real root of f strictly below B."""
    if f.degree == 0:
        return 2
    lead = abs(f.lead)
    m = max(abs(c) for c in f.coeffs[:-1])
    return 2 + (m + lead - 1) // lead


def _sign_variations(coeffs):
    v = 0
    last = 0
    for c in coeffs:
        if c == 0:
            continue
        if last and (c > 0) != (last > 0):
            v += 1
        last = c
    return v


def _no_roots_beyond(f, shift):
    """True when f has no real root in (shift, inf): Descartes' rule applied
    to f(t + shift) with zero sign variations."""
    return _sign_variations(f.taylor_shift(shift).coeffs) == 0


def t0(f, sign=1):
    """Least integer T >= 2 (up to Descartes conservativeness) such that
    sign*f is strictly increasing and > 1 on the open ray (T, inf).

    Scans integer candidates upward; each candidate is certified exactly by
    zero Descartes sign variations of the shifted derivative and of
    sign*f - 1, and the Cauchy root bound guarantees termination.
    """
    poly = f.product if isinstance(f, FactoredPoly) else f
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    g = poly if sign == 1 else -poly
    if g.degree == 0:
        raise ValueError("constant polynomial has no threshold")
    if g.lead < 0:
        raise ValueError("polynomial does not tend to +infinity with this sign")
    if isinstance(f, FactoredPoly) and sign == 1 and f._t0 is not None:
        return f._t0
    gp = g.derivative()
    gm1 = g - 1
    top = max(2, _cauchy_bound(gp), _cauchy_bound(gm1))
    result = top
    for cand in range(2, top + 1):
        if _no_roots_beyond(gp, cand) and _no_roots_beyond(gm1, cand):
            result = cand
            break
    if isinstance(f, FactoredPoly) and sign == 1:
        f._t0 = result
    return result
