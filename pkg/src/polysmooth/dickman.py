"""The Dickman function rho(u) and the product prediction for polynomial
smooth-value densities.

rho is advanced one unit interval at a time through the integral identity
u*rho(u) = integral_{u-1}^{u} rho(t) dt: on [k, k+1] the solution is the
fixed point of a contraction (factor <= 1/(2k)) and is represented by a
Legendre series built on Gauss-Legendre nodes, so the evaluation error is
far below the 1e-10 target.  [0,1] is exactly 1 and [1,2] is exactly
1 - log(u).

A second, independent solver (fixed-step RK4 on u*rho'(u) = -rho(u-1),
step 1e-5) exists solely as a cross-check oracle.
"""

from dataclasses import dataclass
from math import log

import numpy as np
from numpy.polynomial import legendre as L

__all__ = ["rho", "martin_prediction", "RhoTable", "build_rho_table",
           "rho_rk4_oracle", "delay_residual", "U_MAX"]

U_MAX = 20.0
_N_COEF = 40    # Legendre series length per unit interval
_N_NODES = 64   # Gauss-Legendre nodes for projection

_nodes, _weights = L.leggauss(_N_NODES)
_vander = L.legvander(_nodes, _N_COEF - 1)
_proj = (_vander * _weights[:, None]).T * (np.arange(_N_COEF) + 0.5)[:, None]


def _project(vals):
    """Legendre coefficients of the interpolant through Gauss nodes."""
    return _proj @ vals


def _series_eval(coef, xi):
    return L.legval(xi, coef)


def _antiderivative(coef):
    """Coefficients of F(xi) = integral_{-1}^{xi} series."""
    ic = L.legint(coef)
    ic[0] -= L.legval(-1.0, ic)
    return ic


def _build_intervals():
    """Legendre series of rho on [k, k+1] for k = 0 .. 19."""
    series = {}
    c0 = np.zeros(_N_COEF)
    c0[0] = 1.0
    series[0] = c0
    # [1, 2]: project the closed form 1 - log(u)
    u1 = 1.0 + (_nodes + 1.0) / 2.0
    series[1] = _project(1.0 - np.log(u1))
    for k in range(2, int(U_MAX)):
        prev_anti = _antiderivative(series[k - 1])
        total_prev = _series_eval(prev_anti, 1.0)
        # A(xi) = 1/2 * integral_{xi}^{1} L_{k-1}
        a_vals = 0.5 * (total_prev - _series_eval(prev_anti, _nodes))
        u_vals = k + (_nodes + 1.0) / 2.0
        rho_k = _series_eval(series[k - 1], 1.0)
        vals = np.full(_N_NODES, rho_k)
        tol = rho_k * 1e-17  # relative: tail values shrink below 1e-26
        for _ in range(400):
            cur = _project(vals)
            cur_anti = _antiderivative(cur)
            new_vals = (a_vals + 0.5 * _series_eval(cur_anti, _nodes)) / u_vals
            if np.max(np.abs(new_vals - vals)) < tol:
                vals = new_vals
                break
            vals = new_vals
        series[k] = _project(vals)
    return series


_series = None


def _get_series():
    global _series
    if _series is None:
        _series = _build_intervals()
    return _series


def rho(u):
    """Dickman rho(u) for 0 <= u <= 20, absolute accuracy well below 1e-10.

    Exact closed forms on [0,1] (rho = 1) and [1,2] (rho = 1 - log u)."""
    uf = float(u)
    if uf < 0:
        raise ValueError("rho is undefined for u < 0")
    if uf > U_MAX:
        raise ValueError(f"u={u} exceeds the table range [0, {U_MAX}]")
    if uf <= 1.0:
        return 1.0
    if uf <= 2.0:
        return 1.0 - log(uf)
    k = min(int(uf), int(U_MAX) - 1)
    xi = 2.0 * (uf - k) - 1.0
    return float(_series_eval(_get_series()[k], xi))


def martin_prediction(degrees, u):
    """prod_j rho(d_j * u): the conjectured density of u-smooth-parameter
    values for a polynomial with irreducible factor degrees d_j."""
    if not degrees:
        raise ValueError("empty degree list")
    for d in degrees:
        if d < 1:
            raise ValueError("degrees must be >= 1")
    out = 1.0
    for d in degrees:
        out *= rho(d * u)
    return out


@dataclass
class RhoTable:
    """rho sampled on a uniform mesh of [0, u_max]."""

    step: float
    u_max: float
    values: list

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty table")


def build_rho_table(step=1.0 / 64, u_max=U_MAX):
    n = int(round(u_max / step))
    if abs(n * step - u_max) > 1e-12:
        raise ValueError("step must divide u_max")
    vals = [rho(i * step) for i in range(n + 1)]
    return RhoTable(step=step, u_max=u_max, values=vals)


def rho_rk4_oracle(u_max=10.0, step=1e-5):
    """Independent cross-check solver: classical fixed-step RK4 applied to
    rho'(u) = -rho(u-1)/u from u = 1 (for this right-hand side, independent
    of rho(u), the RK4 stages collapse to Simpson increments; off-grid delay
    lookups use 4-point interpolation, error ~ step^4).

    Returns (grid, values) covering [1, u_max].
    """
    m = int(round(1.0 / step))
    if abs(m * step - 1.0) > 1e-12:
        raise ValueError("step must divide 1")
    kmax = int(round(u_max)) - 1
    grids = [np.linspace(1.0, 2.0, m + 1)]
    prev = 1.0 - np.log(grids[0])  # delayed values on [0,1] are exactly 1
    # [1,2] solved by the same march from rho(1) = 1 with rho(t-1) = 1:
    g_full = -1.0 / grids[0]
    g_half = -1.0 / (grids[0][:-1] + step / 2.0)
    inc = (step / 6.0) * (g_full[:-1] + 4.0 * g_half + g_full[1:])
    sol = np.empty(m + 1)
    sol[0] = 1.0
    sol[1:] = 1.0 + np.cumsum(inc)
    solutions = [sol]
    for k in range(1, kmax):
        grid = np.linspace(k + 1.0, k + 2.0, m + 1)
        prev_sol = solutions[-1]
        # delayed values at grid points: exactly the previous grid
        delayed_full = prev_sol
        # delayed values at half-steps: 4-point midpoint interpolation
        dmid = np.empty(m)
        dmid[1:-1] = (-delayed_full[0:-3] + 9.0 * delayed_full[1:-2]
                      + 9.0 * delayed_full[2:-1] - delayed_full[3:]) / 16.0
        dmid[0] = (5.0 * delayed_full[0] + 15.0 * delayed_full[1]
                   - 5.0 * delayed_full[2] + delayed_full[3]) / 16.0
        dmid[-1] = (delayed_full[-4] - 5.0 * delayed_full[-3]
                    + 15.0 * delayed_full[-2] + 5.0 * delayed_full[-1]) / 16.0
        g_full = -delayed_full / grid
        g_half = -dmid / (grid[:-1] + step / 2.0)
        inc = (step / 6.0) * (g_full[:-1] + 4.0 * g_half + g_full[1:])
        sol = np.empty(m + 1)
        sol[0] = solutions[-1][-1]
        sol[1:] = sol[0] + np.cumsum(inc)
        grids.append(grid)
        solutions.append(sol)
    return np.concatenate([g[:-1] for g in grids] + [grids[-1][-1:]]), \
        np.concatenate([s[:-1] for s in solutions] + [solutions[-1][-1:]])


def delay_residual(u, delta=1e-4):
    """u*rho'(u) + rho(u-1) with rho' by central differences."""
    d = (rho(u + delta) - rho(u - delta)) / (2.0 * delta)
    return u * d + rho(u - 1.0)
