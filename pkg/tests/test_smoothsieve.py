import pytest

from polysmooth.polyarith import build_factored
from polysmooth.smoothsieve import (
    eval_range,
    iroot,
    pplus_oracle,
    pplus_table,
    psi,
    psi_oracle,
    sieve_range,
    smooth_bound,
)

T = build_factored(["t"])
T2P1 = build_factored(["t^2+1"])
T2M2 = build_factored(["t^2-2"])
T_T2P1 = build_factored(["t", "t^2+1"])
MIXED = build_factored(["t+1", "t^2+2"])

ALL_POLYS = [T, T2P1, T2M2, T_T2P1, MIXED]


def test_eval_range_matches_horner():
    for f in ALL_POLYS:
        vals = eval_range(f.product, 7, 500)
        assert vals == [f(n) for n in range(7, 507)]


def test_iroot():
    assert iroot(10**12, 2) == 10**6
    assert iroot(10**12 - 1, 2) == 10**6 - 1
    assert iroot(8, 3) == 2
    assert iroot(7, 3) == 1


def test_smooth_bound_exact_rationals():
    assert smooth_bound(10**6, 2) == 1000
    assert smooth_bound(10**6, 1.5) == 10**4
    assert smooth_bound(10**6, 1) == 10**6
    assert smooth_bound(999, 2) == 31  # 31^2 = 961 <= 999 < 1024


def test_psi_examples():
    assert psi(T, 10, 3).psi == 7  # {1,2,3,4,6,8,9}
    assert psi(T2P1, 10, 5).psi == 4  # {1,2,3,7}
    assert psi(T2P1, 10, 200).psi == 10  # y exceeds max f(n) = 101


def test_psi_oracle_examples():
    assert psi_oracle(T, 100, 5) == 34
    assert psi_oracle(T2P1, 10, 5) == 4
    assert psi_oracle(T2P1, 0, 5) == 0


@pytest.mark.parametrize("f", ALL_POLYS)
def test_psi_matches_oracle_small(f):
    x = 300
    for y in [1, 2, 3, 5, 10, 50, x, x * x]:
        assert psi(f, x, y).psi == psi_oracle(f, x, y), (f, y)


def test_pplus_examples():
    tab = pplus_table(T2P1, 10, 25)
    assert tab.pplus_of(7) == 5  # 50 = 2 * 5^2
    assert tab.pplus_of(9) == 41  # 82 = 2 * 41
    tab = pplus_table(T2M2, 1, 10)
    assert tab.pplus_of(1) == 1  # f(1) = -1


def test_pplus_bound_guarantee_checked():
    with pytest.raises(ValueError):
        pplus_table(T2P1, 10, 10)  # 10^2 = 100 <= 101


@pytest.mark.parametrize("f", ALL_POLYS)
def test_pplus_matches_oracle(f):
    from math import isqrt

    from polysmooth.smoothsieve import coeff_bound

    x = 200
    tab = pplus_table(f, x, isqrt(coeff_bound(f, x)) + 1)
    for n in range(1, x + 1):
        assert tab.pplus_of(n) == pplus_oracle(f(n)), (f, n)


def test_zero_value_never_smooth():
    f = build_factored(["t-5", "t^2+1"])
    tab = psi(f, 10, 10**9)
    assert not tab.flag(5)  # f(5) = 0, P+(0) = +inf
    assert tab.flag(4)


def test_unit_values_always_smooth():
    tab = psi(T2M2, 2, 1)  # f(1) = -1: P+(-1) = 1 <= 1
    assert tab.flag(1)
    assert not tab.flag(2)  # f(2) = 2 not 1-smooth


def test_segment_independence():
    for seg in [8, 64, 1 << 20]:
        tab = psi(T2P1, 500, 20, segment_size=seg)
        assert tab.psi == psi(T2P1, 500, 20).psi
        assert tab.flags == psi(T2P1, 500, 20).flags


def test_thread_independence():
    base = pplus_table(T_T2P1, 400, 10**4, segment_size=64)
    for threads in [2, 4]:
        tab = pplus_table(T_T2P1, 400, 10**4, segment_size=64, threads=threads)
        assert tab.flags == base.flags
        assert tab.pplus == base.pplus


def test_monotone_in_x_and_y():
    vals = [psi(T2P1, x, 10).psi for x in [50, 100, 200, 400]]
    assert vals == sorted(vals)
    vals = [psi(T2P1, 200, y).psi for y in [2, 5, 10, 100, 10**5]]
    assert vals == sorted(vals)


def test_sieve_range_window():
    tab = sieve_range(T2P1, 101, 200, 13)
    count = sum(1 for n in range(101, 201) if psi_oracle(T2P1, n, 13) - psi_oracle(T2P1, n - 1, 13) == 1)
    assert tab.psi == count
