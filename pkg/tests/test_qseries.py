from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hooklab.arith import ONE, T, Poly, gen_binom
from hooklab.partitions import count
from hooklab.qseries import (
    DegreeCapExceeded, EtaFactor, NonConvergent, NonUnitConstant, OrderMismatch, QSeries, eta_pow,
    eta_product, one_plus_pow, pentagonal_series, pochhammer, series_add, series_inv, series_mul,
    series_neg, theta_triangular,
)

Z = Poly.var()


def ints(s: QSeries) -> list[int]:
    return s.integers()


Q = sympy.Symbol("q")


def sympy_truncated_product(numer_powers, denom_powers, N):
    """prod (1 - q^m) over numer_powers / prod (1 - q^m) over denom_powers, via sympy polys."""
    acc = sympy.Poly(1, Q)
    for m in numer_powers:
        acc = acc * sympy.Poly(1 - Q**m, Q)
    for m in denom_powers:
        acc = acc * sympy.Poly(sum(Q**(m * k) for k in range(N // m + 1)), Q)
        acc = sympy.Poly(sum(acc.coeff_monomial(Q**n) * Q**n for n in range(N + 1)), Q)
    return [int(acc.coeff_monomial(Q**n)) for n in range(N + 1)]


def test_basic_examples():
    one_plus_q = QSeries([1, 1], 4)
    one_minus_q = QSeries([1, -1], 4)
    assert ints(series_mul(one_plus_q, one_minus_q)) == [1, 0, -1, 0, 0]
    x = QSeries([3, T, 5], 4)
    assert series_add(x, series_neg(x)) == QSeries.zero(4)
    N = 10
    geo = QSeries([1] * (N + 1), N)
    assert ints(geo * geo) == [n + 1 for n in range(N + 1)]


def test_inverse_examples():
    assert ints(series_inv(QSeries([1, -1], 5))) == [1] * 6
    assert series_inv(QSeries.one(5)) == QSeries.one(5)
    assert ints(series_inv(QSeries([1, 0, -1, -1], 4))) == [1, 0, 1, 1, 1]
    half = series_inv(QSeries([2], 3))
    assert half[0] == Fraction(1, 2)
    with pytest.raises(NonUnitConstant):
        series_inv(QSeries([0, 1], 3))
    with pytest.raises(NonUnitConstant):
        series_inv(QSeries([T], 3))


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        QSeries.one(3) + QSeries.one(4)


def test_eta_pow_examples():
    e = gen_binom(T + 1, 2)
    s = eta_pow(2, e, 4)
    assert s[0] == 1 and s[1] == 0 and s[2] == -e and s[3] == 0 and s[4] == gen_binom(e, 2)
    # interpolation oracle: integer t by repeated multiplication
    for t in range(4):
        k = (t + 1) * t // 2
        direct = QSeries.one(4)
        for _ in range(k):
            direct = direct * QSeries([1, 0, -1], 4)
        assert s.at(t) == direct
    assert ints(eta_pow(1, -1, 3)) == [1, 1, 1, 1]
    assert eta_pow(5, T * T + 7, 4) == QSeries.one(4)
    with pytest.raises(ValueError):
        eta_pow(0, 1, 4)


def test_eta_product_examples():
    assert ints(eta_product([EtaFactor(4, -2, Poly.const(-1))], 10)) == [1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3]
    assert eta_product([], 6) == QSeries.one(6)
    assert ints(eta_product([EtaFactor(1, 0, ONE)], 7)) == [1, -1, -1, 0, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        EtaFactor(2, -2, ONE)


def test_eta_product_against_sympy():
    N = 24
    got = ints(eta_product([EtaFactor(1, 0, ONE), EtaFactor(4, -2, Poly.const(-1))], N))
    ref = sympy_truncated_product(range(1, N + 1), [4 * j - 2 for j in range(1, N // 4 + 2)], N)
    assert got == ref
    got = ints(eta_product([EtaFactor(8, -6, Poly.const(3)), EtaFactor(2, 0, Poly.const(-2))], N))
    ref = sympy_truncated_product([8 * j - 6 for j in range(1, 5)] * 3, [2 * j for j in range(1, 13)] * 2, N)
    assert got == ref


def test_pochhammer_examples():
    assert ints(pochhammer(-1, 1, 1, None, 5)) == [1, 1, 1, 2, 2, 3]
    assert pochhammer(1, 1, 1, 0, 5) == QSeries.one(5)
    s = pochhammer(Z, 1, 1, 2, 5)
    assert s[0] == 1 and s[1] == -Z and s[2] == -Z and s[3] == Z * Z and s[4] == 0
    with pytest.raises(NonConvergent):
        pochhammer(2, 0, 1, None, 5)


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        QSeries([Z * Z], 3, cap=1)
    with pytest.raises(DegreeCapExceeded):
        QSeries([1, Z], 3, cap=1) * QSeries([1, Z], 3, cap=1)


def test_euler_and_gauss_products():
    assert pochhammer(-1, 2, 2, None, 40) == eta_product([EtaFactor(4, -2, Poly.const(-1))], 40)
    gauss = eta_product([EtaFactor(1, 0, ONE), EtaFactor(4, -2, Poly.const(-1))], 60)
    assert gauss == theta_triangular(60)


def test_distinct_counts_and_pentagonal():
    dist = ints(pochhammer(-1, 1, 1, None, 30))
    assert dist == [count(n, "distinct") for n in range(31)]
    pent = ints(pentagonal_series(40))
    assert [k for k, v in enumerate(pent) if v] == sorted(
        {m * (3 * m - 1) // 2 for m in range(-6, 7) if m * (3 * m - 1) // 2 <= 40})


def test_json_shape():
    assert QSeries([1, T], 1).to_json() == [{"q": 0, "coeff": {"0": "1"}}, {"q": 1, "coeff": {"1": "1"}}]


coeff_polys = st.lists(st.integers(-3, 3), max_size=3).map(Poly)
series20 = st.lists(coeff_polys, max_size=21).map(lambda cs: QSeries(cs, 20))


@given(series20, series20, series20)
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(st.integers(1, 6), st.integers(0, 5))
def test_integer_powers_match_repeated_products(m, k):
    direct = QSeries.one(20)
    for _ in range(k):
        direct = direct * eta_pow(m, 1, 20)
    assert eta_pow(m, k, 20) == direct


@given(st.integers(1, 5), st.lists(st.fractions(max_denominator=5).filter(lambda x: abs(x) < 10), max_size=3))
def test_eta_pow_inverse_pairs(m, cs):
    e = Poly(cs)
    assert eta_pow(m, e, 20) * eta_pow(m, -e, 20) == QSeries.one(20)


@given(st.integers(1, 4), st.integers(-3, 3))
def test_one_plus_pow_matches_power(m, k):
    base = QSeries.one(15) + QSeries.monomial(m, 15)
    assert one_plus_pow(m, k, 15) == base.power(k)
