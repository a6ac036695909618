from fractions import Fraction
from math import prod

import pytest

from hooklab import identities as ident
from hooklab.arith import T, Poly
from hooklab.cells import cell_stats
from hooklab.dsl import parse
from hooklab.kernels import NAMED_KERNELS, Kernel, partition_product, partition_sum, partition_sums
from hooklab.partitions import count, enumerate_partitions, partitions_raw
from hooklab.qseries import EtaFactor, QSeries, eta_product


def test_partition_sum_examples():
    for k in NAMED_KERNELS.values():
        assert partition_sum(0, k) == 1
    assert partition_sum(1, "(t+csp)/h") == T
    assert partition_sum(2, "csp/h") == -1
    assert partition_sum(3, "(csp^2-1)/h^2") == -1


def test_fast_sums_match_reference():
    kernels = list(NAMED_KERNELS.values()) + [Kernel("csp^2", "h^2", 2), Kernel("c^2", "h^2"), Kernel("h", "h")]
    for n in range(1, 9):
        fast = partition_sums(n, kernels)
        for k, got in zip(kernels, fast):
            ref = Poly.const(0)
            for lam in partitions_raw(n):
                ref = ref + partition_product(tuple(lam), k)
            assert got == ref, (n, k.text)


def test_kernel_text_round_trip():
    for text, k in NAMED_KERNELS.items():
        assert Kernel.parse(text) == k
        assert k.text == text
    assert Kernel.parse("(2+csp^2)/h^2") == Kernel("csp^2", "h^2", 2)
    assert Kernel("csp^2", "h^2", -1).specialize(3) == Kernel("csp^2", "h^2", -1)
    assert Kernel("csp^2", "h^2", "t").specialize(2) == Kernel("csp^2", "h^2", 2)


def test_lhs_series_examples():
    assert ident.lhs_series("csp/h", 4).integers() == [1, 0, -1, 0, 1]
    assert ident.lhs_series("(t+h^2)/h^2", 1) == QSeries([1, T + 1], 1)
    assert ident.lhs_series("(t+c^2)/h^2", 1) == QSeries([1, T], 1)


def test_rhs_series_examples():
    assert ident.rhs_series("thm_6_2c", 4).integers() == [1, 0, -1, 0, 1]
    assert ident.rhs_series("thm_2_14", 6).integers() == [1, -1, 0, -1, 0, 0, 1]
    assert ident.rhs_series("conj_6_3a", 3)[1] == T
    with pytest.raises(ident.UnknownIdentity):
        ident.rhs_series("nosuch", 3)


def test_verify_errors():
    with pytest.raises(ident.UnknownIdentity):
        ident.verify("nosuch", 5)
    with pytest.raises(ident.OrderTooSmall):
        ident.verify("thm_6_2c", 0)


@pytest.mark.parametrize("name", list(ident.BUILTINS))
def test_every_builtin_passes_at_small_order(name):
    report = ident.verify(name, 14)
    assert report.passed, report.text()
    assert report.to_json(timing=False)["first_failure"] is None


def test_perturbed_identity_fails_at_q2():
    report = ident.verify(parse("psum{csp/h} == prodj((1-q^(4*j-2)))^(-1)"), 10)
    assert not report.passed
    f = report.first_failure
    assert f.q_order == 2
    assert f.lhs == -1 and f.rhs == 1 and f.delta == -2
    doc = report.to_json()
    assert doc["first_failure"] == {"q_order": 2, "lhs": {"0": "-1"}, "rhs": {"0": "1"}, "delta": {"0": "-2"}}


def test_zero_filter_sign_pattern():
    series = ident.lhs_series("csp/h", 30).integers()
    for n, v in enumerate(series):
        expected = (-1) ** (n // 2) * count(n, "syp0") if n % 2 == 0 else 0
        assert v == expected


def test_zero_filter_per_partition():
    k = Kernel("csp", "h")
    for n in range(1, 13):
        for lam in enumerate_partitions(n):
            if lam not in set(enumerate_partitions(n, "syp0")):
                assert partition_product(lam, k) == 0


def test_symplectic_and_orthogonal_sums_agree():
    for a, b in [("csp/h", "co/h"), ("csp^2/h^2", "co^2/h^2"), ("(t+csp^2)/h^2", "(t+co^2)/h^2")]:
        assert ident.lhs_series(a, 20) == ident.lhs_series(b, 20)


def test_symbolic_degree_bound():
    for text in ("(t+csp)/h", "(t+co)/h", "(t+csp^2)/h^2", "(t+co^2)/h^2", "(t+c^2)/h^2", "(t+h^2)/h^2"):
        s = ident.lhs_series(text, 14)
        for n in range(15):
            assert s[n].degree == n
            assert s[n].coeffs[-1] > 0


def test_leading_coefficient_is_inverse_hook_product_sum():
    s = ident.lhs_series("(t+csp)/h", 10)
    for n in range(11):
        ref = sum(Fraction(1, prod(c.hook for c in cell_stats(lam))) for lam in enumerate_partitions(n))
        assert s[n].coeffs[-1] == ref


def test_symbolic_t0_matches_parts_two_mod_four():
    N = 40
    at_zero = ident.lhs_series("(t+csp^2)/h^2", N).at(0).integers()
    assert at_zero == eta_product([EtaFactor(4, -2, Poly.const(-1))], N).integers()


def test_parallel_jobs_are_deterministic():
    k = Kernel("co^2", "h^2", 5)
    serial = ident.lhs_series(k, 16)
    ident._CACHE.pop(k)
    parallel = ident.lhs_series(k, 16, jobs=3)
    assert serial == parallel


def test_syp0_scan_counts():
    assert [ident.count_syp0_scan(n) for n in range(11)] == [count(n, "distinct-even") for n in range(11)]
