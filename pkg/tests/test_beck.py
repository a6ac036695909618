import pytest

from hooklab import beck
from hooklab.partitions import count, distinct_raw, enumerate_partitions, rank

Z = beck.Z


def even_partitions(n):
    return [list(lam) for lam in enumerate_partitions(n) if all(p % 2 == 0 for p in lam)]


def test_total_parts_examples():
    assert beck.total_parts(4, "syp0") == 3
    assert beck.total_parts(4, "distinct-even") == 1
    for fam in ("all", "syp0", "distinct-even"):
        assert beck.total_parts(0, fam) == 0


def test_even_one_repeat_examples():
    assert beck.count_even_one_repeat(4) == 1
    assert beck.count_even_one_repeat(6) == 1
    # (4,4), (4,2,2), (2,2,2,2): the repeated value is always the smallest part
    assert sorted(lam for lam, _ in beck.even_one_repeat(8)) == [[2, 2, 2, 2], [4, 2, 2], [4, 4]]
    assert beck.count_even_one_repeat(8, weighted=True) == 3
    # (4,4,2) has its repeated value above the smallest part, so weight 2
    assert beck.count_even_one_repeat(10, weighted=True) == 2 * 1 + 3


def test_even_one_repeat_by_filtering():
    for n in range(0, 21):
        ref = 0
        for lam in even_partitions(n):
            vals = set(lam)
            reps = [v for v in vals if lam.count(v) > 1]
            if len(reps) == 1:
                ref += 2 if reps[0] != min(lam) else 1
        assert beck.count_even_one_repeat(n, weighted=True) == ref


def test_m2_examples():
    assert beck.count_distinct_even_m2(6, "even") == 2
    assert beck.count_distinct_even_m2(4, "even") == 0
    assert beck.count_distinct_even_m2(2, "odd") == 0


def test_beck_examples():
    assert beck.verify_beck_1(4)
    assert beck.verify_beck_1(6)
    assert beck.verify_beck_2(6)
    assert beck.total_parts(6, "syp0") == 7
    assert beck.total_parts(8, "syp0") == 9 and beck.total_parts(8, "distinct-even") == 3


def test_beck_rows_shape():
    rows = beck.beck_rows(1, 10)
    assert [r["n"] for r in rows] == list(range(1, 11))
    assert all(r["ok"] for r in rows)


def test_bivariate_examples():
    F = beck.bivariate_gf("F", 8)
    E = beck.bivariate_gf("E", 8)
    G = beck.bivariate_gf("G", 8)
    assert F[4].coeffs[3] == 1
    assert E[2].coeffs[1] == 1
    assert G[2].coeffs[1] == 1
    assert F[0] == 0 and E[0] == 1 and G[0] == 1
    with pytest.raises(ValueError):
        beck.bivariate_gf("H", 4)


def test_bivariate_counts_to_30():
    assert beck.check_bivariate_counts(30).passed


def test_d_operator():
    from hooklab.qseries import QSeries
    for k in range(6):
        assert beck.D(QSeries([Z ** k], 0)) == [k]


def test_sigma_examples():
    S = beck.sigma_coeffs(10)
    assert S[0] == 1
    assert S[2] == -1
    assert beck.stilde_coeffs(6)[4] == -1
    assert S == beck.sigma_by_enumeration(10)
    assert beck.stilde_coeffs(30) == beck.stilde_by_enumeration(30)


def test_sigma_parity_matches_distinct_counts():
    S = beck.sigma_coeffs(40)
    for n in range(41):
        assert S[n] % 2 == count(n, "distinct") % 2
    assert beck.check_sigma_mod2(40).passed


def test_parity_examples():
    rows = {r["n"]: r for r in beck.parity_rows(6)}
    assert rows[5]["odd_rank"] == 1 and rows[5]["odd_predicted_odd"]
    assert rows[2]["odd_rank"] == 1 and 2 in beck.odd_rank_exceptions(10)
    assert rows[1]["even_rank"] == 1 and 1 in beck.even_rank_exceptions(10)
    assert beck.odd_rank_exceptions(30) == {2, 5, 15, 22}
    assert beck.even_rank_exceptions(30) == {1, 7, 12, 26}
    with pytest.raises(ValueError):
        beck.parity_check(0)


def test_lemma_and_corollary_examples():
    assert beck.verify_lemma_4_1(10).passed
    G = beck.bivariate_gf("G", 6)
    assert G.at(1).integers()[3] == 2
    assert G.at(-1).integers() == beck.sigma_coeffs(6)
    assert beck.verify_cor_4_3(12).passed
    assert beck.cor_4_3_lhs(5)[1] == 0 and beck.cor_4_3_rhs(5)[1] == 0


def test_cor_4_3_against_rank_sums():
    lhs = beck.cor_4_3_lhs(16).integers()
    assert lhs == [sum(rank(lam) for lam in distinct_raw(n)) for n in range(17)]


def test_eq_3_2_examples():
    series = beck.eq_3_2_series(8).constants()
    assert series[6] == 2
    assert series[0] == 1
    assert series[4] == 0
    res = beck.verify_eq_3_2(20)
    assert res.passed and res.detail["n0_mismatch"] is False
