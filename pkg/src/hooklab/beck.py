"""Beck-type part counts and the rank-parity machinery for distinct partitions.

Bivariate generating functions are :class:`QSeries` whose coefficients are
polynomials in ``z``.  ``D`` (derivative in ``z`` at ``z = 1``) is applied
formally to the truncated series.
"""
from __future__ import annotations

import time

from .arith import ONE, Poly
from .partitions import (
    Family,
    distinct_raw,
    enumerate_partitions,
    m2_rank,
    partitions_raw,
    rank,
)
from .qseries import QSeries, pochhammer
from .report import CheckResult, VerificationReport, first_difference

Z = Poly.var()


# --- enumerative statistics -------------------------------------------------

def total_parts(n: int, family: Family | str) -> int:
    return sum(len(lam) for lam in enumerate_partitions(n, family))


def even_one_repeat(n: int):
    """Partitions of ``n`` into even parts with exactly one part value repeated."""
    if n % 2:
        return
    for half in partitions_raw(n // 2):
        repeated = {a for a, b in zip(half, half[1:]) if a == b}
        if len(repeated) == 1:
            yield [2 * p for p in half], 2 * repeated.pop()


def count_even_one_repeat(n: int, weighted: bool = False) -> int:
    """Unweighted count, or weight 2 when the repeated part is not the smallest."""
    total = 0
    for lam, rep in even_one_repeat(n):
        total += 2 if (weighted and rep != lam[-1]) else 1
    return total


def _m2_parity(lam) -> int:
    # the empty partition counts as even
    return m2_rank(lam) % 2 if lam else 0


def count_distinct_even_m2(n: int, parity: str) -> int:
    want = {"even": 0, "odd": 1}[parity]
    return sum(1 for lam in distinct_raw(n, step=2) if _m2_parity(lam) == want)


def verify_beck_1(n: int) -> bool:
    lhs = total_parts(n, "syp0") - total_parts(n, "distinct-even")
    rhs = 2 * count_even_one_repeat(n) + count_distinct_even_m2(n, "even")
    return lhs == rhs


def verify_beck_2(n: int) -> bool:
    lhs = total_parts(n, "syp0") - 2 * total_parts(n, "distinct-even")
    return lhs == count_even_one_repeat(n, weighted=True)


def beck_rows(which: int, n_max: int) -> list[dict]:
    """Per-n table of both sides of the first or second Beck-type identity."""
    rows = []
    for n in range(1, n_max + 1):
        s_syp0 = total_parts(n, "syp0")
        s_e = total_parts(n, "distinct-even")
        if which == 1:
            rep = count_even_one_repeat(n)
            m2 = count_distinct_even_m2(n, "even")
            rows.append({"n": n, "s_syp0": s_syp0, "s_e": s_e, "excess": s_syp0 - s_e,
                         "one_repeat": rep, "even_m2": m2, "rhs": 2 * rep + m2,
                         "ok": s_syp0 - s_e == 2 * rep + m2})
        elif which == 2:
            rep = count_even_one_repeat(n, weighted=True)
            rows.append({"n": n, "s_syp0": s_syp0, "s_e": s_e, "excess": s_syp0 - 2 * s_e,
                         "weighted_one_repeat": rep, "rhs": rep,
                         "ok": s_syp0 - 2 * s_e == rep})
        else:
            raise ValueError("which must be 1 or 2")
    return rows


# --- bivariate generating functions ----------------------------------------

def _zmono(k: int) -> Poly:
    return Poly.monomial(k)


def bivariate_gf(which: str, order: int) -> QSeries:
    """``F`` (syP_0 by length), ``E`` (distinct even parts by length) or
    ``G`` (distinct partitions by rank), truncated at ``q^order``.

    The ``z``-degree is capped at ``order``.
    """
    cap = order
    out = QSeries.zero(order, cap)
    if which == "F":
        m = 1
        while m * m + m <= order:
            term = QSeries.monomial(m * m + m, order, _zmono(m + 1), cap)
            out = out + term * pochhammer(Z, 2, 2, m, order, cap).inverse()
            m += 1
    elif which == "E":
        m = 0
        while m * m + m <= order:
            term = QSeries.monomial(m * m + m, order, _zmono(m), cap)
            out = out + term * pochhammer(ONE, 2, 2, m, order, cap).inverse()
            m += 1
    elif which == "G":
        n = 0
        while n * (n + 1) // 2 <= order:
            term = QSeries.monomial(n * (n + 1) // 2, order, ONE, cap)
            out = out + term * pochhammer(Z, 1, 1, n, order, cap).inverse()
            n += 1
    else:
        raise ValueError(f"unknown generating function {which!r}")
    return out


def D(series: QSeries) -> list[int]:
    """Derivative in ``z`` at ``z = 1``, as integer coefficients."""
    return series.d_at_one().integers()


def length_distribution(n: int, family: str) -> Poly:
    """``sum z^len(lam)`` over the family."""
    counts: dict[int, int] = {}
    for lam in enumerate_partitions(n, family):
        counts[len(lam)] = counts.get(len(lam), 0) + 1
    return Poly([counts.get(k, 0) for k in range(max(counts, default=-1) + 1)])


def rank_distribution(n: int) -> Poly:
    """``sum z^rank(lam)`` over distinct partitions of ``n``."""
    counts: dict[int, int] = {}
    for lam in distinct_raw(n):
        r = rank(lam)
        counts[r] = counts.get(r, 0) + 1
    return Poly([counts.get(k, 0) for k in range(max(counts, default=-1) + 1)])


# --- sigma(q) and rank parity ----------------------------------------------

def sigma_series(order: int) -> QSeries:
    """``sum_n q^(n(n+1)/2) / (-q; q)_n``."""
    out = QSeries.zero(order)
    n = 0
    while n * (n + 1) // 2 <= order:
        out = out + QSeries.monomial(n * (n + 1) // 2, order) * pochhammer(-1, 1, 1, n, order).inverse()
        n += 1
    return out


def stilde_series(order: int) -> QSeries:
    """``sum_{n>=1} q^(n(n-1)) / (-q^2; q^2)_(n-1)``, i.e. sigma(q^2)."""
    out = QSeries.zero(order)
    n = 1
    while n * (n - 1) <= order:
        out = out + QSeries.monomial(n * (n - 1), order) * pochhammer(-1, 2, 2, n - 1, order).inverse()
        n += 1
    return out


def sigma_coeffs(order: int) -> list[int]:
    return sigma_series(order).integers()


def stilde_coeffs(order: int) -> list[int]:
    return stilde_series(order).integers()


def sigma_by_enumeration(order: int) -> list[int]:
    """Even-rank minus odd-rank distinct partitions of each n."""
    return [sum(1 if rank(lam) % 2 == 0 else -1 for lam in distinct_raw(n)) for n in range(order + 1)]


def stilde_by_enumeration(order: int) -> list[int]:
    """Same with distinct even parts and the M2-rank."""
    return [sum(1 if _m2_parity(lam) == 0 else -1 for lam in distinct_raw(n, step=2))
            for n in range(order + 1)]


def odd_rank_exceptions(limit: int) -> set[int]:
    """``k(3k - (-1)^k)/2`` for k >= 1, up to ``limit``."""
    out, k = set(), 1
    while True:
        v = k * (3 * k - (-1) ** k) // 2
        if v > limit:
            # values increase with k
            return out
        out.add(v)
        k += 1


def even_rank_exceptions(limit: int) -> set[int]:
    """``k(3k + (-1)^k)/2`` for k >= 1, up to ``limit``."""
    out, k = set(), 1
    while True:
        v = k * (3 * k + (-1) ** k) // 2
        if v > limit:
            return out
        out.add(v)
        k += 1


def parity_rows(order: int) -> list[dict]:
    odd_set = odd_rank_exceptions(order)
    even_set = even_rank_exceptions(order)
    rows = []
    for n in range(1, order + 1):
        odd = even = 0
        for lam in distinct_raw(n):
            if rank(lam) % 2:
                odd += 1
            else:
                even += 1
        rows.append({
            "n": n, "odd_rank": odd, "even_rank": even,
            "odd_predicted_odd": n in odd_set, "even_predicted_odd": n in even_set,
            "ok": (odd % 2 == 1) == (n in odd_set) and (even % 2 == 1) == (n in even_set),
        })
    return rows


def parity_check(order: int) -> CheckResult:
    if order < 1:
        raise ValueError("order must be at least 1")
    rows = parity_rows(order)
    bad = [r["n"] for r in rows if not r["ok"]]
    return CheckResult("rank_parity", not bad, {"order": order, "violations": bad})


def check_sigma_mod2(order: int) -> CheckResult:
    """sigma(q) = (-q;q)_inf = sum_{m in Z} q^(m(3m-1)/2) mod 2."""
    from .qseries import pentagonal_series
    sig = sigma_coeffs(order)
    dist = pochhammer(-1, 1, 1, None, order).integers()
    pent = pentagonal_series(order).integers()
    bad = [n for n in range(order + 1) if not (sig[n] % 2 == dist[n] % 2 == pent[n] % 2)]
    return CheckResult("sigma_mod_2", not bad, {"order": order, "mismatches": bad})


# --- series identities -----------------------------------------------------

def lemma_4_1_rhs(order: int) -> QSeries:
    cap = order
    out = QSeries.zero(order, cap)
    n = 0
    while n * (3 * n + 1) // 2 <= order:
        term = QSeries.monomial(n * (3 * n + 1) // 2, order, ONE, cap)
        term = term * (QSeries.one(order, cap) + QSeries.monomial(2 * n + 1, order, ONE, cap))
        for j in range(1, n + 1):
            num = QSeries([Z], order, cap) + QSeries.monomial(j, order, ONE, cap)
            den = QSeries.one(order, cap) - QSeries.monomial(j, order, Z, cap)
            term = term * num * den.inverse()
        out = out + term
        n += 1
    return out


def verify_lemma_4_1(order: int) -> VerificationReport:
    if order < 1:
        raise ValueError("order must be at least 1")
    start = time.perf_counter()
    lhs = bivariate_gf("G", order)
    rhs = lemma_4_1_rhs(order)
    fail = first_difference(order, lhs.coeffs, rhs.coeffs)
    return VerificationReport("lemma_4_1", order, fail, int((time.perf_counter() - start) * 1000))


def _geometric_sum(order: int, step: int, m_max: int, numer_extra: bool) -> QSeries:
    """``sum_{m=1}^{m_max} q^(step m) / (1 - q^(step m))``, or with numerator
    ``1 + q^(step m)`` when ``numer_extra``."""
    out = QSeries.zero(order)
    for m in range(1, m_max + 1):
        e = step * m
        if e > order:
            break
        den = QSeries.one(order) - QSeries.monomial(e, order)
        num = QSeries.one(order) + QSeries.monomial(e, order) if numer_extra else QSeries.monomial(e, order)
        out = out + num * den.inverse()
    return out


def cor_4_3_lhs(order: int) -> QSeries:
    out = QSeries.zero(order)
    n = 1
    while n * (n + 1) // 2 <= order:
        term = QSeries.monomial(n * (n + 1) // 2, order) * pochhammer(ONE, 1, 1, n, order).inverse()
        out = out + term * _geometric_sum(order, 1, n, False)
        n += 1
    return out


def cor_4_3_rhs(order: int) -> QSeries:
    out = QSeries.zero(order)
    n = 1
    while n * (3 * n + 1) // 2 <= order:
        term = QSeries.monomial(n * (3 * n + 1) // 2, order)
        term = term * (QSeries.one(order) + QSeries.monomial(2 * n + 1, order))
        term = term * pochhammer(-1, 1, 1, n, order) * pochhammer(ONE, 1, 1, n, order).inverse()
        # the j = 1..n sum of (1 + q^(2j)) / (1 - q^(2j)) includes the constant n
        out = out + term * _geometric_sum(order, 2, n, True)
        n += 1
    return out


def verify_cor_4_3(order: int) -> VerificationReport:
    """Both closed forms for D G(z, q), also checked against D of the
    truncated ``G`` and against the summed ranks of distinct partitions."""
    if order < 1:
        raise ValueError("order must be at least 1")
    start = time.perf_counter()
    lhs = cor_4_3_lhs(order).coeffs
    sides = [
        cor_4_3_rhs(order).coeffs,
        D(bivariate_gf("G", order)),
        [sum(rank(lam) for lam in distinct_raw(n)) for n in range(order + 1)],
    ]
    fail = None
    for rhs in sides:
        fail = first_difference(order, lhs, rhs)
        if fail is not None:
            break
    return VerificationReport("cor_4_3", order, fail, int((time.perf_counter() - start) * 1000))


def eq_3_2_series(order: int) -> QSeries:
    """``(sigma(q^2) + (-q^2; q^2)_inf) / 2``."""
    return (stilde_series(order) + pochhammer(-1, 2, 2, None, order)) / 2


def verify_eq_3_2(order: int) -> CheckResult:
    """Coefficient-wise comparison with the direct even-M2-rank count.

    Any mismatch at n = 0 is reported separately under ``n0_mismatch``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    series = eq_3_2_series(order).constants()
    direct = [count_distinct_even_m2(n, "even") for n in range(order + 1)]
    bad = [n for n in range(1, order + 1) if series[n] != direct[n]]
    n0 = series[0] != direct[0]
    return CheckResult("eq_3_2", not bad and not n0, {
        "order": order, "mismatches": bad, "n0_mismatch": n0,
        "n0_series": str(series[0]), "n0_direct": direct[0],
    })


def check_bivariate_counts(order: int) -> CheckResult:
    """z^k q^n coefficients of F, E, G against enumeration, and D F, D E
    against the total number of parts.

    F has no q^0 term: the empty partition is in syP_0 but not generated.
    """
    F = bivariate_gf("F", order)
    E = bivariate_gf("E", order)
    G = bivariate_gf("G", order)
    # F's sum starts at m = 1, so the empty partition is absent from it
    bad = [] if F[0].is_zero() else [("F", 0)]
    for n in range(order + 1):
        if n and F[n] != length_distribution(n, "syp0"):
            bad.append(("F", n))
        if E[n] != length_distribution(n, "distinct-even"):
            bad.append(("E", n))
        if G[n] != rank_distribution(n):
            bad.append(("G", n))
    dF, dE = D(F), D(E)
    for n in range(order + 1):
        if dF[n] != total_parts(n, "syp0"):
            bad.append(("DF", n))
        if dE[n] != total_parts(n, "distinct-even"):
            bad.append(("DE", n))
    return CheckResult("bivariate_counts", not bad, {"order": order, "mismatches": [list(b) for b in bad]})


def check_specializations(order: int) -> CheckResult:
    """G(1, q) counts distinct partitions; G(-1, q) is sigma(q)."""
    G = bivariate_gf("G", order)
    rhs = lemma_4_1_rhs(order)
    q_n = [sum(1 for _ in distinct_raw(n)) for n in range(order + 1)]
    s_n = sigma_by_enumeration(order)
    bad = []
    for name, series in (("G", G), ("lemma_rhs", rhs)):
        if series.at(1).integers() != q_n:
            bad.append(f"{name}(z=1)")
        if series.at(-1).integers() != s_n:
            bad.append(f"{name}(z=-1)")
    if sigma_coeffs(order) != s_n:
        bad.append("sigma")
    return CheckResult("z_specializations", not bad, {"order": order, "mismatches": bad})
