"""Partition-sum series, product sides and coefficient-wise verification of named identities."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence, Union

from .arith import Poly, T
from .kernels import Kernel, _CellData, partition_sums
from .partitions import conjugate_parts, count, partitions_raw
from .qseries import EtaFactor, QSeries, eta_product, eta_pow, pochhammer, theta_triangular
from .report import Failure, VerificationReport, first_difference
from . import dsl


class UnknownIdentity(LookupError):
    pass


class OrderTooSmall(ValueError):
    pass


# ------------------------------------------------------------ partition sums

_CACHE: dict[Kernel, dict[int, Poly]] = {}


def _sums_at(args: tuple[int, tuple[Kernel, ...]]) -> list[Poly]:
    n, kernels = args
    return partition_sums(n, kernels)


def default_jobs() -> int:
    return os.cpu_count() or 1


def precompute(kernels: Sequence[Kernel], N: int, jobs: int = 1) -> None:
    """Fill the cache for every kernel and ``n <= N`` with one enumeration per ``n``."""
    todo = [n for n in range(N + 1) if any(n not in _CACHE.get(k, {}) for k in kernels)]
    if not todo:
        return
    ks = tuple(kernels)
    work = [(n, ks) for n in sorted(todo, reverse=True)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sums_at, work))
    else:
        results = [_sums_at(w) for w in work]
    for (n, _), vals in zip(work, results):
        for k, v in zip(ks, vals):
            _CACHE.setdefault(k, {})[n] = v


def clear_cache() -> None:
    _CACHE.clear()


def lhs_series(kernel: Kernel | str, N: int, jobs: int = 1) -> QSeries:
    """``sum_n q^n sum_{lam |- n} prod_u kernel(u)`` truncated at ``q^N``."""
    if isinstance(kernel, str):
        kernel = Kernel.parse(kernel)
    precompute([kernel], N, jobs)
    table = _CACHE[kernel]
    return QSeries([table[n] for n in range(N + 1)], N)


def count_syp0_scan(n: int) -> int:
    """Partitions of ``n`` with no cell of symplectic content 0, by checking every cell."""
    if n == 0:
        return 1
    total = 0
    for lam in partitions_raw(n):
        cells = _CellData(lam, conjugate_parts(lam))
        if 0 in cells.outer("csp") or 0 in cells.csp:
            continue
        total += 1
    return total


# ------------------------------------------------------------ builtins

Coeffs = Sequence  # indexable by q-order, Poly or rational entries
Pairs = list[tuple[Coeffs, Coeffs, int]]  # (lhs, rhs, first index checked)


def _prod(*factors: tuple[int, int, Union[Poly, int]], N: int) -> QSeries:
    """``prod_j prod (1 - q^(a j + b))^e`` for ``(a, b, e)`` triples."""
    return eta_product([EtaFactor(a, b, e if isinstance(e, Poly) else Poly.const(e))
                        for a, b, e in factors], N)


def _binom_t(shift: int) -> Poly:
    """``binom(t + shift, 2)``."""
    x = T + shift
    return x * (x - 1) / 2


def _rhs_no(N):
    return _prod((1, 0, -T - 1), N=N)


def _rhs_stanley(N):
    return eta_pow(1, -T, N)


def _rhs_6_2a(N):
    b1, b0 = _binom_t(1), _binom_t(0)
    return _prod((8, 0, b1), (8, -2, 1 - b1), (4, -1, T), (4, -3, -T), (8, -4, b0 - 1), (8, -6, 1 - b0), N=N)


def _rhs_6_2b(N):
    b1, b0 = _binom_t(1), _binom_t(0)
    return _prod((8, 0, b0), (8, -6, 1 - b0), (4, -1, T), (4, -3, -T), (8, -4, b1 - 1), (8, -2, 1 - b1), N=N)


def _rhs_6_3a(N):
    return _prod((4, -2, -1), (1, 0, -T), N=N)


def _rhs_6_3b(N):
    return _prod((4, -2, -1), N=N)


def _rhs_6_2c(N):
    # prod 1/(1 + q^(4j-2)) = prod 1/(-q^2; q^4)_inf
    return pochhammer(-1, 2, 4, None, N).inverse()


def _rhs_2_14(N):
    return _prod((1, 0, 1), (4, -2, -1), N=N)


def _overcubic(N):
    # beta(n): prod (1 + q^(2j)) / (1 - q^j)^2
    return pochhammer(-1, 2, 2, None, N) * _prod((1, 0, -2), N=N)


def _psum(text: str, N: int, jobs: int) -> QSeries:
    return lhs_series(Kernel.parse(text), N, jobs)


def _pairs_simple(lhs_kernels: Sequence[str], rhs: Callable[[int], QSeries]):
    def pairs(N: int, jobs: int) -> Pairs:
        precompute([Kernel.parse(k) for k in lhs_kernels], N, jobs)
        r = rhs(N)
        return [(_psum(k, N, jobs), r, 0) for k in lhs_kernels]
    return pairs


def _pairs_cor_6_3c(N: int, jobs: int) -> Pairs:
    precompute([Kernel("csp^2", "h^2"), Kernel("csp", "h")], N, jobs)
    sq = _psum("csp^2/h^2", N, jobs)
    lin = _psum("csp/h", N, jobs)
    signed = [sq[n] * (-1) ** comb(n, 2) for n in range(N + 1)]
    return [(signed, lin, 1)]


def _pairs_2_14(N: int, jobs: int) -> Pairs:
    lhs = _psum("(csp^2-1)/h^2", N, jobs)
    tri = {k * (k + 1) // 2 for k in range(N + 1)}
    direct = [(-1) ** n if n in tri else 0 for n in range(N + 1)]
    return [(lhs, _rhs_2_14(N), 0), (lhs, theta_triangular(N), 0), (lhs, direct, 0)]


def _pairs_overcubic(N: int, jobs: int) -> Pairs:
    return [(_psum("(2+csp^2)/h^2", N, jobs), _overcubic(N), 0)]


def _pairs_euler_syp0(N: int, jobs: int) -> Pairs:
    syp0 = [count_syp0_scan(n) for n in range(N + 1)]
    distinct_even = [count(n, "distinct-even") for n in range(N + 1)]
    two_mod_four = [count(n, "parts-2-mod-4") for n in range(N + 1)]
    return [
        (syp0, distinct_even, 0),
        (syp0, two_mod_four, 0),
        (syp0, pochhammer(-1, 2, 2, None, N), 0),
        (syp0, _rhs_6_3b(N), 0),
    ]


@dataclass(frozen=True)
class Builtin:
    name: str
    symbolic: bool
    pairs: Callable[[int, int], Pairs]
    rhs: Callable[[int], QSeries]
    texts: tuple[str, ...] = field(default=())  # DSL forms, empty when not expressible

    @property
    def default_order(self) -> int:
        return 30 if self.symbolic else 60


_TEXT_6_2A = ("psum{(t+csp)/h} == prodj((1-q^(8*j)))^(binom(t+1,2)) / prodj((1-q^(8*j-2)))^(binom(t+1,2)-1)"
              " * prodj((1-q^(4*j-1)) / (1-q^(4*j-3)))^(t)"
              " * prodj((1-q^(8*j-4)) / (1-q^(8*j-6)))^(binom(t,2)-1)")
_TEXT_6_2B = ("psum{(t+co)/h} == prodj((1-q^(8*j)))^(binom(t,2)) / prodj((1-q^(8*j-6)))^(binom(t,2)-1)"
              " * prodj((1-q^(4*j-1)) / (1-q^(4*j-3)))^(t)"
              " * prodj((1-q^(8*j-4)) / (1-q^(8*j-2)))^(binom(t+1,2)-1)")
_PROD_6_3A = "prodj((1-q^(4*j-2)))^(-1) * prodj((1-q^(1*j)))^(-t)"

BUILTINS: dict[str, Builtin] = {b.name: b for b in (
    Builtin("nekrasov_okounkov", True, _pairs_simple(["(t+h^2)/h^2"], _rhs_no), _rhs_no,
            ("psum{(t+h^2)/h^2} == prodj((1-q^(1*j)))^(-1*t-1)",)),
    Builtin("stanley", True, _pairs_simple(["(t+c^2)/h^2"], _rhs_stanley), _rhs_stanley,
            ("psum{(t+c^2)/h^2} == (1-q^(1))^(-t)",)),
    Builtin("conj_6_2a", True, _pairs_simple(["(t+csp)/h"], _rhs_6_2a), _rhs_6_2a, (_TEXT_6_2A,)),
    Builtin("conj_6_2b", True, _pairs_simple(["(t+co)/h"], _rhs_6_2b), _rhs_6_2b, (_TEXT_6_2B,)),
    Builtin("conj_6_3a", True, _pairs_simple(["(t+csp^2)/h^2", "(t+co^2)/h^2"], _rhs_6_3a), _rhs_6_3a,
            ("psum{(t+csp^2)/h^2} == " + _PROD_6_3A, "psum{(t+co^2)/h^2} == " + _PROD_6_3A)),
    Builtin("thm_6_3b", False, _pairs_simple(["csp^2/h^2", "co^2/h^2"], _rhs_6_3b), _rhs_6_3b,
            ("psum{csp^2/h^2} == prodj((1-q^(4*j-2)))^(-1)", "psum{co^2/h^2} == prodj((1-q^(4*j-2)))^(-1)")),
    Builtin("thm_6_2c", False, _pairs_simple(["csp/h", "co/h"], _rhs_6_2c), _rhs_6_2c,
            ("psum{csp/h} == prodj((1+q^(4*j-2)))^(-1)", "psum{co/h} == prodj((1+q^(4*j-2)))^(-1)")),
    Builtin("cor_6_3c", False, _pairs_cor_6_3c, lambda N: lhs_series(Kernel("csp", "h"), N)),
    Builtin("thm_2_14", False, _pairs_2_14, _rhs_2_14,
            ("psum{(csp^2-1)/h^2} == prodj((1-q^(1*j))) / prodj((1-q^(4*j-2)))",)),
    Builtin("overcubic_t2", False, _pairs_overcubic, _overcubic,
            ("psum{(2+csp^2)/h^2} == prodj((1+q^(2*j))) / prodj((1-q^(1*j)))^(2)",)),
    Builtin("euler_syp0", False, _pairs_euler_syp0, _rhs_6_3b,
            ("prodj((1+q^(2*j))) == prodj((1-q^(4*j-2)))^(-1)",)),
)}


def get_builtin(name: str) -> Builtin:
    try:
        return BUILTINS[name]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {name!r}; known: {', '.join(BUILTINS)}") from None


def rhs_series(identity: str | dsl.Identity, N: int) -> QSeries:
    if isinstance(identity, dsl.Identity):
        return dsl.compile(identity).rhs(N)
    return get_builtin(identity).rhs(N)


def _first_failure(pairs: Pairs, N: int) -> Failure | None:
    best = None
    for lhs, rhs, start in pairs:
        f = first_difference(N, lhs, rhs, start)
        if f is not None and (best is None or f.q_order < best.q_order):
            best = f
    return best


def verify(identity: str | dsl.Identity, N: int, jobs: int = 1, name: str | None = None) -> VerificationReport:
    """Compare both sides coefficient by coefficient up to ``q^N``."""
    if N < 1:
        raise OrderTooSmall(f"order must be at least 1, got {N}")
    start = time.perf_counter()
    if isinstance(identity, dsl.Identity):
        compiled = dsl.compile(identity)
        precompute(compiled.kernels, N, jobs)
        pairs = [(compiled.lhs(N), compiled.rhs(N), 0)]
        name = name or dsl.unparse(identity)
    else:
        b = get_builtin(identity)
        pairs = b.pairs(N, jobs)
        name = name or b.name
    failure = _first_failure(pairs, N)
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(name, N, failure, elapsed)


def is_symbolic(identity: str | dsl.Identity) -> bool:
    if isinstance(identity, dsl.Identity):
        return dsl.compile(identity).symbolic
    return get_builtin(identity).symbolic


def default_order(identity: str | dsl.Identity) -> int:
    return 30 if is_symbolic(identity) else 60
