"""Per-cell statistics: hook length, content, symplectic and orthogonal content.

Cells are 1-indexed ``(row, col)`` pairs.  Functions accept any non-increasing
sequence of positive parts (a :class:`Partition` or a plain list).
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .partitions import (
    InvalidCell,
    InvalidPartition,
    Partition,
    conjugate_parts,
    durfee,
    is_distinct,
    nested_hooks,
)


class LengthBoundError(ValueError):
    pass


class NotInDomain(ValueError):
    pass


def _conj(lam: Sequence[int]) -> Sequence[int]:
    if isinstance(lam, Partition):
        return lam.conjugate
    return conjugate_parts(lam)


def _check(lam: Sequence[int], cell: tuple[int, int]) -> tuple[int, int]:
    i, j = cell
    if i < 1 or j < 1 or i > len(lam) or j > lam[i - 1]:
        raise InvalidCell(f"cell ({i},{j}) is not in {list(lam)}")
    return i, j


def hook_length(lam: Sequence[int], cell: tuple[int, int]) -> int:
    i, j = _check(lam, cell)
    conj = _conj(lam)
    return lam[i - 1] + conj[j - 1] - i - j + 1


def content(lam: Sequence[int], cell: tuple[int, int]) -> int:
    i, j = _check(lam, cell)
    return j - i


def _csp(lam, conj, i, j) -> int:
    if i > j:
        return lam[i - 1] + lam[j - 1] - i - j + 2
    return i + j - conj[i - 1] - conj[j - 1]


def _co(lam, conj, i, j) -> int:
    if i >= j:
        return lam[i - 1] + lam[j - 1] - i - j
    return i + j - conj[i - 1] - conj[j - 1] - 2


def symplectic_content(lam: Sequence[int], cell: tuple[int, int]) -> int:
    i, j = _check(lam, cell)
    return _csp(lam, _conj(lam), i, j)


def orthogonal_content(lam: Sequence[int], cell: tuple[int, int]) -> int:
    i, j = _check(lam, cell)
    return _co(lam, _conj(lam), i, j)


class CellStats(NamedTuple):
    row: int
    col: int
    hook: int
    content: int
    csp: int
    co: int


def cell_stats(lam: Sequence[int]) -> list[CellStats]:
    """All statistics for every cell, row by row, sharing one conjugate."""
    conj = _conj(lam)
    out = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out.append(CellStats(
                i, j,
                row + conj[j - 1] - i - j + 1,
                j - i,
                _csp(lam, conj, i, j),
                _co(lam, conj, i, j),
            ))
    return out


def _checked_integer(x: Fraction, what: str) -> Fraction:
    if x.denominator != 1 or x <= 0:
        raise ArithmeticError(f"{what} evaluated to {x}, not a positive integer")
    return x


def dim_gl(lam: Sequence[int], n: int) -> Fraction:
    if len(lam) > n:
        raise LengthBoundError(f"length {len(lam)} exceeds n={n}")
    prod = Fraction(1)
    for s in cell_stats(lam):
        prod *= Fraction(n + s.content, s.hook)
    return _checked_integer(prod, "dim_GL")


def dim_sp(lam: Sequence[int], two_n: int) -> Fraction:
    if two_n <= 0 or two_n % 2:
        raise ValueError("two_n must be a positive even integer")
    if len(lam) > two_n // 2:
        raise LengthBoundError(f"length {len(lam)} exceeds {two_n // 2}")
    prod = Fraction(1)
    for s in cell_stats(lam):
        prod *= Fraction(two_n + s.csp, s.hook)
    return _checked_integer(prod, "dim_Sp")


def dim_so(lam: Sequence[int], n: int) -> Fraction:
    if len(lam) > n // 2:
        raise LengthBoundError(f"length {len(lam)} exceeds floor({n}/2)")
    prod = Fraction(1)
    for s in cell_stats(lam):
        prod *= Fraction(n + s.co, s.hook)
    return _checked_integer(prod, "dim_SO")


# --- syP_0 and syP_{+-1} ----------------------------------------------------

def is_syp0_scan(lam: Sequence[int]) -> bool:
    return all(s.csp != 0 for s in cell_stats(lam))


def is_syp0(lam: Sequence[int]) -> bool:
    """No cell has symplectic content 0, decided from the nested hooks."""
    return all(a == b for a, b in nested_hooks(lam))


def is_syp_pm1_scan(lam: Sequence[int]) -> bool:
    return all(s.csp not in (1, -1) for s in cell_stats(lam))


def is_syp_pm1(lam: Sequence[int]) -> bool:
    """No cell has symplectic content +-1, i.e. ``lam`` is empty or a staircase."""
    r = len(lam)
    return all(p == r - i for i, p in enumerate(lam))


def hook_avoids_content(a: int, b: int, t: int) -> bool:
    """Closed-form test that no cell of the hook ``(a, 1^b)`` has symplectic content ``t``."""
    if 2 * b == -t:
        return False
    if a >= 2 and not (b < 1 - t or a - b - 1 < t):
        return False
    if b >= 1 and not (t < a - b + 1 or a < t):
        return False
    return True


# --- straightening ----------------------------------------------------------

def straighten(lam: Sequence[int]) -> Partition:
    """Replace each nested hook ``(a, 1^a)`` by the part ``2a``."""
    hooks = nested_hooks(lam)
    if any(a != b for a, b in hooks):
        raise NotInDomain(f"{list(lam)} has a cell of symplectic content 0")
    return Partition(a + b for a, b in hooks)


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Partition with Frobenius coordinates ``(arms | legs)``, both strictly decreasing."""
    d = len(arms)
    if len(legs) != d:
        raise InvalidPartition("arms and legs must have equal length")
    rows = [arms[i] + i + 1 for i in range(d)]
    if d:
        for r in range(d + 1, legs[0] + 2):
            rows.append(sum(1 for k in range(d) if legs[k] + k + 1 >= r))
    return Partition(rows)


def unstraighten(mu: Sequence[int]) -> Partition:
    if not is_distinct(mu) or any(p % 2 for p in mu):
        raise NotInDomain(f"{list(mu)} does not have distinct even parts")
    halves = [p // 2 for p in mu]
    return from_frobenius([a - 1 for a in halves], halves)
