"""Profile bit strings, Ferrers matrices and x-ray lists."""
from __future__ import annotations

from typing import Sequence

from .partitions import (
    Partition,
    is_distinct,
    is_maximal_in_staircase,
    partitions_raw,
)


class InvalidXray(ValueError):
    pass


def bit_string(lam: Sequence[int]) -> str:
    """Walk the outer profile from the SW corner: ``1`` right, ``0`` up."""
    out = []
    prev = 0
    for p in reversed(lam):
        out.append("1" * (p - prev) + "0")
        prev = p
    return "".join(out)


def inversion_sum(w: str) -> int:
    """Sum of ``j - i`` over pairs ``w[i] = 1``, ``w[j] = 0``, ``i < j``."""
    ones = pos_sum = total = 0
    for j, ch in enumerate(w):
        if ch == "1":
            ones += 1
            pos_sum += j
        elif ch == "0":
            total += ones * j - pos_sum
        else:
            raise ValueError(f"not a binary string: {w!r}")
    return total


def inversion_sum_naive(w: str) -> int:
    return sum(j - i for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] == "1" and w[j] == "0")


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    """Hook lengths row by row."""
    from .partitions import conjugate_parts
    conj = conjugate_parts(lam)
    return [[row + conj[j - 1] - i - j + 1 for j in range(1, row + 1)]
            for i, row in enumerate(lam, start=1)]


def hook_sum(lam: Sequence[int]) -> int:
    return sum(sum(r) for r in hook_lengths(lam))


def ferrers_matrix(lam: Sequence[int]) -> list[list[int]]:
    m = max(lam[0], len(lam)) if lam else 0
    return [[1 if i < len(lam) and j < lam[i] else 0 for j in range(m)] for i in range(m)]


def xray(lam: Sequence[int]) -> tuple[int, ...]:
    """Anti-diagonal sums of the Ferrers matrix (``2m - 1`` entries, zero padded)."""
    m = max(lam[0], len(lam)) if lam else 0
    out = [0] * max(2 * m - 1, 0)
    for i, row in enumerate(lam):
        for j in range(row):
            out[i + j] += 1
    return tuple(out)


def trim(x: Sequence[int]) -> tuple[int, ...]:
    x = list(x)
    while x and x[-1] == 0:
        x.pop()
    return tuple(x)


def xray_length(lam: Sequence[int]) -> int:
    """Number of non-zero x-ray entries."""
    return sum(1 for v in xray(lam) if v)


def is_xray_shape(x: Sequence[int]) -> bool:
    """``(1, 2, ..., n, a_1, ..., a_r)`` with ``n >= a_1 >= ... >= a_r > 0`` after trimming."""
    x = trim(x)
    n = 0
    while n < len(x) and x[n] == n + 1:
        n += 1
    tail = x[n:]
    if any(v <= 0 for v in tail):
        return False
    if tail and tail[0] > n:
        return False
    return all(a >= b for a, b in zip(tail, tail[1:]))


def phi(x: Sequence[int]) -> Partition:
    """Refill each anti-diagonal from the top row down; the result has distinct parts."""
    x = trim(x)
    if not is_xray_shape(x):
        raise InvalidXray(f"{list(x)} is not of the form (1,2,...,n,a_1>=...>=a_r)")
    rows: dict[int, int] = {}
    for d, count in enumerate(x):
        # anti-diagonal d holds cells (i, d - i) for i = 0..d
        if count > d + 1:
            raise InvalidXray(f"anti-diagonal {d + 1} cannot hold {count} cells")
        for i in range(count):
            if rows.get(i, 0) != d - i:
                raise InvalidXray(f"{list(x)} does not refill to a partition")
            rows[i] = d - i + 1
    parts = [rows[i] for i in range(len(rows))]
    lam = Partition(parts)
    if not is_distinct(lam):
        raise InvalidXray(f"{list(x)} refills to a partition with repeated parts")
    return lam


def xray_classes(n: int) -> dict[tuple[int, ...], list[Partition]]:
    """Trimmed x-ray list -> partitions of ``n`` sharing it (insertion order is
    decreasing lex order of the first member)."""
    classes: dict[tuple[int, ...], list[Partition]] = {}
    for lam in partitions_raw(n):
        classes.setdefault(trim(xray(lam)), []).append(Partition(lam))
    return classes


def staircase_row_by_containment(n: int) -> list[int]:
    row = [0] * n
    for lam in partitions_raw(n):
        for r in range(1, n + 1):
            if is_maximal_in_staircase(lam, r):
                row[r - 1] += 1
                break
    return row


def staircase_row_by_xray(n: int) -> list[int]:
    row = [0] * n
    for lam in partitions_raw(n):
        row[xray_length(lam) - 1] += 1
    return row


def staircase_triangle(rows: int) -> list[list[int]]:
    """Row n: number of partitions of n maximally contained in delta_r, r = 1..n.

    Each row is computed both by containment and by x-ray length; a
    disagreement raises ``AssertionError``.
    """
    if rows < 1:
        raise ValueError("rows must be at least 1")
    out = []
    for n in range(1, rows + 1):
        a = staircase_row_by_containment(n)
        b = staircase_row_by_xray(n)
        if a != b:
            raise AssertionError(f"row {n}: containment {a} != x-ray {b}")
        out.append(a)
    return out


def _tuple_text(xs: Sequence[int]) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def hook_table(n: int) -> list[tuple[str, str, str, str, str]]:
    """Rows ``(partition, bit string, inversion sum, hook lists by row, hook sum)``
    for every partition of ``n`` in decreasing lex order."""
    rows = []
    for lam in partitions_raw(n):
        lam = tuple(lam)
        w = bit_string(lam)
        hooks = "[" + ",".join(_tuple_text(r) for r in hook_lengths(lam)) + "]"
        rows.append((_tuple_text(lam), w, str(inversion_sum(w)), hooks, str(hook_sum(lam))))
    return rows
