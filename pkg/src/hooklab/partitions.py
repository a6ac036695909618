"""Integer partitions: the value type, family enumeration and basic statistics."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Sequence


class InvalidPartition(ValueError):
    pass


class InvalidCell(ValueError):
    pass


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    ``Partition((3, 1))`` validates its input; use :meth:`from_parts` to sort
    an arbitrary multiset of parts first.
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise InvalidPartition(f"parts must be non-increasing: {parts}")
        if parts and parts[-1] <= 0:
            raise InvalidPartition(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of :func:`str`: ``"[5,3,3,2,1]"`` or ``"[]"``."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise InvalidPartition(f"expected [a,b,...], got {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls(())
        return cls(int(x) for x in body.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-indexed part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @cached_property
    def conjugate(self) -> "Partition":
        return Partition(conjugate_parts(self))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def has_cell(self, i: int, j: int) -> bool:
        return i >= 1 and j >= 1 and j <= self.part(i)

    def contains(self, other: Sequence[int]) -> bool:
        """True if ``other`` fits inside this diagram."""
        if len(other) > len(self):
            return False
        return all(b <= a for a, b in zip(self, other))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


EMPTY = Partition(())


def conjugate_parts(parts: Sequence[int]) -> list[int]:
    if not parts:
        return []
    out = []
    k = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[k - 1] < j:
            k -= 1
        out.append(k)
    return out


def conjugate(lam: Sequence[int]) -> Partition:
    return Partition(conjugate_parts(lam))


def staircase(r: int) -> Partition:
    return Partition(range(r, 0, -1))


def durfee(lam: Sequence[int]) -> int:
    m = 0
    while m < len(lam) and lam[m] >= m + 1:
        m += 1
    return m


def nested_hooks(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Arm/leg pairs ``(lam_i - i + 1, lam'_i - i)`` for each diagonal cell."""
    conj = conjugate_parts(lam)
    return [(lam[i] - i, conj[i] - i - 1) for i in range(durfee(lam))]


def rank_j(lam: Sequence[int], j: int) -> int:
    """``lam_j - lam'_j``; the diagonal cell (j, j) must lie in the diagram."""
    if j < 1 or j > durfee(lam):
        raise InvalidCell(f"cell ({j},{j}) is not in {list(lam)}")
    conj = conjugate_parts(lam)
    return lam[j - 1] - conj[j - 1]


def rank(lam: Sequence[int]) -> int:
    return (lam[0] - len(lam)) if lam else 0


def m2_rank(lam: Sequence[int]) -> int:
    if not lam:
        raise InvalidPartition("M2-rank of the empty partition is undefined")
    return (lam[0] + 1) // 2 - len(lam)


# --- enumeration -----------------------------------------------------------

def partitions_raw(n: int) -> Iterator[list[int]]:
    """All partitions of ``n`` in decreasing lexicographic order.

    Successor algorithm on the multiplicity-compressed form (Zoghbi and
    Stojmenovic's ZS1).  The yielded list is reused between steps; copy it
    if it must outlive the iteration.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield []
        return
    x = [1] * (n + 1)
    x[1] = n
    m, h = 1, 1
    yield x[1:m + 1]
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield x[1:m + 1]


def distinct_raw(n: int, max_part: int | None = None, step: int = 1) -> Iterator[list[int]]:
    """Partitions of ``n`` into distinct multiples of ``step``, decreasing lex order."""
    if max_part is None:
        max_part = n
    max_part -= max_part % step

    def rec(rem: int, top: int, acc: list[int]):
        if rem == 0:
            yield acc
            return
        # remaining parts top, top-step, ... must be able to reach rem
        part = min(top, rem - rem % step)
        while part >= step:
            k = part // step
            if step * k * (k + 1) // 2 < rem:
                break
            acc.append(part)
            yield from rec(rem - part, part - step, acc)
            acc.pop()
            part -= step

    if n % step:
        return
    yield from rec(n, max_part, [])


def is_distinct(lam: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def is_self_conjugate(lam: Sequence[int]) -> bool:
    return list(lam) == conjugate_parts(lam)


def has_exactly_one_repeat(lam: Sequence[int]) -> bool:
    repeats = {a for a, b in zip(lam, lam[1:]) if a == b}
    return len(repeats) == 1


def is_contained_in_staircase(lam: Sequence[int], r: int) -> bool:
    if len(lam) > r:
        return False
    return all(p <= r - i for i, p in enumerate(lam))


def is_maximal_in_staircase(lam: Sequence[int], r: int) -> bool:
    return is_contained_in_staircase(lam, r) and (r == 0 or not is_contained_in_staircase(lam, r - 1))


@dataclass(frozen=True)
class Family:
    """A named family of partitions with a membership predicate.

    ``r`` is the staircase index for the two staircase families.
    """

    name: str
    r: int | None = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.name!r}")
        if self.name in ("contained-in-staircase", "maximal-in-staircase") and self.r is None:
            raise ValueError(f"family {self.name} needs a staircase index r")

    @classmethod
    def parse(cls, text: str) -> "Family":
        """``"distinct-even"``, ``"maximal-in-staircase(4)"``, ..."""
        text = text.strip()
        if "(" in text and text.endswith(")"):
            name, arg = text[:-1].split("(", 1)
            return cls(name.strip(), int(arg))
        return cls(text)

    def __str__(self) -> str:
        return self.name if self.r is None else f"{self.name}({self.r})"

    def contains(self, lam: Sequence[int]) -> bool:
        return _predicate(self)(lam)


def _is_syp0(lam):
    from .cells import is_syp0
    return is_syp0(lam)


def _is_syp_pm1(lam):
    from .cells import is_syp_pm1
    return is_syp_pm1(lam)


def _predicate(fam: Family) -> Callable[[Sequence[int]], bool]:
    name = fam.name
    if name == "all":
        return lambda lam: True
    if name == "distinct":
        return is_distinct
    if name == "distinct-even":
        return lambda lam: is_distinct(lam) and all(p % 2 == 0 for p in lam)
    if name == "parts-2-mod-4":
        return lambda lam: all(p % 4 == 2 for p in lam)
    if name == "self-conjugate":
        return is_self_conjugate
    if name == "even-parts-one-repeat":
        return lambda lam: all(p % 2 == 0 for p in lam) and has_exactly_one_repeat(lam)
    if name == "syp0":
        return _is_syp0
    if name == "syp-pm1":
        return _is_syp_pm1
    if name == "contained-in-staircase":
        return lambda lam: is_contained_in_staircase(lam, fam.r)
    if name == "maximal-in-staircase":
        return lambda lam: is_maximal_in_staircase(lam, fam.r)
    raise AssertionError(name)


FAMILY_NAMES = (
    "all", "distinct", "distinct-even", "parts-2-mod-4", "self-conjugate",
    "even-parts-one-repeat", "syp0", "syp-pm1",
    "contained-in-staircase", "maximal-in-staircase",
)


def enumerate_partitions(n: int, family: Family | str = "all") -> Iterator[Partition]:
    """Each partition of ``n`` in ``family`` exactly once, decreasing lex order."""
    if isinstance(family, str):
        family = Family.parse(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    if family.name == "distinct":
        source = distinct_raw(n)
        pred = None
    elif family.name == "distinct-even":
        source = distinct_raw(n, step=2)
        pred = None
    else:
        source = partitions_raw(n)
        pred = None if family.name == "all" else _predicate(family)
    for lam in source:
        if pred is None or pred(lam):
            yield Partition(lam)


def count(n: int, family: Family | str = "all") -> int:
    return sum(1 for _ in enumerate_partitions(n, family))


def euler_partition_counts(n_max: int) -> list[int]:
    """p(0..n_max) by Euler's pentagonal-number recurrence."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p
