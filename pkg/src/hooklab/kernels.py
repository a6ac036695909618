"""Per-cell kernels and exact partition sums ``sum_{lam |- n} prod_{u in lam} kernel(u)``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence, Union

from .arith import Poly
from .partitions import conjugate_parts, partitions_raw

STATS = ("csp", "co", "c", "h", "csp^2", "co^2", "c^2", "h^2")

Offset = Union[str, int, None]


@dataclass(frozen=True)
class Kernel:
    """Per-cell factor ``(offset + num) / den``.

    ``offset`` is ``"t"`` for the symbolic variable, an integer, or ``None``
    for no additive term.  ``den`` is ``"h"`` or ``"h^2"``.
    """

    num: str
    den: str
    offset: Offset = None

    def __post_init__(self):
        if self.num not in STATS:
            raise ValueError(f"unknown statistic {self.num!r}")
        if self.den not in ("h", "h^2"):
            raise ValueError(f"denominator must be h or h^2, got {self.den!r}")
        if self.offset is not None and self.offset != "t" and not isinstance(self.offset, int):
            raise ValueError(f"bad offset {self.offset!r}")

    @property
    def symbolic(self) -> bool:
        return self.offset == "t"

    @property
    def text(self) -> str:
        if self.offset is None:
            return f"{self.num}/{self.den}"
        if self.offset == "t":
            return f"(t+{self.num})/{self.den}"
        if self.offset == -1 and self.num == "csp^2":
            return "(csp^2-1)/h^2"
        if self.offset < 0:
            return f"({self.num}{self.offset})/{self.den}"
        return f"({self.offset}+{self.num})/{self.den}"

    def specialize(self, t: int) -> "Kernel":
        """Replace the symbolic ``t`` by an integer."""
        if not self.symbolic:
            return self
        return Kernel(self.num, self.den, t)

    def __str__(self) -> str:
        return self.text

    @classmethod
    def parse(cls, text: str) -> "Kernel":
        from .dsl import parse_kernel
        return parse_kernel(text)


NAMED_KERNELS = {
    k.text: k for k in (
        Kernel("csp", "h", "t"),
        Kernel("co", "h", "t"),
        Kernel("csp^2", "h^2", "t"),
        Kernel("co^2", "h^2", "t"),
        Kernel("c^2", "h^2", "t"),
        Kernel("h^2", "h^2", "t"),
        Kernel("csp", "h"),
        Kernel("co", "h"),
        Kernel("csp^2", "h^2"),
        Kernel("co^2", "h^2"),
        Kernel("csp^2", "h^2", -1),
    )
}


class _CellData:
    """Lazily built per-cell value lists for one partition, shared by all kernels."""

    __slots__ = ("lam", "conj", "_h", "_c", "_csp", "_co", "_hp", "_outer")

    def __init__(self, lam: Sequence[int], conj: Sequence[int]):
        self.lam = lam
        self.conj = conj
        self._h = self._c = self._csp = self._co = self._hp = None
        self._outer = {}

    def stat(self, name: str) -> list[int]:
        return getattr(self, name)

    def outer(self, name: str) -> list[int]:
        """Values of ``name`` on the outer hook only (first row and column)."""
        got = self._outer.get(name)
        if got is not None:
            return got
        lam, conj = self.lam, self.conj
        l1, c1 = lam[0], conj[0]
        if name == "csp":
            got = [1 + j - c1 - conj[j - 1] for j in range(1, l1 + 1)]
            got += [lam[i - 1] + l1 - i + 1 for i in range(2, c1 + 1)]
        elif name == "co":
            got = [2 * l1 - 2] + [j - c1 - conj[j - 1] - 1 for j in range(2, l1 + 1)]
            got += [lam[i - 1] + l1 - i - 1 for i in range(2, c1 + 1)]
        elif name == "c":
            got = list(range(0, l1)) + list(range(-1, -c1, -1))
        else:
            got = [l1 + conj[j - 1] - j for j in range(1, l1 + 1)]
            got += [lam[i - 1] + c1 - i for i in range(2, c1 + 1)]
        self._outer[name] = got
        return got

    @property
    def h(self) -> list[int]:
        if self._h is None:
            lam, conj = self.lam, self.conj
            out = []
            for i, li in enumerate(lam, start=1):
                out += [li + conj[j - 1] - i - j + 1 for j in range(1, li + 1)]
            self._h = out
        return self._h

    @property
    def c(self) -> list[int]:
        if self._c is None:
            out = []
            for i, li in enumerate(self.lam, start=1):
                out += range(1 - i, li + 1 - i)
            self._c = out
        return self._c

    @property
    def csp(self) -> list[int]:
        if self._csp is None:
            lam, conj = self.lam, self.conj
            out = []
            for i, li in enumerate(lam, start=1):
                # below the diagonal (i > j), then on/after it (i <= j)
                out += [li + lam[j - 1] - i - j + 2 for j in range(1, min(i - 1, li) + 1)]
                ci = conj[i - 1] if i <= len(conj) else 0
                out += [i + j - ci - conj[j - 1] for j in range(i, li + 1)]
            self._csp = out
        return self._csp

    @property
    def co(self) -> list[int]:
        if self._co is None:
            lam, conj = self.lam, self.conj
            out = []
            for i, li in enumerate(lam, start=1):
                out += [li + lam[j - 1] - i - j for j in range(1, min(i, li) + 1)]
                ci = conj[i - 1] if i <= len(conj) else 0
                out += [i + j - ci - conj[j - 1] - 2 for j in range(i + 1, li + 1)]
            self._co = out
        return self._co

    @property
    def hook_product(self) -> int:
        if self._hp is None:
            self._hp = prod(self.h)
        return self._hp


def _numerators(cells: _CellData, kernel: Kernel, outer: bool = False) -> list[int]:
    name = kernel.num
    get = cells.outer if outer else cells.stat
    if name.endswith("^2"):
        vals = [v * v for v in get(name[:-2])]
    else:
        vals = get(name)
    off = kernel.offset
    if isinstance(off, int) and off:
        vals = [v + off for v in vals]
    return vals


class _Accumulator:
    """Integer-only accumulation of ``prod num / prod den`` over partitions of n.

    Every ``prod h`` divides ``n!`` (the quotient is the number of standard
    tableaux), so each term is scaled to the common denominator ``n!`` or
    ``n!^2`` and summed as integers.
    """

    def __init__(self, kernel: Kernel, n: int):
        self.kernel = kernel
        self.squared = kernel.den == "h^2"
        self.common = factorial(n) ** (2 if self.squared else 1)
        self.symbolic = kernel.symbolic
        self.total = [0] * (n + 1) if self.symbolic else 0

    def add(self, cells: _CellData) -> None:
        if not self.symbolic and 0 in _numerators(cells, self.kernel, outer=True):
            return
        vals = _numerators(cells, self.kernel)
        if self.symbolic:
            # expand prod (t + beta)
            poly = [1]
            for beta in vals:
                nxt = [beta * a for a in poly]
                nxt.append(0)
                for k, a in enumerate(poly):
                    nxt[k + 1] += a
                poly = nxt
            scale = self._scale(cells.hook_product)
            tot = self.total
            for k, a in enumerate(poly):
                tot[k] += a * scale
        else:
            if 0 in vals:
                return
            self.total += prod(vals) * self._scale(cells.hook_product)

    def _scale(self, hooks_prod: int) -> int:
        return self.common // (hooks_prod * hooks_prod if self.squared else hooks_prod)

    def result(self) -> Poly:
        if self.symbolic:
            return Poly(Fraction(a, self.common) for a in self.total)
        return Poly.const(Fraction(self.total, self.common))


def partition_sums(n: int, kernels: Sequence[Kernel]) -> list[Poly]:
    """One pass over the partitions of ``n`` computing each kernel's sum."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [Poly.const(1) for _ in kernels]
    accs = [_Accumulator(k, n) for k in kernels]
    for lam in partitions_raw(n):
        cells = _CellData(lam, conjugate_parts(lam))
        for acc in accs:
            acc.add(cells)
    return [acc.result() for acc in accs]


def partition_sum(n: int, kernel: Kernel | str) -> Poly:
    if isinstance(kernel, str):
        kernel = Kernel.parse(kernel)
    return partition_sums(n, [kernel])[0]


def partition_product(lam: Sequence[int], kernel: Kernel | str) -> Poly:
    """``prod_{u in lam} kernel(u)`` for a single partition (reference path)."""
    from .cells import cell_stats
    from .arith import T
    if isinstance(kernel, str):
        kernel = Kernel.parse(kernel)
    base = kernel.num.removesuffix("^2")
    out = Poly.const(1)
    for s in cell_stats(lam):
        top = {"h": s.hook, "c": s.content, "csp": s.csp, "co": s.co}[base]
        if kernel.num.endswith("^2"):
            top *= top
        den = s.hook ** 2 if kernel.den == "h^2" else s.hook
        if kernel.symbolic:
            out = out * (T + top) / den
        else:
            out = out * Fraction((kernel.offset or 0) + top, den)
    return out
