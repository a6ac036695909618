"""Power series in ``q`` truncated mod ``q^(N+1)`` with :class:`Poly` coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .arith import ONE, ZERO, Poly, Scalar, gen_binom, rational_str


class OrderMismatch(ValueError):
    pass


class NonUnitConstant(ArithmeticError):
    pass


class DegreeCapExceeded(ArithmeticError):
    pass


class NonConvergent(ValueError):
    pass


Coeff = Union[Poly, int, Fraction]


def _as_poly(c: Coeff) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


class QSeries:
    """``sum coeffs[n] q^n`` for ``n = 0..order``.

    ``cap`` optionally bounds the degree of every coefficient polynomial;
    exceeding it raises :class:`DegreeCapExceeded` instead of silently
    growing.  Binary operations require equal orders.
    """

    __slots__ = ("order", "coeffs", "cap")

    def __init__(self, coeffs: Iterable[Coeff], order: int, cap: int | None = None):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_as_poly(c) for c in coeffs][: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)
        self.cap = cap
        if cap is not None:
            for n, c in enumerate(self.coeffs):
                if c.degree > cap:
                    raise DegreeCapExceeded(f"coefficient of q^{n} has degree {c.degree} > {cap}")

    @classmethod
    def one(cls, order: int, cap: int | None = None) -> "QSeries":
        return cls([ONE], order, cap)

    @classmethod
    def zero(cls, order: int, cap: int | None = None) -> "QSeries":
        return cls([], order, cap)

    @classmethod
    def monomial(cls, k: int, order: int, c: Coeff = 1, cap: int | None = None) -> "QSeries":
        if k > order:
            return cls.zero(order, cap)
        return cls([ZERO] * k + [_as_poly(c)], order, cap)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _cap_with(self, other: "QSeries") -> int | None:
        if self.cap is None:
            return other.cap
        if other.cap is None:
            return self.cap
        return min(self.cap, other.cap)

    def _check(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction, Poly)):
            return QSeries([other], self.order, self.cap)
        if not isinstance(other, QSeries):
            raise TypeError(f"cannot combine QSeries with {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")
        return other

    def __add__(self, other) -> "QSeries":
        other = self._check(other)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self._cap_with(other))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries([-a for a in self.coeffs], self.order, self.cap)

    def __sub__(self, other) -> "QSeries":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "QSeries":
        return self._check(other) - self

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction, Poly)):
            return QSeries([a * other for a in self.coeffs], self.order, self.cap)
        other = self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [ZERO] * (N + 1)
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in bnz:
                if i + j > N:
                    break
                out[i + j] = out[i + j] + x * y
        return QSeries(out, N, self._cap_with(other))

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        c0 = self.coeffs[0]
        if not c0 or not c0.is_const():
            raise NonUnitConstant(f"constant term {c0} is not an invertible constant")
        inv0 = 1 / c0.const_value()
        N = self.order
        a = self.coeffs
        anz = [(k, y) for k, y in enumerate(a) if k and y]
        out = [ZERO] * (N + 1)
        out[0] = Poly.const(inv0)
        for n in range(1, N + 1):
            acc = ZERO
            for k, y in anz:
                if k > n:
                    break
                if out[n - k]:
                    acc = acc + y * out[n - k]
            out[n] = -acc * inv0
        return QSeries(out, N, self.cap)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._check(other).inverse()

    def __rtruediv__(self, other) -> "QSeries":
        return self._check(other) * self.inverse()

    def power(self, e: Union[Poly, int]) -> "QSeries":
        """``self ** e`` for a polynomial exponent ``e``.

        Integer exponents use repeated multiplication (and inversion when
        negative); otherwise the constant term must be 1 and the generalized
        binomial series in ``self - 1`` is summed.
        """
        if isinstance(e, int):
            e = Poly.const(e)
        if e.is_const() and e.const_value().denominator == 1:
            k = int(e.const_value())
            base = self if k >= 0 else self.inverse()
            out = QSeries.one(self.order, self.cap)
            k = abs(k)
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        if self.coeffs[0] != ONE:
            raise NonUnitConstant("non-integer power needs constant term 1")
        x = self - 1
        out = QSeries.one(self.order, self.cap)
        xk = QSeries.one(self.order, self.cap)
        for k in range(1, self.order + 1):
            xk = xk * x
            if not any(xk.coeffs):
                break
            out = out + xk * gen_binom(e, k)
        return out

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k``."""
        return QSeries([ZERO] * k + list(self.coeffs), self.order, self.cap)

    def map_coeffs(self, fn, cap: int | None = None) -> "QSeries":
        return QSeries([fn(c) for c in self.coeffs], self.order, cap)

    def at(self, x: Scalar) -> "QSeries":
        """Substitute a rational value for the coefficient variable."""
        return self.map_coeffs(lambda c: Poly.const(c.eval(x)))

    def d_at_one(self) -> "QSeries":
        """Formal derivative in the coefficient variable, evaluated at 1."""
        return self.map_coeffs(lambda c: Poly.const(c.derivative().eval(1)))

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise OrderMismatch("cannot raise the truncation order")
        return QSeries(self.coeffs[: order + 1], order, self.cap)

    def constants(self) -> list[Fraction]:
        return [c.const_value() for c in self.coeffs]

    def integers(self) -> list[int]:
        out = []
        for c in self.constants():
            if c.denominator != 1:
                raise ArithmeticError(f"non-integer coefficient {c}")
            out.append(int(c))
        return out

    def to_json(self) -> list[dict]:
        return [{"q": n, "coeff": c.to_json()} for n, c in enumerate(self.coeffs)]

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c.format()})*q^{n}")
        return "QSeries(" + (" + ".join(terms) or "0") + f"; O(q^{self.order + 1}))"


def series_add(x: QSeries, y: QSeries) -> QSeries:
    return x + y


def series_mul(x: QSeries, y: QSeries) -> QSeries:
    return x * y


def series_neg(x: QSeries) -> QSeries:
    return -x


def series_inv(x: QSeries) -> QSeries:
    return x.inverse()


def from_integers(values: Sequence[Scalar], order: int) -> QSeries:
    return QSeries(values, order)


def eta_pow(m: int, e: Union[Poly, int], order: int, cap: int | None = None) -> QSeries:
    """``(1 - q^m)^e`` as ``sum_k binom(e, k) (-1)^k q^(mk)``."""
    if m < 1:
        raise ValueError(f"q^{m} factor: exponent must be >= 1")
    if isinstance(e, int):
        e = Poly.const(e)
    out = [ZERO] * (order + 1)
    k = 0
    while m * k <= order:
        c = gen_binom(e, k)
        out[m * k] = -c if k % 2 else c
        k += 1
    return QSeries(out, order, cap)


def one_plus_pow(m: int, e: Union[Poly, int], order: int, cap: int | None = None) -> QSeries:
    """``(1 + q^m)^e``."""
    if m < 1:
        raise ValueError(f"q^{m} factor: exponent must be >= 1")
    if isinstance(e, int):
        e = Poly.const(e)
    out = [ZERO] * (order + 1)
    k = 0
    while m * k <= order:
        out[m * k] = gen_binom(e, k)
        k += 1
    return QSeries(out, order, cap)


@dataclass(frozen=True)
class EtaFactor:
    """``prod_{j>=1} (1 - q^(step*j + offset))^exponent``."""

    step: int
    offset: int
    exponent: Poly

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be positive")
        if self.step + self.offset < 1:
            raise ValueError(f"factor q^({self.step}j{self.offset:+d}) is not positive at j=1")


def eta_product(factors: Sequence[EtaFactor], order: int) -> QSeries:
    out = QSeries.one(order)
    for f in factors:
        j = 1
        while f.step * j + f.offset <= order:
            out = out * eta_pow(f.step * j + f.offset, f.exponent, order)
            j += 1
    return out


def pochhammer(coeff: Coeff, shift: int, step: int, n: int | None, order: int,
               cap: int | None = None) -> QSeries:
    """``(a q^shift; q^step)_n = prod_{i<n} (1 - a q^(shift + step*i))``.

    ``n=None`` is the infinite product, which needs ``shift >= 1`` and
    ``step >= 1`` so that all but finitely many factors are 1 mod q^(N+1).
    """
    a = _as_poly(coeff)
    if n is None:
        if shift < 1 or step < 1:
            raise NonConvergent("infinite q-Pochhammer needs a positive q-power in every factor")
        n = (order - shift) // step + 1 if shift <= order else 0
    out = QSeries.one(order, cap)
    for i in range(n):
        e = shift + step * i
        if e > order:
            if step >= 1 and shift >= 0:
                break
            continue
        factor = [ZERO] * (order + 1)
        factor[0] = ONE
        factor[e] = factor[e] - a
        out = out * QSeries(factor, order, cap)
    return out


def qpow_series(k: int, order: int, coeff: Coeff = 1, cap: int | None = None) -> QSeries:
    return QSeries.monomial(k, order, coeff, cap)


def theta_triangular(order: int) -> QSeries:
    """``sum_{n>=0} (-q)^(n(n+1)/2)``."""
    out = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        k = n * (n + 1) // 2
        out[k] = (-1) ** k
        n += 1
    return QSeries(out, order)


def pentagonal_series(order: int) -> QSeries:
    """``sum_{m in Z} q^(m(3m-1)/2)`` (no signs)."""
    out = [0] * (order + 1)
    m = 0
    while True:
        hit = False
        for mm in ((m, -m) if m else (0,)):
            k = mm * (3 * mm - 1) // 2
            if k <= order:
                out[k] += 1
                hit = True
        if not hit:
            break
        m += 1
    return QSeries(out, order)


__all__ = [
    "QSeries", "EtaFactor", "eta_pow", "one_plus_pow", "eta_product", "pochhammer",
    "series_add", "series_mul", "series_neg", "series_inv", "rational_str",
    "OrderMismatch", "NonUnitConstant", "DegreeCapExceeded", "NonConvergent",
]
