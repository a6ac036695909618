"""Exact rationals and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction` (always in lowest terms, positive
denominator).  :class:`Poly` is an immutable dense polynomial in a single
formal variable; the same type carries ``t`` in the hook identities and ``z``
in the bivariate generating functions.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational_str(x: Scalar) -> str:
    """Serialize as ``"num/den"``, dropping the denominator when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


class Poly:
    """Dense polynomial with rational coefficients, ``coeffs[k]`` multiplies ``x**k``.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # coeffs already Fractions with non-zero leading term
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def var(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else _ZERO

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly._raw(tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # product of leading terms is non-zero over a field
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            raise TypeError("Poly division is only by scalars")
        if not other:
            raise ZeroDivisionError("division of Poly by zero")
        inv = 1 / Fraction(other)
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a Poly")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: Scalar) -> Fraction:
        return self.eval(x)

    def eval(self, x: Scalar) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def to_json(self) -> dict:
        """Exponent -> ``"num/den"`` map, omitting zero coefficients."""
        return {str(k): rational_str(c) for k, c in enumerate(self.coeffs) if c}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        if not data:
            return ZERO
        deg = max(int(k) for k in data)
        cs = [_ZERO] * (deg + 1)
        for k, v in data.items():
            cs[int(k)] = Fraction(v)
        return cls(cs)

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = rational_str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{rational_str(mag)}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.format()})"


ZERO = Poly._raw(())
ONE = Poly._raw((_ONE,))
T = Poly._raw((_ZERO, _ONE))


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, x: Scalar) -> Fraction:
    return p.eval(x)


def gen_binom(e: Poly, k: int) -> Poly:
    """Generalized binomial coefficient ``e (e-1) ... (e-k+1) / k!``.

    Computed as a falling-factorial product, so ``e`` may be any polynomial.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    e = Poly._coerce(e)
    out = ONE
    for i in range(k):
        out = out * (e - i)
    return out / factorial(k)
