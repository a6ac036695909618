"""A small text language for single-variable q-series identities.

Example::

    psum{(t+h^2)/h^2} == prodj((1-q^(1*j)))^(-1*t-1)

``parse`` builds an :class:`Identity` AST, ``unparse`` prints it back and
``compile`` turns it into a pair of series builders.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from .arith import ONE, Poly, T, gen_binom
from .kernels import STATS, Kernel
from .qseries import QSeries, eta_pow, one_plus_pow


class DslError(Exception):
    pass


class DslSyntaxError(DslError):
    def __init__(self, message: str, line: int, col: int, token: str):
        self.line, self.col, self.token = line, col, token
        super().__init__(f"line {line}, col {col}: {message} (got {token!r})")


class SemanticError(DslError):
    pass


# ---------------------------------------------------------------- tokens

@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"\s+|#[^\n]*|(?P<INT>\d+)|(?P<NAME>[A-Za-z_]\w*)|(?P<OP>==|[()\[\]{}^*/+\-,])")


def tokenize(text: str) -> list[Token]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise DslSyntaxError("unexpected character", line, col, text[pos])
        if m.lastgroup:
            out.append(Token(m.lastgroup, m.group(), line, col))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    out.append(Token("EOF", "", line, pos - line_start + 1))
    return out


# ---------------------------------------------------------------- AST

# exponent polynomials in t
@dataclass(frozen=True)
class PInt:
    value: int


@dataclass(frozen=True)
class PVar:
    pass


@dataclass(frozen=True)
class PNeg:
    arg: "PolyNode"


@dataclass(frozen=True)
class PBin:
    op: str  # + - *
    left: "PolyNode"
    right: "PolyNode"


@dataclass(frozen=True)
class PBinom:
    arg: "PolyNode"
    k: int


PolyNode = Union[PInt, PVar, PNeg, PBin, PBinom]


@dataclass(frozen=True)
class Lin:
    """``a*j + b``; ``a == 0`` means no ``j``."""

    a: int
    b: int


@dataclass(frozen=True)
class Factor:
    """``(1 - q^lin)`` or ``(1 + q^lin)``."""

    sign: str
    exp: Lin


@dataclass(frozen=True)
class QPow:
    exp: Lin


@dataclass(frozen=True)
class Literal:
    value: int


@dataclass(frozen=True)
class PSum:
    kernel: Kernel


@dataclass(frozen=True)
class ProdJ:
    body: "ExprNode"


@dataclass(frozen=True)
class Power:
    base: "ExprNode"
    exponent: PolyNode


@dataclass(frozen=True)
class BinOp:
    op: str  # * or /
    left: "ExprNode"
    right: "ExprNode"


ExprNode = Union[Factor, QPow, Literal, PSum, ProdJ, Power, BinOp]


@dataclass(frozen=True)
class Identity:
    lhs: ExprNode
    rhs: ExprNode


# ---------------------------------------------------------------- parser

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise DslSyntaxError(msg, tok.line, tok.col, tok.text or "<end of input>")

    def accept(self, text: str) -> bool:
        if self.tok.kind != "INT" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.tok
        if not self.accept(text):
            self.error(f"expected {text!r}")
        return tok

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "INT":
            self.error("expected an integer")
        self.i += 1
        return int(tok.text)

    def end(self):
        if self.tok.kind != "EOF":
            self.error("unexpected trailing input")

    # identity = expr "==" expr
    def identity(self) -> Identity:
        lhs = self.expr()
        self.expect("==")
        rhs = self.expr()
        self.end()
        return Identity(lhs, rhs)

    def expr(self) -> ExprNode:
        node = self.term()
        while self.tok.text in ("*", "/") and self.tok.kind == "OP":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprNode:
        node = self.atom()
        if self.accept("^"):
            self.expect("(")
            e = self.poly()
            self.expect(")")
            node = Power(node, e)
        return node

    def atom(self) -> ExprNode:
        tok = self.tok
        if tok.kind == "INT":
            return Literal(self.integer())
        if tok.text == "prodj":
            self.i += 1
            self.expect("(")
            body = self.expr()
            self.expect(")")
            return ProdJ(body)
        if tok.text == "psum":
            self.i += 1
            self.expect("{")
            k = self.kernel()
            self.expect("}")
            return PSum(k)
        if tok.text == "q":
            return QPow(self.qpow())
        if tok.text == "(":
            nxt, op = self.peek(1), self.peek(2)
            if nxt.kind == "INT" and nxt.text == "1" and op.text in ("-", "+"):
                self.i += 3
                e = self.qpow()
                self.expect(")")
                return Factor(op.text, e)
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        self.error("expected a factor")

    # qpow = "q" "^" "(" lin ")"
    def qpow(self) -> Lin:
        self.expect("q")
        self.expect("^")
        self.expect("(")
        lead = self.integer()
        if self.accept("*"):
            self.expect("j")
            b = 0
            if self.tok.text in ("+", "-") and self.tok.kind == "OP":
                sign = -1 if self.tok.text == "-" else 1
                self.i += 1
                b = sign * self.integer()
            lin = Lin(lead, b)
        else:
            lin = Lin(0, lead)
        self.expect(")")
        return lin

    # polyT with + - * , unary minus, ints, t, binom(polyT, int)
    def poly(self) -> PolyNode:
        node = self.poly_term()
        while self.tok.kind == "OP" and self.tok.text in ("+", "-"):
            op = self.tok.text
            self.i += 1
            node = PBin(op, node, self.poly_term())
        return node

    def poly_term(self) -> PolyNode:
        node = self.poly_unary()
        while self.tok.kind == "OP" and self.tok.text == "*":
            self.i += 1
            node = PBin("*", node, self.poly_unary())
        return node

    def poly_unary(self) -> PolyNode:
        if self.accept("-"):
            return PNeg(self.poly_unary())
        tok = self.tok
        if tok.kind == "INT":
            return PInt(self.integer())
        if self.accept("t"):
            return PVar()
        if self.accept("binom"):
            self.expect("(")
            arg = self.poly()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            return PBinom(arg, k)
        if self.accept("("):
            node = self.poly()
            self.expect(")")
            return node
        self.error("expected a polynomial in t")

    # kernel = "(" "t" "+" stat ")" "/" den | "(" int "+" stat ")" "/" den
    #        | "(" stat "-" int ")" "/" den | stat "/" den
    def stat(self) -> str:
        tok = self.tok
        if tok.kind != "NAME" or tok.text not in ("csp", "co", "c", "h"):
            self.error("expected a cell statistic")
        self.i += 1
        if self.tok.text == "^" and self.peek().text == "2":
            self.i += 2
            return tok.text + "^2"
        return tok.text

    def den(self) -> str:
        tok = self.tok
        s = self.stat()
        if s not in ("h", "h^2"):
            self.error("denominator must be h or h^2", tok)
        return s

    def kernel(self) -> Kernel:
        if self.accept("("):
            if self.accept("t"):
                self.expect("+")
                num, off = self.stat(), "t"
            elif self.tok.kind == "INT":
                off = self.integer()
                self.expect("+")
                num = self.stat()
            else:
                num = self.stat()
                self.expect("-")
                off = -self.integer()
            self.expect(")")
        else:
            num, off = self.stat(), None
        self.expect("/")
        return Kernel(num, self.den(), off)


def parse(text: str) -> Identity:
    """Parse one identity; raises :class:`DslSyntaxError` with a 1-based position."""
    return _Parser(text).identity()


def parse_kernel(text: str) -> Kernel:
    p = _Parser(text)
    k = p.kernel()
    p.end()
    return k


# ---------------------------------------------------------------- unparse

_PREC = {"+": 1, "-": 1, "*": 2}


def _unparse_poly(node: PolyNode, prec: int = 0) -> str:
    if isinstance(node, PInt):
        return str(node.value)
    if isinstance(node, PVar):
        return "t"
    if isinstance(node, PBinom):
        return f"binom({_unparse_poly(node.arg)},{node.k})"
    if isinstance(node, PNeg):
        return "-" + _unparse_poly(node.arg, 3)
    p = _PREC[node.op]
    s = f"{_unparse_poly(node.left, p)}{node.op}{_unparse_poly(node.right, p + 1)}"
    return f"({s})" if p < prec else s


def _unparse_lin(lin: Lin) -> str:
    if lin.a == 0:
        return str(lin.b)
    tail = "" if lin.b == 0 else f"{lin.b:+d}"
    return f"{lin.a}*j{tail}"


def _unparse_expr(node: ExprNode, wrap: bool = False) -> str:
    if isinstance(node, Factor):
        return f"(1{node.sign}q^({_unparse_lin(node.exp)}))"
    if isinstance(node, QPow):
        return f"q^({_unparse_lin(node.exp)})"
    if isinstance(node, Literal):
        return str(node.value)
    if isinstance(node, PSum):
        return "psum{" + node.kernel.text + "}"
    if isinstance(node, ProdJ):
        return f"prodj({_unparse_expr(node.body)})"
    if isinstance(node, Power):
        base = _unparse_expr(node.base)
        if _needs_parens(node.base):
            base = f"({base})"
        return f"{base}^({_unparse_poly(node.exponent)})"
    s = f"{_unparse_expr(node.left)} {node.op} {_unparse_expr(node.right, True)}"
    return f"({s})" if wrap else s


def _needs_parens(node: ExprNode) -> bool:
    return isinstance(node, (BinOp, Power))


def unparse(ast: Identity) -> str:
    return f"{_unparse_expr(ast.lhs)} == {_unparse_expr(ast.rhs)}"


# ---------------------------------------------------------------- compile

def eval_poly(node: PolyNode) -> Poly:
    if isinstance(node, PInt):
        return Poly.const(node.value)
    if isinstance(node, PVar):
        return T
    if isinstance(node, PNeg):
        return -eval_poly(node.arg)
    if isinstance(node, PBinom):
        return gen_binom(eval_poly(node.arg), node.k)
    a, b = eval_poly(node.left), eval_poly(node.right)
    return a + b if node.op == "+" else a - b if node.op == "-" else a * b


def _linear_factors(node: ExprNode, exponent: Poly) -> list[tuple[Factor, Poly]]:
    """Flatten a ``prodj`` body into ``(factor, exponent)`` pairs."""
    if isinstance(node, Factor):
        if node.exp.a == 0 and node.exp.b == 0:
            raise SemanticError("q^0 factor")
        if node.exp.a == 0:
            raise SemanticError(f"factor {_unparse_expr(node)} inside prodj does not depend on j")
        return [(node, exponent)]
    if isinstance(node, Power):
        return _linear_factors(node.base, exponent * eval_poly(node.exponent))
    if isinstance(node, BinOp):
        right = exponent if node.op == "*" else -exponent
        return _linear_factors(node.left, exponent) + _linear_factors(node.right, right)
    if isinstance(node, PSum):
        raise SemanticError("psum kernel cannot appear inside prodj")
    if isinstance(node, ProdJ):
        raise SemanticError("nested prodj")
    raise SemanticError(f"{_unparse_expr(node)} cannot appear inside prodj")


def _check(node: ExprNode) -> None:
    """Static checks on a side, outside any ``prodj``."""
    if isinstance(node, (Factor, QPow)):
        lin = node.exp
        if lin.a != 0:
            raise SemanticError(f"j used outside prodj in {_unparse_expr(node)}")
        if isinstance(node, Factor) and lin.b == 0:
            raise SemanticError("q^0 factor")
    elif isinstance(node, ProdJ):
        for f, _ in _linear_factors(node.body, ONE):
            lin = f.exp
            if lin.a < 1 or lin.a + lin.b < 1:
                raise SemanticError(f"factor q^({_unparse_lin(lin)}) needs a positive exponent for every j >= 1")
    elif isinstance(node, Power):
        eval_poly(node.exponent)
        _check(node.base)
    elif isinstance(node, BinOp):
        _check(node.left)
        _check(node.right)


def _eval(node: ExprNode, N: int, psum: Callable[[Kernel, int], QSeries]) -> QSeries:
    if isinstance(node, Literal):
        return QSeries([node.value], N)
    if isinstance(node, QPow):
        return QSeries.monomial(node.exp.b, N)
    if isinstance(node, Factor):
        return _factor_power(node.sign, node.exp.b, ONE, N)
    if isinstance(node, PSum):
        return psum(node.kernel, N)
    if isinstance(node, ProdJ):
        return _prodj(_linear_factors(node.body, ONE), N)
    if isinstance(node, Power):
        e = eval_poly(node.exponent)
        if isinstance(node.base, ProdJ):
            return _prodj(_linear_factors(node.base.body, e), N)
        if isinstance(node.base, Factor):
            return _factor_power(node.base.sign, node.base.exp.b, e, N)
        return _eval(node.base, N, psum).power(e)
    left, right = _eval(node.left, N, psum), _eval(node.right, N, psum)
    return left * right if node.op == "*" else left / right


def _factor_power(sign: str, m: int, e: Poly, N: int) -> QSeries:
    return eta_pow(m, e, N) if sign == "-" else one_plus_pow(m, e, N)


def _prodj(factors: list[tuple[Factor, Poly]], N: int) -> QSeries:
    # factor j contributes only while its q-power is <= N
    out = QSeries.one(N)
    for f, e in factors:
        j = 1
        while f.exp.a * j + f.exp.b <= N:
            out = out * _factor_power(f.sign, f.exp.a * j + f.exp.b, e, N)
            j += 1
    return out


def _default_psum(kernel: Kernel, N: int) -> QSeries:
    from .identities import lhs_series
    return lhs_series(kernel, N)


@dataclass(frozen=True)
class Compiled:
    """Two series builders ``lhs(N)`` and ``rhs(N)``."""

    ast: Identity

    def lhs(self, N: int, psum: Callable[[Kernel, int], QSeries] = _default_psum) -> QSeries:
        return _eval(self.ast.lhs, N, psum)

    def rhs(self, N: int, psum: Callable[[Kernel, int], QSeries] = _default_psum) -> QSeries:
        return _eval(self.ast.rhs, N, psum)

    @property
    def kernels(self) -> list[Kernel]:
        return kernels_of(self.ast)

    @property
    def symbolic(self) -> bool:
        """True when any kernel or exponent involves ``t``."""
        return _mentions_t(self.ast.lhs) or _mentions_t(self.ast.rhs)


def kernels_of(ast: Identity) -> list[Kernel]:
    out: list[Kernel] = []

    def walk(node):
        if isinstance(node, PSum):
            if node.kernel not in out:
                out.append(node.kernel)
        elif isinstance(node, ProdJ):
            walk(node.body)
        elif isinstance(node, Power):
            walk(node.base)
        elif isinstance(node, BinOp):
            walk(node.left)
            walk(node.right)

    walk(ast.lhs)
    walk(ast.rhs)
    return out


def _mentions_t(node) -> bool:
    if isinstance(node, PSum):
        return node.kernel.symbolic
    if isinstance(node, ProdJ):
        return _mentions_t(node.body)
    if isinstance(node, Power):
        return _mentions_t(node.base) or not eval_poly(node.exponent).is_const()
    if isinstance(node, BinOp):
        return _mentions_t(node.left) or _mentions_t(node.right)
    return False


def compile(ast: Identity | str) -> Compiled:
    """Check an AST and wrap it as a pair of series builders."""
    if isinstance(ast, str):
        ast = parse(ast)
    _check(ast.lhs)
    _check(ast.rhs)
    return Compiled(ast)


__all__ = [
    "DslError", "DslSyntaxError", "SemanticError", "Token", "tokenize", "parse",
    "parse_kernel", "unparse", "compile", "Compiled", "Identity", "STATS",
]
