"""Nonlinearity and exact-solution expressions.

The grammar accepted by :func:`parse`:

* numbers: decimal and scientific (``0.5``, ``1e-3``, ``.25``)
* variables: ``x``, ``y`` (the solution), ``yp`` (its first derivative)
* operators ``+ - * / ^`` and parentheses; functions ``exp(...)``, ``ln(...)``
* precedence, tightest first: unary minus, ``^``, ``*`` ``/``, ``+`` ``-``;
  ``*`` ``/`` and ``+`` ``-`` associate to the left
* the right side of ``^`` must be a numeric literal (optionally negated).
  It may be any real number when the base is the bare variable ``x``;
  otherwise it must be an integer.

Expressions evaluate over plain floats (:func:`eval_real`) and over the
truncated decomposition ring (:func:`eval_lambda`).  ASTs are immutable and
compare structurally.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from . import lambda_ring as lr
from .errors import (
    ComputeError,
    DivisionByZero,
    DomainError,
    LogOfNonPositive,
    OrderMismatch,
    ParseError,
    UnsupportedPower,
)
from .lambda_ring import LambdaSeries
from .series import GPSeries


# --- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Constant:
    value: float


@dataclass(frozen=True)
class Var:
    name: str  # "x", "y" or "yp"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class PowInt:
    base: "Expr"
    power: int


@dataclass(frozen=True)
class PowXReal:
    """The bare variable x raised to an arbitrary real exponent."""

    exponent: float


@dataclass(frozen=True)
class Exp:
    arg: "Expr"


@dataclass(frozen=True)
class Ln:
    arg: "Expr"


Expr = Union[Constant, Var, Neg, Add, Sub, Mul, Div, PowInt, PowXReal, Exp, Ln]

X = Var("x")
Y = Var("y")
YP = Var("yp")


# --- parsing --------------------------------------------------------------------

_NUMBER_RE = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.source) and self.source[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.source[self.pos] if self.pos < len(self.source) else ""

    def _expect(self, ch: str) -> None:
        if self._peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _number(self) -> float:
        self._skip_ws()
        m = _NUMBER_RE.match(self.source, self.pos)
        if m is None:
            raise ParseError("expected a number", self.pos)
        self.pos = m.end()
        return float(m.group())

    def expression(self) -> Expr:
        node = self.term()
        while True:
            op = self._peek()
            if op == "+":
                self.pos += 1
                node = Add(node, self.term())
            elif op == "-":
                self.pos += 1
                node = Sub(node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.power()
        while True:
            op = self._peek()
            if op == "*":
                self.pos += 1
                node = Mul(node, self.power())
            elif op == "/":
                self.pos += 1
                node = Div(node, self.power())
            else:
                return node

    def power(self) -> Expr:
        base = self.unary()
        if self._peek() != "^":
            return base
        self.pos += 1
        self._skip_ws()
        exp_pos = self.pos
        negate = False
        if self._peek() == "-":
            negate = True
            self.pos += 1
        value = self._number()
        if negate:
            value = -value
        if base == X:
            return PowXReal(value)
        if value != round(value):
            raise UnsupportedPower(
                f"exponent {value:g} requires the base to be the bare variable x",
                exp_pos,
            )
        return PowInt(base, int(round(value)))

    def unary(self) -> Expr:
        if self._peek() == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            node = self.expression()
            self._expect(")")
            return node
        if ch.isdigit() or ch == ".":
            return Constant(self._number())
        m = _IDENT_RE.match(self.source, self.pos)
        if m is None:
            raise ParseError(f"unexpected character {ch!r}" if ch else "unexpected end of input", self.pos)
        name = m.group()
        start = self.pos
        self.pos = m.end()
        if name in ("x", "y", "yp"):
            return Var(name)
        if name in ("exp", "ln"):
            self._expect("(")
            arg = self.expression()
            self._expect(")")
            return Exp(arg) if name == "exp" else Ln(arg)
        raise ParseError(f"unknown identifier {name!r}", start)


def parse(source: str) -> Expr:
    """Parse expression source text into an AST.

    Raises:
        ParseError: on any grammar violation, with the offending position.
        UnsupportedPower: non-integer exponent on a base other than ``x``.
    """
    p = _Parser(source)
    node = p.expression()
    p._skip_ws()
    if p.pos != len(source):
        raise ParseError(f"trailing input {source[p.pos:]!r}", p.pos)
    return node


# --- printing -------------------------------------------------------------------

_ADD, _MUL, _POW, _UNARY, _ATOM = 1, 2, 3, 4, 5


def _fmt(e: Expr) -> tuple[str, int]:
    if isinstance(e, Constant):
        if e.value < 0:
            return f"-{-e.value!r}", _UNARY
        return repr(e.value), _ATOM
    if isinstance(e, Var):
        return e.name, _ATOM
    if isinstance(e, Neg):
        text, level = _fmt(e.arg)
        if level < _UNARY:
            text = f"({text})"
        return f"-{text}", _UNARY
    if isinstance(e, (Add, Sub)):
        op = "+" if isinstance(e, Add) else "-"
        lt, ll = _fmt(e.left)
        rt, rl = _fmt(e.right)
        if ll < _ADD:
            lt = f"({lt})"
        if rl <= _ADD:
            rt = f"({rt})"
        return f"{lt} {op} {rt}", _ADD
    if isinstance(e, (Mul, Div)):
        op = "*" if isinstance(e, Mul) else "/"
        lt, ll = _fmt(e.left)
        rt, rl = _fmt(e.right)
        if ll < _MUL:
            lt = f"({lt})"
        if rl <= _MUL:
            rt = f"({rt})"
        return f"{lt}{op}{rt}", _MUL
    if isinstance(e, PowInt):
        bt, bl = _fmt(e.base)
        if bl < _UNARY:
            bt = f"({bt})"
        return f"{bt}^{e.power}", _POW
    if isinstance(e, PowXReal):
        return f"x^{e.exponent!r}", _POW
    if isinstance(e, Exp):
        return f"exp({_fmt(e.arg)[0]})", _ATOM
    if isinstance(e, Ln):
        return f"ln({_fmt(e.arg)[0]})", _ATOM
    raise TypeError(f"not an expression node: {e!r}")


def to_source(e: Expr) -> str:
    """Render an AST back to grammar-conformant source text."""
    return _fmt(e)[0]


def free_vars(e: Expr) -> set[str]:
    """The set of variable names ({'x', 'y', 'yp'}) the expression mentions."""
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, PowXReal):
        return {"x"}
    if isinstance(e, (Constant,)):
        return set()
    if isinstance(e, (Neg, Exp, Ln)):
        return free_vars(e.arg)
    if isinstance(e, PowInt):
        return free_vars(e.base)
    if isinstance(e, (Add, Sub, Mul, Div)):
        return free_vars(e.left) | free_vars(e.right)
    raise TypeError(f"not an expression node: {e!r}")


# --- evaluation over floats -------------------------------------------------------

def eval_real(e: Expr, x: float, y: float = 0.0, yp: float = 0.0) -> float:
    """IEEE double evaluation at the point (x, y, yp).

    Raises:
        DivisionByZero, LogOfNonPositive, DomainError: on domain violations.
    """
    if isinstance(e, Constant):
        return e.value
    if isinstance(e, Var):
        return {"x": x, "y": y, "yp": yp}[e.name]
    if isinstance(e, Neg):
        return -eval_real(e.arg, x, y, yp)
    if isinstance(e, Add):
        return eval_real(e.left, x, y, yp) + eval_real(e.right, x, y, yp)
    if isinstance(e, Sub):
        return eval_real(e.left, x, y, yp) - eval_real(e.right, x, y, yp)
    if isinstance(e, Mul):
        return eval_real(e.left, x, y, yp) * eval_real(e.right, x, y, yp)
    if isinstance(e, Div):
        denom = eval_real(e.right, x, y, yp)
        if denom == 0.0:
            raise DivisionByZero(f"in {to_source(e)!r}")
        return eval_real(e.left, x, y, yp) / denom
    if isinstance(e, PowInt):
        base = eval_real(e.base, x, y, yp)
        if e.power < 0 and base == 0.0:
            raise DivisionByZero(f"0^{e.power} in {to_source(e)!r}")
        return base ** e.power
    if isinstance(e, PowXReal):
        try:
            return math.pow(x, e.exponent)
        except ValueError:
            raise DomainError(f"x^{e.exponent:g} undefined at x = {x:g}") from None
    if isinstance(e, Exp):
        return math.exp(eval_real(e.arg, x, y, yp))
    if isinstance(e, Ln):
        v = eval_real(e.arg, x, y, yp)
        if v <= 0.0:
            raise LogOfNonPositive(f"ln({v:g}) in {to_source(e)!r}")
        return math.log(v)
    raise TypeError(f"not an expression node: {e!r}")


# --- evaluation over the decomposition ring ----------------------------------------

def eval_lambda(
    e: Expr, y_lambda: LambdaSeries, yp_lambda: LambdaSeries
) -> LambdaSeries:
    """Push the expression through the truncated decomposition ring.

    ``x`` maps to the first-power monomial at parameter order zero; ``y`` and
    ``yp`` map to the supplied ring elements.  Ring errors are re-raised with
    the offending subexpression appended.
    """
    if y_lambda.order != yp_lambda.order:
        raise OrderMismatch(
            f"y and y' lifts disagree: {y_lambda.order} vs {yp_lambda.order}"
        )
    return _eval_lambda(e, y_lambda, yp_lambda, y_lambda.order)


def _annotated(err: ComputeError, node: Expr) -> ComputeError:
    return type(err)(f"{err} [in {to_source(node)!r}]")


def _eval_lambda(e: Expr, yl: LambdaSeries, ypl: LambdaSeries, order: int) -> LambdaSeries:
    if isinstance(e, Constant):
        return LambdaSeries.constant(e.value, order)
    if isinstance(e, Var):
        if e.name == "x":
            return LambdaSeries.from_gpseries(GPSeries.monomial(1.0, 1.0), order)
        return yl if e.name == "y" else ypl
    if isinstance(e, PowXReal):
        return LambdaSeries.from_gpseries(GPSeries.monomial(1.0, e.exponent), order)
    if isinstance(e, Neg):
        return lr.ring_scale(_eval_lambda(e.arg, yl, ypl, order), -1.0)
    if isinstance(e, Add):
        return lr.ring_add(
            _eval_lambda(e.left, yl, ypl, order), _eval_lambda(e.right, yl, ypl, order)
        )
    if isinstance(e, Sub):
        return lr.ring_sub(
            _eval_lambda(e.left, yl, ypl, order), _eval_lambda(e.right, yl, ypl, order)
        )
    if isinstance(e, Mul):
        return lr.ring_mul(
            _eval_lambda(e.left, yl, ypl, order), _eval_lambda(e.right, yl, ypl, order)
        )
    if isinstance(e, Div):
        num = _eval_lambda(e.left, yl, ypl, order)
        den = _eval_lambda(e.right, yl, ypl, order)
        try:
            return lr.ring_mul(num, lr.ring_recip(den))
        except ComputeError as err:
            raise _annotated(err, e) from err
    if isinstance(e, PowInt):
        base = _eval_lambda(e.base, yl, ypl, order)
        try:
            return lr.ring_powi(base, e.power)
        except ComputeError as err:
            raise _annotated(err, e) from err
    if isinstance(e, Exp):
        arg = _eval_lambda(e.arg, yl, ypl, order)
        try:
            return lr.ring_exp(arg)
        except ComputeError as err:
            raise _annotated(err, e) from err
    if isinstance(e, Ln):
        arg = _eval_lambda(e.arg, yl, ypl, order)
        try:
            return lr.ring_ln(arg)
        except ComputeError as err:
            raise _annotated(err, e) from err
    raise TypeError(f"not an expression node: {e!r}")
