"""Expression parser and canonical pretty-printer for K-valued input.

Grammar (recursive descent, standard precedence):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'i' | 't' | '(' expr ')'

'^' takes a literal nonnegative integer exponent and binds tighter than
unary minus, so -t^2 means -(t^2).  Matrices are written row-major as
[a, b; c, d].  The printer emits canonical text that reparses to the
same value (round-trip law), with the monic-denominator normalization
visible in the output.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, DivisionByZeroFunction, ExprSyntaxError, RaggedRows
from .matrix import MatK
from .ratfunc import Poly, RatFunc
from .scalars import GaussianRational

_SYMBOLS = "+-*/^()[],;"


def tokenize(src: str):
    """List of (kind, value, position); kinds: int, ident, sym."""
    out = []
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and src[pos].isdigit():
                pos += 1
            out.append(("int", int(src[start:pos]), start))
            continue
        if ch.isalpha():
            if ch in ("i", "t"):
                out.append(("ident", ch, pos))
                pos += 1
                continue
            raise ExprSyntaxError(f"unexpected identifier {ch!r}", pos)
        if ch in _SYMBOLS:
            out.append(("sym", ch, pos))
            pos += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    out.append(("end", None, n))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_sym(self, sym: str):
        kind, value, pos = self.next()
        if kind != "sym" or value != sym:
            raise ExprSyntaxError(f"expected {sym!r}", pos)

    # expression grammar -> small tuple AST

    def expr(self):
        node = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.next()
                node = ("bin", value, node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "*/":
                self.next()
                node = ("bin", value, node, self.unary())
            else:
                return node

    def unary(self):
        kind, value, _ = self.peek()
        if kind == "sym" and value == "-":
            self.next()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.next()
            ekind, evalue, epos = self.next()
            if ekind != "int":
                raise ExprSyntaxError("exponent must be a nonnegative integer literal", epos)
            node = ("pow", node, evalue)
        return node

    def atom(self):
        kind, value, pos = self.next()
        if kind == "int":
            return ("int", value)
        if kind == "ident":
            return (value,)
        if kind == "sym" and value == "(":
            node = self.expr()
            self.expect_sym(")")
            return node
        raise ExprSyntaxError("expected a number, i, t or parenthesized expression", pos)

    # matrices

    def matrix(self):
        self.expect_sym("[")
        rows = [[self.expr()]]
        while True:
            kind, value, pos = self.next()
            if kind == "sym" and value == ",":
                rows[-1].append(self.expr())
            elif kind == "sym" and value == ";":
                rows.append([self.expr()])
            elif kind == "sym" and value == "]":
                break
            else:
                raise ExprSyntaxError("expected ',', ';' or ']'", pos)
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise RaggedRows("matrix rows have different lengths")
        return rows

    def finish(self):
        kind, _, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError("trailing input", pos)


def eval_expr(node) -> RatFunc:
    """Evaluate an expression tree to a canonical RatFunc."""
    tag = node[0]
    if tag == "int":
        return RatFunc.const(node[1])
    if tag == "i":
        return RatFunc.const(GaussianRational(0, 1))
    if tag == "t":
        return RatFunc.t()
    if tag == "neg":
        return -eval_expr(node[1])
    if tag == "pow":
        return eval_expr(node[1]) ** node[2]
    if tag == "bin":
        _, op, left, right = node
        lhs = eval_expr(left)
        rhs = eval_expr(right)
        if op == "+":
            return lhs + rhs
        if op == "-":
            return lhs - rhs
        if op == "*":
            return lhs * rhs
        try:
            return lhs / rhs
        except DivisionByZero:
            raise DivisionByZeroFunction("denominator simplifies to the zero function") from None
    raise ValueError(f"bad expression node {node!r}")


def parse_expr(src: str):
    p = _Parser(src)
    node = p.expr()
    p.finish()
    return node


def parse_ratfunc(src: str) -> RatFunc:
    return eval_expr(parse_expr(src))


def parse_gaussian(src: str) -> GaussianRational:
    value = parse_ratfunc(src)
    if not value.is_constant():
        raise ExprSyntaxError("expected a constant (no t allowed)", 0)
    return value.constant_value()


def parse_matrix(src: str) -> MatK:
    p = _Parser(src)
    rows = p.matrix()
    p.finish()
    return MatK.from_rows([[eval_expr(e) for e in row] for row in rows])


# -- canonical printing ------------------------------------------------------


def _format_fraction(f: Fraction) -> str:
    return str(f)


def format_gaussian(g: GaussianRational) -> str:
    re, im = g.re, g.im
    if im == 0:
        return _format_fraction(re)
    if im == 1:
        im_str = "i"
    elif im == -1:
        im_str = "-i"
    else:
        im_str = f"{_format_fraction(im)}*i"
    if re == 0:
        return im_str
    if im < 0:
        mag = "i" if im == -1 else f"{_format_fraction(-im)}*i"
        return f"{_format_fraction(re)} - {mag}"
    return f"{_format_fraction(re)} + {im_str}"


def _term_pieces(c: GaussianRational, k: int):
    """(is_negative, text) for the monomial c * t^k, text without sign."""
    mono = None if k == 0 else ("t" if k == 1 else f"t^{k}")
    if c.im == 0:
        neg = c.re < 0
        mag = abs(c.re)
        if mono is None:
            return neg, _format_fraction(mag)
        if mag == 1:
            return neg, mono
        return neg, f"{_format_fraction(mag)}*{mono}"
    if c.re == 0:
        neg = c.im < 0
        mag = abs(c.im)
        coeff = "i" if mag == 1 else f"{_format_fraction(mag)}*i"
        if mono is None:
            return neg, coeff
        return neg, f"{coeff}*{mono}"
    # mixed complex coefficient: parenthesize, keep sign inside
    inner = format_gaussian(c)
    if mono is None:
        return False, f"({inner})"
    return False, f"({inner})*{mono}"


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c.is_zero():
            continue
        neg, text = _term_pieces(c, k)
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


def _poly_is_single_term(p: Poly) -> bool:
    nonzero = [c for c in p.coeffs if not c.is_zero()]
    if len(nonzero) != 1:
        return False
    # a mixed complex coefficient already prints parenthesized
    return True


def format_ratfunc(r: RatFunc) -> str:
    if r.is_constant():
        return format_gaussian(r.constant_value())
    num = format_poly(r.num)
    if r.den.degree == 0:
        return num
    den = format_poly(r.den)
    if not _poly_is_single_term(r.num):
        num = f"({num})"
    if not _poly_is_single_term(r.den):
        den = f"({den})"
    return f"{num}/{den}"


def format_matrix(m: MatK) -> str:
    rows = []
    for i in range(m.rows):
        rows.append(", ".join(format_ratfunc(e) for e in m.row(i)))
    return "[" + "; ".join(rows) + "]"


def format_canonical(x) -> str:
    """Deterministic canonical text for RatFunc, MatK or Gaussian scalars."""
    if isinstance(x, RatFunc):
        return format_ratfunc(x)
    if isinstance(x, MatK):
        return format_matrix(x)
    if isinstance(x, GaussianRational):
        return format_gaussian(x)
    if isinstance(x, Poly):
        return format_poly(x)
    raise TypeError(f"cannot format {type(x).__name__}")
