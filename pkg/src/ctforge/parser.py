"""Expression surface syntax for the CLI.

Grammar (whitespace insignificant):

    expr  := term (('+' | '-') term)*
    term  := pow (('*' | '/') pow)*
    pow   := atom ('^' int)?
    atom  := int | 'q' | var | call | '(' expr ')'
    var   := 'x' digits
    call  := 'qpoch' '(' expr ',' int ')'
    int   := ['-'] digits          (sign only in exponent/count slots)

Parsing produces an AST with source spans; the pretty-printer emits a form
that re-parses to a structurally identical AST.  Lowering targets
FactoredForm: products, powers and quotients of binomial factors, monomials
and q-powers stay factored; sums collapse to Laurent polynomials (and are
re-recognized as binomial factors when they happen to be one, so that
"(1 - q^2*x0/x1)" can be inverted).  Dividing by anything else is a
lowering error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import CTForgeError
from .laurent import Factor, FactoredForm, LaurentPoly, qpoch_qrat, qpochhammer
from .qfield import QRat


class ParseError(CTForgeError, ValueError):
    def __init__(self, message: str, line: int, col: int,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.col = col
        self.expected = expected
        extra = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{line}:{col}: {message}{extra}")


class LoweringError(CTForgeError, ValueError):
    pass


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    span: tuple[int, int] = field(compare=False, kw_only=True, default=(0, 0))


@dataclass(frozen=True)
class IntLit(Node):
    value: int


@dataclass(frozen=True)
class QLit(Node):
    pass


@dataclass(frozen=True)
class Var(Node):
    index: int


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow(Node):
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class QPoch(Node):
    base: "Node"
    count: int


# -- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]\w*)"
                       r"|(?P<sym>[-+*/^(),]))")


@dataclass
class Token:
    kind: str        # int | name | sym | eof
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos:
            bad_at = pos + len(src[pos:]) - len(src[pos:].lstrip())
            if bad_at >= len(src):
                break
            _line, _col = _locate(src, bad_at)
            raise ParseError(f"unexpected character {src[bad_at]!r}", _line, _col)
        for kind in ("int", "name", "sym"):
            text = m.group(kind)
            if text is not None:
                l, c = _locate(src, m.start(kind))
                tokens.append(Token(kind, text, l, c))
                break
        pos = m.end()
    l, c = _locate(src, len(src))
    tokens.append(Token("eof", "", l, c))
    return tokens


def _locate(src: str, pos: int) -> tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    last_nl = src.rfind("\n", 0, pos)
    return line, pos - last_nl


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, expected: tuple[str, ...] = ()):
        t = self.peek()
        what = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{message}, found {what}", t.line, t.col, expected)

    def expect_sym(self, sym: str) -> Token:
        t = self.peek()
        if t.kind == "sym" and t.text == sym:
            return self.advance()
        self.error(f"expected {sym!r}", (sym,))

    # expr := term (('+'|'-') term)*
    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "sym" and self.peek().text in "+-":
            op = self.advance().text
            right = self.term()
            node = BinOp(op, node, right, span=node.span)
        return node

    # term := pow (('*'|'/') pow)*
    def term(self) -> Node:
        node = self.pow()
        while self.peek().kind == "sym" and self.peek().text in "*/":
            op = self.advance().text
            right = self.pow()
            node = BinOp(op, node, right, span=node.span)
        return node

    # pow := atom ('^' int)?
    def pow(self) -> Node:
        node = self.atom()
        if self.peek().kind == "sym" and self.peek().text == "^":
            self.advance()
            node = Pow(node, self.int_lit(), span=node.span)
        return node

    def int_lit(self) -> int:
        sign = 1
        if self.peek().kind == "sym" and self.peek().text == "-":
            self.advance()
            sign = -1
        t = self.peek()
        if t.kind != "int":
            self.error("expected an integer", ("integer",))
        self.advance()
        return sign * int(t.text)

    def atom(self) -> Node:
        t = self.peek()
        span = (t.line, t.col)
        if t.kind == "int":
            self.advance()
            return IntLit(int(t.text), span=span)
        if t.kind == "name":
            if t.text == "q":
                self.advance()
                return QLit(span=span)
            if re.fullmatch(r"x\d+", t.text):
                self.advance()
                return Var(int(t.text[1:]), span=span)
            if t.text == "qpoch":
                self.advance()
                self.expect_sym("(")
                base = self.expr()
                self.expect_sym(",")
                count = self.int_lit()
                self.expect_sym(")")
                return QPoch(base, count, span=span)
            self.error(f"unknown name {t.text!r}", ("q", "xN", "qpoch"))
        if t.kind == "sym" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect_sym(")")
            return node
        self.error("expected an atom", ("integer", "q", "xN", "qpoch", "("))


def parse(src: str) -> Node:
    p = _Parser(src)
    node = p.expr()
    if p.peek().kind != "eof":
        p.error("trailing input")
    return node


# -- pretty printer ------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def print_expr(node: Node, parent_prec: int = 0, right_side: bool = False) -> str:
    if isinstance(node, IntLit):
        s, prec = str(node.value), 4
    elif isinstance(node, QLit):
        s, prec = "q", 4
    elif isinstance(node, Var):
        s, prec = f"x{node.index}", 4
    elif isinstance(node, QPoch):
        s, prec = f"qpoch({print_expr(node.base)}, {node.count})", 4
    elif isinstance(node, Pow):
        # the grammar's pow base is an atom, so anything lower (including
        # another pow) must be parenthesized
        s = f"{print_expr(node.base, 4)}^{node.exponent}"
        prec = 3
    elif isinstance(node, BinOp):
        prec = _PREC[node.op]
        # left-assoc grammar: the right operand needs parens at equal
        # precedence to reparse with the same shape
        left = print_expr(node.left, prec)
        right = print_expr(node.right, prec + 1)
        s = f"{left} {node.op} {right}"
    else:
        raise TypeError(f"not an AST node: {node!r}")
    if prec < parent_prec:
        return f"({s})"
    return s


# -- lowering -------------------------------------------------------------------

def free_vars(node: Node) -> set[int]:
    if isinstance(node, Var):
        return {node.index}
    if isinstance(node, BinOp):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, Pow):
        return free_vars(node.base)
    if isinstance(node, QPoch):
        return free_vars(node.base)
    return set()


def _recognize_factor(nvars: int, lp: LaurentPoly) -> FactoredForm | None:
    """1 - q^s * monomial, spotted inside an expanded sum."""
    if len(lp.terms) != 2:
        return None
    zero = (0,) * nvars
    if zero not in lp.terms or not lp.terms[zero].is_one():
        return None
    (mono, coeff), = [(k, v) for k, v in lp.terms.items() if k != zero]
    if not any(mono):
        return None
    neg = -coeff
    # must be a plain q-power: single-term num and den, coefficient 1
    if len(neg.num.c) != 1 or len(neg.den.c) != 1:
        return None
    (en, cn), = neg.num.c.items()
    (ed, cd), = neg.den.c.items()
    if cn != 1 or cd != 1 or (en and ed):
        return None
    return FactoredForm(nvars, factors=(Factor(en - ed, mono),))


def lower(node: Node, nvars: int | None = None) -> FactoredForm:
    """Lower an AST to a FactoredForm over nvars variables."""
    if nvars is None:
        fv = free_vars(node)
        nvars = max(fv) + 1 if fv else 1
    return _lower(node, nvars)


def _as_poly(ff: FactoredForm, node: Node) -> LaurentPoly:
    if ff.denominator_factors():
        raise LoweringError(
            f"at {node.span[0]}:{node.span[1]}: sums may not contain "
            "unexpanded denominators")
    return ff.expand_exact()


def _lower(node: Node, nvars: int) -> FactoredForm:
    if isinstance(node, IntLit):
        return FactoredForm.from_scalar(nvars, QRat.from_int(node.value))
    if isinstance(node, QLit):
        return FactoredForm.from_scalar(nvars, QRat.qpow(1))
    if isinstance(node, Var):
        return FactoredForm.monomial(nvars, {node.index: 1})
    if isinstance(node, Pow):
        base = _lower(node.base, nvars)
        return _pow(base, node.exponent, node)
    if isinstance(node, QPoch):
        base = _lower(node.base, nvars)
        if base.poly is not None or base.factors:
            raise LoweringError(
                f"at {node.span[0]}:{node.span[1]}: qpoch base must be a "
                "monomial times a power of q")
        qshift = _as_qpower(base.scalar, node)
        if any(base.mono):
            return qpochhammer(nvars, base.mono, node.count, qshift=qshift)
        return FactoredForm.from_scalar(nvars, qpoch_qrat(qshift, node.count))
    if isinstance(node, BinOp):
        left = _lower(node.left, nvars)
        right = _lower(node.right, nvars)
        if node.op == "*":
            return left * right
        if node.op == "/":
            return left * _pow(right, -1, node)
        lp = _as_poly(left, node)
        rp = _as_poly(right, node)
        total = lp + rp if node.op == "+" else lp - rp
        factor = _recognize_factor(nvars, total)
        if factor is not None:
            return factor
        return FactoredForm(nvars, poly=total)
    raise TypeError(f"not an AST node: {node!r}")


def _pow(ff: FactoredForm, e: int, node: Node) -> FactoredForm:
    if e < 0 and ff.poly is not None:
        raise LoweringError(
            f"at {node.span[0]}:{node.span[1]}: division by something that "
            "is not a product of binomial factors, monomials and scalars")
    if e < 0 and ff.scalar.is_zero():
        raise LoweringError(
            f"at {node.span[0]}:{node.span[1]}: division by zero")
    return ff ** e


def _as_qpower(scalar: QRat, node: Node) -> int:
    if scalar.is_one():
        return 0
    if len(scalar.num.c) == 1 and len(scalar.den.c) == 1:
        (en, cn), = scalar.num.c.items()
        (ed, cd), = scalar.den.c.items()
        if cn == 1 and cd == 1 and not (en and ed):
            return en - ed
    raise LoweringError(
        f"at {node.span[0]}:{node.span[1]}: qpoch base scalar must be a "
        "power of q")
