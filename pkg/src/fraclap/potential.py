"""Mini-language for potentials V(x): parse, evaluate, pretty-print.

Grammar (LL(1), no implicit multiplication):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('-')* power
    power  := atom ('^' power)?
    atom   := number | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'

'^' is right-associative and binds above '*' and '/'; unary minus binds
below '^', so -x^2 means -(x^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EvaluationError, ParseError

FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "abs": abs,
    "sqrt": math.sqrt,
}


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Constant:
    name: str  # only 'pi'


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    arg: object


@dataclass(frozen=True)
class PotentialExpr:
    """A parsed potential; evaluable at any real x."""

    ast: object
    source: str

    def evaluate(self, x: float) -> float:
        return _eval_node(self.ast, x)

    __call__ = evaluate


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'name', 'op', 'lparen', 'rparen', 'end'
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit() or ch == ".":
            j = i
            while j < n and (source[j].isdigit() or source[j] == "."):
                j += 1
            if j < n and source[j] in "eE":
                k = j + 1
                if k < n and source[k] in "+-":
                    k += 1
                if k < n and source[k].isdigit():
                    j = k
                    while j < n and source[j].isdigit():
                        j += 1
            text = source[i:j]
            try:
                float(text)
            except ValueError:
                raise ParseError(f"malformed number {text!r}", i)
            tokens.append(_Token("num", text, i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and source[j].isalnum():
                j += 1
            tokens.append(_Token("name", source[i:j], i))
            i = j
        elif ch in "+-*/^":
            tokens.append(_Token("op", ch, i))
            i += 1
        elif ch == "(":
            tokens.append(_Token("lparen", ch, i))
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.cur
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.cur.kind == "op" and self.cur.text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        negations = 0
        while self.cur.kind == "op" and self.cur.text == "-":
            self.advance()
            negations += 1
        node = self.power()
        for _ in range(negations):
            node = Neg(node)
        return node

    def power(self):
        base = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            self.advance()
            return BinOp("^", base, self.power())
        return base

    def atom(self):
        tok = self.cur
        if tok.kind == "num":
            self.advance()
            return Number(float(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text == "x":
                return Variable()
            if tok.text == "pi":
                return Constant("pi")
            if tok.text in FUNCTIONS:
                if self.cur.kind != "lparen":
                    raise ParseError(
                        f"function {tok.text!r} needs parentheses", self.cur.pos
                    )
                self.advance()
                arg = self.expr()
                if self.cur.kind != "rparen":
                    raise ParseError("unbalanced parentheses", self.cur.pos)
                self.advance()
                return Call(tok.text, arg)
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos)
        if tok.kind == "lparen":
            self.advance()
            node = self.expr()
            if self.cur.kind != "rparen":
                raise ParseError("unbalanced parentheses", self.cur.pos)
            self.advance()
            return node
        raise ParseError(f"expected a value, got {tok.text or 'end of input'!r}", tok.pos)


def parse(source: str) -> PotentialExpr:
    """Parse a potential expression; errors carry a character offset."""
    if not source or not source.strip():
        raise ParseError("empty expression", 0)
    parser = _Parser(_tokenize(source))
    ast = parser.expr()
    if parser.cur.kind != "end":
        raise ParseError(f"trailing input {parser.cur.text!r}", parser.cur.pos)
    return PotentialExpr(ast=ast, source=source)


def _eval_node(node, x: float) -> float:
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Variable):
        return x
    if isinstance(node, Constant):
        return math.pi
    if isinstance(node, Neg):
        return -_eval_node(node.child, x)
    if isinstance(node, Call):
        arg = _eval_node(node.arg, x)
        if node.name == "sqrt" and arg < 0:
            raise EvaluationError(f"sqrt of negative value {arg!r}", x)
        try:
            return FUNCTIONS[node.name](arg)
        except (ValueError, OverflowError) as exc:
            raise EvaluationError(f"{node.name} failed: {exc}", x)
    if isinstance(node, BinOp):
        a = _eval_node(node.left, x)
        b = _eval_node(node.right, x)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "/":
            if b == 0:
                raise EvaluationError("division by zero", x)
            return a / b
        # '^': a negative base requires an integer exponent to stay real
        if a < 0 and b != int(b):
            raise EvaluationError(
                f"negative base {a!r} with non-integer exponent {b!r}", x
            )
        try:
            return float(a**b)
        except (OverflowError, ZeroDivisionError) as exc:
            raise EvaluationError(f"power failed: {exc}", x)
    raise TypeError(f"not an AST node: {node!r}")  # pragma: no cover


def evaluate(expr: PotentialExpr, x: float) -> float:
    """Evaluate a parsed potential at x."""
    return expr.evaluate(x)


def to_source(expr: PotentialExpr | object) -> str:
    """Pretty-print an AST; re-parsing the output gives an identical tree."""
    node = expr.ast if isinstance(expr, PotentialExpr) else expr
    return _print_node(node)


def _print_node(node, parent_prec: int = 0) -> str:
    # precedence levels: '+-' 1, '*/' 2, unary minus 3, '^' 4
    if isinstance(node, Number):
        text = repr(node.value)
        return text[:-2] if text.endswith(".0") else text
    if isinstance(node, Variable):
        return "x"
    if isinstance(node, Constant):
        return node.name
    if isinstance(node, Neg):
        inner = f"-{_print_node(node.child, 3)}"
        return f"({inner})" if parent_prec > 3 else inner
    if isinstance(node, Call):
        return f"{node.name}({_print_node(node.arg)})"
    prec = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}[node.op]
    # left operand of '^' must be an atom; right-associativity needs the
    # left side parenthesized at equal precedence for '^', the right side
    # for the left-associative operators
    if node.op == "^":
        left = _print_node(node.left, 5)
        right = _print_node(node.right, prec)
    else:
        left = _print_node(node.left, prec)
        right = _print_node(node.right, prec + 1)
    text = f"{left} {node.op} {right}"
    return f"({text})" if parent_prec > prec else text
