"""Expression language for the command line.

::

    expr    := ['+'|'-'] chain (('+'|'-') chain)*
    chain   := operand (OP operand)*          OP is one of  <  >  .  *
    operand := primary ('*' operand)?         when primary is a scalar
    primary := '(' expr ')' | 'd' '(' expr ')' | literal | scalar

The four products are non-associative as syntax: a chain with two or more
operators is rejected unless every operator is ``*`` (the associative
``⋆_q``), which is then read left to right with a note.

Literals depend on the model: Schröder trees ``V[x^(0),y^(1)](|,|,|)``,
binary trees ``B[x^(0)](|,|)``, words ``x^(0)|y^(0)z^(1)`` (or
``(x^(0))@(y^(0))``), and diagonal elements ``e[3]``.  Scalars are
integers, ``p/r``, ``lam``, ``q`` and powers such as ``lam^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import binary, schroeder
from .diffpoly import DiffVar, Monomial
from .lincomb import LinComb
from .qshuffle import QShuffleAlgebra, Word
from .scalars import LAM, Q, Scalar
from .targets import DiagonalAlgebra, DiagonalElement, TargetConfig

MODELS = ("schroeder", "binary", "qshuffle", "diagonal")
OPS = ("<", ">", ".", "*")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1, expected=()):
        self.message, self.line, self.col, self.expected = message, line, col, tuple(expected)
        text = f"{message} (line {line}, column {col})"
        if expected:
            text += f"; expected one of: {', '.join(expected)}"
        super().__init__(text)


class ExprTypeError(ParseError):
    pass


# tokens ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<tensor>\(tensor\))"
    r"|(?P<punct>[()\[\],|<>.*+\-/^@])"
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        text = m.group()
        if kind == "ws":
            for i, ch in enumerate(text):
                if ch == "\n":
                    line, line_start = line + 1, pos + i + 1
        else:
            if kind == "punct":
                kind = text
            elif kind == "tensor":
                kind = "|"
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


# syntax tree -----------------------------------------------------------

@dataclass
class Node:
    line: int
    col: int

    @property
    def is_scalar(self) -> bool:
        return False


@dataclass
class ScalarLit(Node):
    value: Scalar = None

    @property
    def is_scalar(self) -> bool:
        return True


@dataclass
class Literal(Node):
    value: object = None


@dataclass
class BinOp(Node):
    op: str = ""
    left: Node = None
    right: Node = None


@dataclass
class Diff(Node):
    arg: Node = None


@dataclass
class Scale(Node):
    coef: Node = None
    arg: Node = None



@dataclass
class Sum(Node):
    terms: list = field(default_factory=list)  # (sign, node)


@dataclass
class Expr:
    root: Node
    model: str
    notes: list[str] = field(default_factory=list)


# parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, src: str, model: str):
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}; choose from {MODELS}")
        self.tokens = tokenize(src)
        self.i = 0
        self.model = model
        self.notes: list[str] = []

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail(f"unexpected {self._describe(self.tok)}", [repr(kind)])
        return self.advance()

    def fail(self, message: str, expected=(), tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col, expected)

    @staticmethod
    def _describe(tok: Token) -> str:
        return "end of input" if tok.kind == "end" else repr(tok.text)

    # grammar

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            self.fail("empty expression", ["an expression"])
        root = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self._describe(self.tok)}", ["an operator", "end of input"])
        return Expr(root, self.model, self.notes)

    def expr(self) -> Node:
        start = self.tok
        terms = []
        sign = 1
        if self.tok.kind in "+-":
            sign = -1 if self.advance().kind == "-" else 1
        terms.append((sign, self.chain()))
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
            terms.append((sign, self.chain()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        kinds = {n.is_scalar for _, n in terms}
        if len(kinds) > 1:
            raise ExprTypeError("cannot add a scalar to an algebra element", start.line, start.col)
        if kinds == {True}:
            total = Scalar()
            for sign, n in terms:
                total = total + sign * n.value
            return ScalarLit(start.line, start.col, total)
        return Sum(start.line, start.col, terms)

    def chain(self) -> Node:
        left = self.operand()
        ops: list[Token] = []
        operands = [left]
        while self.tok.kind in OPS:
            ops.append(self.advance())
            operands.append(self.operand())
        if not ops:
            return left
        if len(ops) > 1 and any(t.kind != "*" for t in ops):
            t = ops[1]
            raise ParseError(
                "ambiguous: parenthesize non-associative operations", t.line, t.col
            )
        if len(ops) > 1:
            self.notes.append(
                f"note: '*' chain at line {ops[0].line}, column {ops[0].col} read left-associated"
            )
        node = operands[0]
        for op, right in zip(ops, operands[1:]):
            for side in (node, right):
                if side.is_scalar:
                    raise ExprTypeError(
                        f"operator {op.text!r} needs algebra elements on both sides; "
                        "scalars may only multiply from the left",
                        op.line, op.col,
                    )
            if op.kind == "." and self.model == "binary":
                raise ExprTypeError("the binary-tree model has no '.' product", op.line, op.col)
            node = BinOp(op.line, op.col, op.kind, node, right)
        return node

    def operand(self) -> Node:
        node = self.primary()
        if node.is_scalar and self.tok.kind == "*":
            star = self.advance()
            arg = self.operand()
            if arg.is_scalar:
                return ScalarLit(node.line, node.col, node.value * arg.value)
            node = Scale(star.line, star.col, node, arg)
        return node

    def primary(self) -> Node:
        tok = self.tok
        if tok.kind == "-":
            self.advance()
            arg = self.operand()
            if arg.is_scalar:
                return ScalarLit(tok.line, tok.col, -arg.value)
            return Scale(tok.line, tok.col, ScalarLit(tok.line, tok.col, Scalar.const(-1)), arg)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            if inner.is_scalar:
                return self.power(inner)
            return self.maybe_concat(inner)
        if tok.kind == "int":
            return self.number()
        if tok.kind == "ident":
            nxt = self.peek()
            if tok.text == "d" and nxt.kind == "(":
                self.advance()
                self.advance()
                arg = self.expr()
                self.expect(")")
                if arg.is_scalar:
                    raise ExprTypeError("d(...) needs an algebra element", tok.line, tok.col)
                return Diff(tok.line, tok.col, arg)
            if nxt.kind == "^" and self.peek(2).kind == "(":
                return self.variable_literal()
            if tok.text in ("lam", "q"):
                return self.power(ScalarLit(tok.line, tok.col, LAM if self.advance().text == "lam" else Q))
            if tok.text == "V" and nxt.kind == "[":
                self._require_model("schroeder", tok)
                return Literal(tok.line, tok.col, LinComb.basis(self.schroeder_tree()))
            if tok.text == "B" and nxt.kind == "[":
                self._require_model("binary", tok)
                return Literal(tok.line, tok.col, LinComb.basis(self.binary_tree()))
            if tok.text == "e" and nxt.kind == "[":
                self._require_model("diagonal", tok)
                return Literal(tok.line, tok.col, self.diagonal())
        self.fail(
            f"unexpected {self._describe(tok)}",
            ["a literal", "'('", "'d('", "a scalar"],
        )

    def _require_model(self, model: str, tok: Token) -> None:
        if self.model != model:
            raise ExprTypeError(
                f"{tok.text}[...] literal is not valid under the {self.model} model",
                tok.line, tok.col,
            )

    def number(self) -> ScalarLit:
        tok = self.advance()
        value = Fraction(int(tok.text))
        if self.tok.kind == "/" and self.peek().kind == "int":
            self.advance()
            den = int(self.advance().text)
            if den == 0:
                raise ParseError("division by zero", tok.line, tok.col)
            value /= den
        return self.power(ScalarLit(tok.line, tok.col, Scalar.const(value)))

    def power(self, node: ScalarLit) -> ScalarLit:
        if self.tok.kind == "^" and self.peek().kind == "int":
            self.advance()
            node = ScalarLit(node.line, node.col, node.value ** int(self.advance().text))
        return node

    def maybe_concat(self, node: Node) -> Node:
        """``(x^(0))@(y^(0))``: tensor concatenation of word literals."""
        if self.model != "qshuffle" or self.tok.kind != "@":
            return node
        letters = list(self._single_word(node))
        while self.tok.kind == "@":
            self.advance()
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            letters.extend(self._single_word(inner))
        return Literal(node.line, node.col, LinComb.basis(Word(letters)))

    def _single_word(self, node: Node) -> Word:
        if isinstance(node, Literal) and isinstance(node.value, LinComb) and len(node.value) == 1:
            ((w, c),) = node.value.items()
            if isinstance(w, Word) and c == 1:
                return w
        raise ExprTypeError("'@' joins word literals only", node.line, node.col)

    # literals

    def diffvar(self) -> DiffVar:
        name = self.expect("ident")
        self.expect("^")
        self.expect("(")
        order = self.expect("int")
        self.expect(")")
        return DiffVar(name.text, int(order.text))

    def variable_literal(self) -> Node:
        tok = self.tok
        if self.model != "qshuffle":
            raise ExprTypeError(
                f"bare variable {tok.text}^(...) is not an element of the {self.model} model",
                tok.line, tok.col,
            )
        letters = [self.letter()]
        while self.tok.kind == "|":
            self.advance()
            letters.append(self.letter())
        return Literal(tok.line, tok.col, LinComb.basis(Word(letters)))

    def letter(self) -> Monomial:
        factors = [self.diffvar()]
        while self.tok.kind == "ident" and self.peek().kind == "^" and self.peek(2).kind == "(":
            factors.append(self.diffvar())
        return Monomial(factors)

    def schroeder_tree(self) -> schroeder.Tree:
        head = self.advance()
        self.expect("[")
        decs = [self.diffvar()]
        while self.tok.kind == ",":
            self.advance()
            decs.append(self.diffvar())
        self.expect("]")
        self.expect("(")
        kids = [self.schroeder_child()]
        while self.tok.kind == ",":
            self.advance()
            kids.append(self.schroeder_child())
        self.expect(")")
        try:
            return schroeder.graft(kids, decs)
        except schroeder.GraftingError as err:
            raise ParseError(str(err), head.line, head.col) from None

    def schroeder_child(self) -> schroeder.Tree:
        if self.tok.kind == "|":
            self.advance()
            return schroeder.LEAF
        if self.tok.kind == "ident" and self.tok.text == "V":
            return self.schroeder_tree()
        self.fail(f"unexpected {self._describe(self.tok)}", ["'|'", "'V['"])

    def binary_tree(self) -> binary.BinaryTree:
        self.advance()
        self.expect("[")
        x = self.diffvar()
        self.expect("]")
        self.expect("(")
        left = self.binary_child()
        self.expect(",")
        right = self.binary_child()
        self.expect(")")
        return binary.bgraft(left, x, right)

    def binary_child(self) -> binary.BinaryTree:
        if self.tok.kind == "|":
            self.advance()
            return binary.BLEAF
        if self.tok.kind == "ident" and self.tok.text == "B":
            return self.binary_tree()
        self.fail(f"unexpected {self._describe(self.tok)}", ["'|'", "'B['"])

    def diagonal(self) -> DiagonalElement:
        self.advance()
        self.expect("[")
        grade = self.expect("int")
        self.expect("]")
        if int(grade.text) < 1:
            raise ParseError("grades start at 1", grade.line, grade.col)
        return DiagonalElement.basis(int(grade.text))


def parse_expr(src: str, model: str) -> Expr:
    return _Parser(src, model).parse()


# evaluation ------------------------------------------------------------

class _Ops:
    def __init__(self, model: str, lam0=None, q0=None, s=None):
        self.model = model
        self.lam0, self.q0 = lam0, q0
        if model == "schroeder":
            self.table = {
                "<": schroeder.s_prec, ">": schroeder.s_succ,
                ".": schroeder.s_bullet, "*": schroeder.s_star,
            }
            self.d = schroeder.dX
        elif model == "binary":
            self.table = {
                "<": binary.b_prec, ">": binary.b_succ,
                "*": lambda u, v: binary.b_prec(u, v) + binary.b_succ(u, v),
            }
            self.d = binary.b_dX
        elif model == "qshuffle":
            alg = QShuffleAlgebra()
            self.table = {"<": alg.prec, ">": alg.succ, ".": alg.bullet, "*": alg.star}
            self.d = alg.d
        else:
            cfg = TargetConfig(
                Fraction(1 if lam0 is None else lam0),
                Fraction(1 if q0 is None else q0),
                Fraction(2 if s is None else s),
            )
            alg = DiagonalAlgebra(cfg)
            self.lam0, self.q0 = cfg.lambda0, cfg.q0
            self.table = {
                "<": alg.prec, ">": alg.succ, ".": alg.bullet,
                "*": lambda u, v: alg.prec(u, v) + alg.succ(u, v) + cfg.q0 * alg.bullet(u, v),
            }
            self.d = alg.d

    def scalar(self, value: Scalar):
        if self.model == "diagonal":
            return value.eval(self.lam0, self.q0)
        return value

    def zero(self):
        return DiagonalElement() if self.model == "diagonal" else LinComb()


def eval_expr(expr: Expr, lam0=None, q0=None, s=None):
    """Evaluate to a canonical combination (``DiagonalElement`` for ``diagonal``).

    Symbolic models keep ``lam``/``q`` unless a value is given, in which case
    the result is specialized.
    """
    ops = _Ops(expr.model, lam0, q0, s)

    def go(node: Node):
        if node.is_scalar:
            raise ExprTypeError("expression evaluates to a scalar, not an element",
                                node.line, node.col)
        if isinstance(node, Literal):
            return node.value
        if isinstance(node, BinOp):
            return ops.table[node.op](go(node.left), go(node.right))
        if isinstance(node, Diff):
            return ops.d(go(node.arg))
        if isinstance(node, Scale):
            return ops.scalar(node.coef.value) * go(node.arg)
        if isinstance(node, Sum):
            total = ops.zero()
            for sign, n in node.terms:
                value = go(n)
                total = total + (value if sign == 1 else -value)
            return total
        raise TypeError(f"unknown node {node!r}")

    result = go(expr.root)
    if isinstance(result, LinComb) and (lam0 is not None or q0 is not None):
        result = result.specialize(
            None if lam0 is None else Fraction(lam0), None if q0 is None else Fraction(q0)
        )
    return result


def evaluate(src: str, model: str, lam0=None, q0=None, s=None):
    return eval_expr(parse_expr(src, model), lam0, q0, s)
