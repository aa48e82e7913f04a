# src/la_verifier/harness/dsl.py
"""
A small language for writing identities over the sequence.

    identity := expr "==" expr
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" nat)? | "-" factor
    atom     := rational | symbol | call | "(" expr ")"
    call     := ("LA" | "LAH" | "HPART" | "HS" | "conj") "(" expr ")"
              | "KSHIFT" "(" expr "," expr ")"

Products keep the order they are written in. Arguments of the sequence
accessors are index expressions: integers built from n, u, v, m.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple, Union

from loguru import logger

from la_verifier.algebra.hybrid import EPS, H, I, PSI, Hybrid, hybrid_conj
from la_verifier.config import DEFAULT_SHIFT_MAX, DEFAULT_VAJDA_N_MAX
from la_verifier.errors import DslSyntaxError, IndexOutOfDomain, InvalidParams, UnboundVariable
from la_verifier.harness.context import SequenceContext
from la_verifier.harness.reports import UNDER_TEST
from la_verifier.schemas import SeqParams
from la_verifier.utils import rational_to_str

INDEX_VARS = ("n", "u", "v", "m")
PARAM_SYMBOLS = ("p", "q", "r", "rho", "D")
UNIT_SYMBOLS = {"PSI": PSI, "I": I, "EPS": EPS, "H": H}
FUNCTIONS = {"LA": 1, "LAH": 1, "HPART": 1, "HS": 1, "KSHIFT": 2, "conj": 1}
INDEXED_FUNCTIONS = ("LA", "LAH", "HPART", "HS", "KSHIFT")


# --- AST ---

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple["Node", ...]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Sym, Call, BinOp, Neg, Pow]


@dataclass(frozen=True)
class Identity:
    lhs: Node
    rhs: Node

    def __str__(self) -> str:
        return format_identity(self)


# --- Tokenizer ---

@dataclass(frozen=True)
class Token:
    kind: str  # "number", "name", an operator, or "end"
    text: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == "end":
            return "end of input"
        return f"'{self.text}'"


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(==|[-+*^(),]))")
_WHITESPACE_RE = re.compile(r"\s*")


def tokenize(src: str, line: int = 1) -> List[Token]:
    """Split one or more lines into tokens; `line` numbers the first line."""
    tokens: List[Token] = []
    pos = 0
    line_start = 0
    while True:
        ws = _WHITESPACE_RE.match(src, pos)
        for k in range(pos, ws.end()):
            if src[k] == "\n":
                line += 1
                line_start = k + 1
        pos = ws.end()
        if pos >= len(src):
            tokens.append(Token("end", "", line, pos - line_start + 1))
            return tokens
        match = _TOKEN_RE.match(src, pos)
        column = pos - line_start + 1
        if match is None:
            raise DslSyntaxError(f"unexpected character '{src[pos]}'", line, column)
        number, name, op = match.groups()
        if number is not None:
            tokens.append(Token("number", number, line, column))
        elif name is not None:
            tokens.append(Token("name", name, line, column))
        else:
            tokens.append(Token(op, op, line, column))
        pos = match.end()


# --- Parser ---

_ATOM_START = ("number", "name", "(")
_DESCRIPTIONS = {"number": "number", "name": "name", "end": "end of input"}


class _Parser:
    def __init__(self, tokens: List[Token]) -> None:
        self.tokens = tokens
        self.pos = 0
        self._expected_pos = -1
        self._expected: Set[str] = set()

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _at(self, *kinds: str) -> bool:
        if self.pos != self._expected_pos:
            self._expected_pos = self.pos
            self._expected = set()
        self._expected.update(_DESCRIPTIONS.get(k, f"'{k}'") for k in kinds)
        return self.current.kind in kinds

    def _advance(self) -> Token:
        tok = self.current
        self.pos += 1
        return tok

    def _expect(self, kind: str) -> Token:
        if not self._at(kind):
            self._fail()
        return self._advance()

    def _fail(self, message: Optional[str] = None, token: Optional[Token] = None):
        tok = token or self.current
        expected = self._expected if self._expected_pos == self.pos and token is None else ()
        raise DslSyntaxError(message or f"unexpected {tok.describe()}", tok.line, tok.column, expected)

    def parse_identity(self) -> Identity:
        if self.current.kind == "end":
            self._at(*_ATOM_START, "-")
            self._fail("empty identity")
        lhs = self.parse_expr()
        self._expect("==")
        rhs = self.parse_expr()
        self._expect("end")
        return Identity(lhs, rhs)

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while self._at("+", "-"):
            op = self._advance().kind
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> Node:
        node = self.parse_factor()
        while self._at("*"):
            self._advance()
            node = BinOp("*", node, self.parse_factor())
        return node

    def parse_factor(self) -> Node:
        if self._at("-"):
            self._advance()
            return Neg(self.parse_factor())
        node = self.parse_atom()
        if self._at("^"):
            self._advance()
            tok = self.current
            if not self._at("number") or "/" in tok.text:
                self._expected = {"natural number"}
                self._fail()
            self._advance()
            node = Pow(node, int(tok.text))
        return node

    def parse_atom(self) -> Node:
        if not self._at(*_ATOM_START):
            self._fail()
        tok = self._advance()
        if tok.kind == "number":
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                self._fail("zero denominator in literal", token=tok)
            return Num(Fraction(int(num), int(den) if den else 1))
        if tok.kind == "(":
            node = self.parse_expr()
            self._expect(")")
            return node
        if self.current.kind == "(":
            return self.parse_call(tok)
        return Sym(tok.text)

    def parse_call(self, name: Token) -> Call:
        arity = FUNCTIONS.get(name.text)
        if arity is None:
            self._fail(f"unknown function '{name.text}'", token=name)
        self._advance()
        args = [self.parse_expr()]
        for _ in range(arity - 1):
            self._expect(",")
            args.append(self.parse_expr())
        self._expect(")")
        return Call(name.text, tuple(args))


def parse_identity(src: str, line: int = 1) -> Identity:
    """Parse a single identity; raises DslSyntaxError with position and expected tokens."""
    return _Parser(tokenize(src, line)).parse_identity()


def parse_identities(text: str) -> List[Tuple[int, Identity]]:
    """One identity per non-blank line; '#' starts a comment. Returns (line number, identity) pairs."""
    out: List[Tuple[int, Identity]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        out.append((lineno, parse_identity(body, line=lineno)))
    if not out:
        raise DslSyntaxError("no identities found", 1, 1)
    logger.debug(f"Parsed {len(out)} identities")
    return out


# --- Printer ---

_PREC = {"+": 1, "-": 1, "*": 2}
_NEG_PREC = 3
_POW_PREC = 4
_ATOM_PREC = 5


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _NEG_PREC
    if isinstance(node, Pow):
        return _POW_PREC
    return _ATOM_PREC


def _wrap(node: Node, min_prec: int) -> str:
    text = format_expr(node)
    return f"({text})" if _prec(node) < min_prec else text


def format_expr(node: Node) -> str:
    if isinstance(node, Num):
        return rational_to_str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({', '.join(format_expr(a) for a in node.args)})"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, _NEG_PREC)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _ATOM_PREC)}^{node.exponent}"
    own = _PREC[node.op]
    sep = "*" if node.op == "*" else f" {node.op} "
    # Left-associative: the right operand needs parentheses at equal precedence.
    return f"{_wrap(node.left, own)}{sep}{_wrap(node.right, own + 1)}"


def format_identity(identity: Identity) -> str:
    return f"{format_expr(identity.lhs)} == {format_expr(identity.rhs)}"


# --- Analysis ---

def free_symbols(node: Union[Node, Identity]) -> FrozenSet[str]:
    if isinstance(node, Identity):
        return free_symbols(node.lhs) | free_symbols(node.rhs)
    if isinstance(node, Sym):
        return frozenset((node.name,))
    if isinstance(node, Call):
        return frozenset().union(*(free_symbols(a) for a in node.args))
    if isinstance(node, BinOp):
        return free_symbols(node.left) | free_symbols(node.right)
    if isinstance(node, (Neg, Pow)):
        return free_symbols(node.operand if isinstance(node, Neg) else node.base)
    return frozenset()


def functions_used(node: Union[Node, Identity]) -> FrozenSet[str]:
    if isinstance(node, Identity):
        return functions_used(node.lhs) | functions_used(node.rhs)
    if isinstance(node, Call):
        return frozenset((node.func,)).union(*(functions_used(a) for a in node.args))
    if isinstance(node, BinOp):
        return functions_used(node.left) | functions_used(node.right)
    if isinstance(node, Neg):
        return functions_used(node.operand)
    if isinstance(node, Pow):
        return functions_used(node.base)
    return frozenset()


def validate(node: Union[Node, Identity], index_mode: bool = False) -> None:
    """Raise UnboundVariable for any name that cannot be bound at evaluation time."""
    if isinstance(node, Identity):
        validate(node.lhs)
        validate(node.rhs)
    elif isinstance(node, Sym):
        if index_mode and node.name not in INDEX_VARS:
            raise UnboundVariable(node.name, f"'{node.name}' is not an index variable ({', '.join(INDEX_VARS)})")
        if node.name not in INDEX_VARS and node.name not in PARAM_SYMBOLS and node.name not in UNIT_SYMBOLS:
            raise UnboundVariable(node.name)
    elif isinstance(node, Call):
        for arg in node.args:
            validate(arg, index_mode or node.func in INDEXED_FUNCTIONS)
    elif isinstance(node, BinOp):
        validate(node.left, index_mode)
        validate(node.right, index_mode)
    elif isinstance(node, Neg):
        validate(node.operand, index_mode)
    elif isinstance(node, Pow):
        validate(node.base, index_mode)


def index_variables(identity: Identity) -> Tuple[str, ...]:
    names = free_symbols(identity)
    return tuple(v for v in INDEX_VARS if v in names)


# --- Evaluation ---

@dataclass(frozen=True)
class Verdict:
    holds: bool
    lhs: Any
    rhs: Any


class _Evaluator:
    def __init__(self, ctx: SequenceContext, bindings: Dict[str, int]) -> None:
        self.ctx = ctx
        self.bindings = bindings
        params = ctx.params
        self.scalars = {"p": params.p, "q": params.q, "r": params.r, "rho": params.rho, "D": params.D}

    def index(self, node: Node) -> int:
        value = self.value(node, index_mode=True)
        if isinstance(value, Fraction) and value.denominator != 1:
            raise IndexOutOfDomain(f"index {format_expr(node)} = {value} is not an integer")
        return int(value)

    def checked_index(self, node: Node) -> int:
        k = self.index(node)
        if k < 0:
            raise IndexOutOfDomain(f"index {format_expr(node)} = {k} is negative")
        return k

    def value(self, node: Node, index_mode: bool = False) -> Any:
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Sym):
            return self.symbol(node.name, index_mode)
        if isinstance(node, BinOp):
            left = self.value(node.left, index_mode)
            right = self.value(node.right, index_mode)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            return left * right
        if isinstance(node, Neg):
            return -self.value(node.operand, index_mode)
        if isinstance(node, Pow):
            base = self.value(node.base, index_mode)
            if isinstance(base, Hybrid):
                return base ** node.exponent
            return Fraction(base) ** node.exponent
        return self.call(node)

    def symbol(self, name: str, index_mode: bool) -> Any:
        if name in INDEX_VARS:
            if name not in self.bindings:
                raise UnboundVariable(name)
            return Fraction(self.bindings[name])
        if index_mode:
            raise UnboundVariable(name, f"'{name}' is not an index variable ({', '.join(INDEX_VARS)})")
        if name in self.scalars:
            return self.scalars[name]
        if name in UNIT_SYMBOLS:
            return UNIT_SYMBOLS[name]
        raise UnboundVariable(name)

    def call(self, node: Call) -> Any:
        ctx = self.ctx
        if node.func == "conj":
            value = self.value(node.args[0])
            return hybrid_conj(value) if isinstance(value, Hybrid) else value
        k = self.checked_index(node.args[0])
        if node.func == "LA":
            return ctx.la(k)
        if node.func == "LAH":
            return ctx.lah(k)
        if node.func == "HPART":
            return ctx.hpart_rational(k)
        if node.func == "HS":
            return ctx.hs(k)
        shift = self.index(node.args[1])
        if k + shift < 0:
            raise IndexOutOfDomain(f"KSHIFT reaches index {k + shift}")
        return ctx.kshift(k, shift)


def eval_identity(identity: Identity, params: SeqParams, bindings: Dict[str, int],
                  ctx: Optional[SequenceContext] = None) -> Verdict:
    """Evaluate both sides exactly at one parameter point and index assignment."""
    if ctx is None:
        ctx = SequenceContext(params)
    elif ctx.params != params:
        raise InvalidParams("context was built for different parameters")
    ev = _Evaluator(ctx, bindings)
    lhs = ev.value(identity.lhs)
    rhs = ev.value(identity.rhs)
    return Verdict(lhs == rhs, lhs, rhs)


# --- Checks ---

_DEFAULT_DSL_AXES = {
    "n": tuple(range(DEFAULT_VAJDA_N_MAX + 1)),
    "m": tuple(range(DEFAULT_VAJDA_N_MAX + 1)),
    "u": tuple(range(DEFAULT_SHIFT_MAX + 1)),
    "v": tuple(range(DEFAULT_SHIFT_MAX + 1)),
}


@dataclass(frozen=True)
class DslCheck:
    """A parsed identity run through the same grid runner as the built-in checks."""

    name: str
    identity: Identity
    tier: str = UNDER_TEST
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        validate(self.identity)

    @property
    def index_vars(self) -> Tuple[str, ...]:
        return index_variables(self.identity)

    @property
    def needs_rho(self) -> bool:
        # No DSL function divides by rho; rho = 0 points are evaluated.
        return False

    @property
    def fixed_params(self) -> Optional[SeqParams]:
        return None

    @property
    def has_confirm(self) -> bool:
        return False

    def axis_domain(self, name: str, grid: Any) -> Tuple[int, ...]:
        if name in grid.indices:
            return grid.indices[name]
        return _DEFAULT_DSL_AXES[name]

    def evaluate(self, ctx: SequenceContext, indices: Dict[str, int]):
        verdict = eval_identity(self.identity, ctx.params, indices, ctx)
        return verdict.lhs, verdict.rhs

    def confirm(self, ctx: SequenceContext, indices: Dict[str, int]):
        return None


def load_dsl_checks(text: str, stem: str) -> List[DslCheck]:
    """Checks named dsl/<stem>, or dsl/<stem>-<line> when the file holds several identities."""
    parsed = parse_identities(text)
    if len(parsed) == 1:
        return [DslCheck(f"dsl/{stem}", parsed[0][1], notes=(format_identity(parsed[0][1]),))]
    return [
        DslCheck(f"dsl/{stem}-{lineno}", identity, notes=(format_identity(identity),))
        for lineno, identity in parsed
    ]
