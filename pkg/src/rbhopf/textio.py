"""Text and JSON input/output.

Printed forms are canonical: words as ``x*P(y)``, the unit word as ``1``,
coefficients in ascending powers of ``lambda``, tensor slots separated by
``(x)``.  Terms are ordered by total degree, then by printed word.

Input grammar (whitespace is insignificant)::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := power ("*"? power)*              juxtaposition is the diamond product
    power  := factor ("^" integer)?
    factor := rational | "lambda" | letter | "P" "(" expr ")" | "[" expr "]"
            | "S" "(" expr ")" | "cop" "(" expr ")" | "eps" "(" expr ")"
            | "(" expr ")"

:func:`parse_tensor` additionally accepts ``term "(x)" term`` summands, which
is how :func:`print_tensor2` writes tensors.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .algebra import LinComb, diamond, rb_operator
from .coalgebra import Tensor2, coproduct, counit
from .coeffs import SYMBOLIC, Coeff, WeightMode, format_coeff
from .errors import EvalError, ParseError, UnknownIdentifier
from .words import IDENTIFIER, RESERVED, UNIT, Atom, Bracket, Rbw

# ---------------------------------------------------------------- printing


def print_coeff(c: Coeff) -> str:
    return format_coeff(c)


def print_word(w: Rbw) -> str:
    return str(w)


def _monomial(c: Coeff):
    """``(negative, |c| as text)`` for a single-term coefficient, else ``None``."""
    items = c.items()
    if len(items) != 1:
        return None
    e, r = items[0]
    return r < 0, format_coeff(Coeff({e: abs(r)}))


def _term(c: Coeff, body: Optional[str]):
    """``(negative, text)`` for ``c * body``; ``body=None`` is the unit word."""
    mono = _monomial(c)
    if mono is None:
        text = format_coeff(c)
        if body is None:
            return False, text
        return False, "(%s)*%s" % (text, body)
    neg, mag = mono
    if body is None:
        return neg, mag
    return neg, body if mag == "1" else "%s*%s" % (mag, body)


def _join(terms: Iterable) -> str:
    parts = []
    for neg, text in terms:
        if not parts:
            parts.append("-" + text if neg else text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts) if parts else "0"


def lincomb_key(w: Rbw):
    return w.sort_key()


def tensor_key(pair):
    a, b = pair
    da, db = a.degree().total, b.degree().total
    return (da + db, -da, str(a), str(b))


def print_lincomb(a: LinComb) -> str:
    terms = sorted(a.items(), key=lambda kv: lincomb_key(kv[0]))
    return _join(_term(c, None if w.is_unit() else str(w)) for w, c in terms)


def _tensor_term(pair, c: Coeff):
    left, right = pair
    if left.is_unit():
        mono = _monomial(c)
        if mono is None:
            neg, text = False, "(%s)" % format_coeff(c)
        else:
            neg, text = mono
    else:
        neg, text = _term(c, str(left))
    return neg, "%s (x) %s" % (text, right)


def print_tensor2(t: Tensor2) -> str:
    terms = sorted(t.items(), key=lambda kv: tensor_key(kv[0]))
    return _join(_tensor_term(k, c) for k, c in terms)


def to_text(value) -> str:
    if isinstance(value, Tensor2):
        return print_tensor2(value)
    if isinstance(value, LinComb):
        return print_lincomb(value)
    if isinstance(value, Coeff):
        return print_coeff(value)
    if isinstance(value, Rbw):
        return print_word(value)
    if hasattr(value, "to_text"):
        return value.to_text()
    if hasattr(value, "items"):
        # other sparse values, e.g. three-fold tensors
        parts = [
            _term(c, " (x) ".join(map(str, k)))
            for k, c in sorted(value.items(), key=lambda kv: [w.sort_key() for w in kv[0]])
        ]
        return _join(parts)
    raise TypeError("cannot print %r" % (value,))


# ---------------------------------------------------------------- syntax tree


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = 0


@dataclass(frozen=True)
class Lambda:
    pos: int = 0


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Call:
    fn: str  # one of P, S, cop, eps
    arg: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - *
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = 0


@dataclass(frozen=True)
class TensorOf:
    left: "Expr"
    right: "Expr"
    pos: int = 0


Expr = Union[Num, Lambda, Gen, Call, Neg, BinOp, Pow, TensorOf]

# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<tensor>\(x\))
  | (?P<num>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^()\[\]])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def _spaced(text: str, start: int, end: int) -> bool:
    before = start == 0 or text[start - 1].isspace()
    after = end == len(text) or text[end].isspace()
    return before and after


def tokenize(text: str, tensor: bool = False) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r" % text[pos], pos)
        kind = m.lastgroup
        if kind == "tensor" and not (tensor and _spaced(text, pos, m.end())):
            # "(x)" separates slots only when set off by whitespace, as printed
            m = _TOKEN.match(text, pos, pos + 1)
            kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


_FACTOR_START = {"num", "ident"}


class Parser:
    def __init__(self, text: str, alphabet=None, tensor: bool = False):
        self.text = text
        self.tokens = tokenize(text, tensor)
        self.i = 0
        self.alphabet = None if alphabet is None else frozenset(alphabet)
        self.tensor = tensor

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            what = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            raise ParseError("expected %r, found %s" % (text, what), self.tok.pos)
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr(top=True)
        if self.tok.kind != "eof":
            raise ParseError("unexpected %r" % self.tok.text, self.tok.pos)
        return e

    def expr(self, top: bool = False) -> Expr:
        start = self.tok.pos
        neg = False
        if self.tok.kind == "op" and self.tok.text in "+-":
            neg = self.advance().text == "-"
        e = self.summand(top)
        if neg:
            e = Neg(e, start)
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            e = BinOp(op.text, e, self.summand(top), op.pos)
        return e

    def summand(self, top: bool) -> Expr:
        e = self.term()
        if self.tensor and top:
            t = self.tok
            if t.kind != "tensor":
                raise ParseError("expected '(x)'", t.pos)
            self.advance()
            e = TensorOf(e, self.term(), t.pos)
        return e

    def starts_factor(self) -> bool:
        t = self.tok
        return t.kind in _FACTOR_START or (t.kind == "op" and t.text in "([")

    def term(self) -> Expr:
        e = self.power()
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.advance()
                e = BinOp("*", e, self.power(), t.pos)
            elif self.starts_factor():
                e = BinOp("*", e, self.power(), t.pos)
            else:
                return e

    def power(self) -> Expr:
        e = self.factor()
        if self.tok.kind == "op" and self.tok.text == "^":
            caret = self.advance()
            t = self.tok
            if t.kind != "num" or "/" in t.text:
                raise ParseError("expected a natural-number exponent", t.pos)
            self.advance()
            e = Pow(e, int(t.text), caret.pos)
        return e

    def factor(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.pos)
            return Num(Fraction(int(num), int(den) if den else 1), t.pos)
        if t.kind == "ident":
            self.advance()
            if t.text == "lambda":
                return Lambda(t.pos)
            if t.text in RESERVED:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(t.text, arg, t.pos)
            if self.alphabet is not None and t.text not in self.alphabet:
                raise UnknownIdentifier(t.text, t.pos)
            return Gen(t.text, t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "op" and t.text == "[":
            self.advance()
            e = self.expr()
            self.expect("]")
            return Call("P", e, t.pos)
        what = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError("unexpected %s" % what, t.pos)


def parse(text: str, alphabet=None) -> Expr:
    return Parser(text, alphabet).parse()


def parse_tensor_expr(text: str, alphabet=None) -> Expr:
    return Parser(text, alphabet, tensor=True).parse()


# ---------------------------------------------------------------- evaluation

Value = Union[LinComb, Tensor2]


def _kind(v: Value) -> str:
    return "tensor" if isinstance(v, Tensor2) else "element"


def _mul(a: Value, b: Value, mode: WeightMode, pos: int) -> Value:
    from .coalgebra import tensor2_diamond

    if isinstance(a, LinComb) and isinstance(b, LinComb):
        return diamond(a, b, mode)
    if isinstance(a, Tensor2) and isinstance(b, Tensor2):
        return tensor2_diamond(a, b, mode)
    scalar, other = (a, b) if isinstance(a, LinComb) else (b, a)
    c = scalar.scalar_value()
    if c is None:
        raise EvalError("cannot multiply an algebra element with a tensor (offset %d)" % pos)
    return other.scale(c)


def evaluate(e: Expr, mode: WeightMode = SYMBOLIC) -> Value:
    """Reduce a syntax tree to a :class:`LinComb` or :class:`Tensor2`."""
    if isinstance(e, Num):
        return LinComb.scalar(Coeff.const(e.value))
    if isinstance(e, Lambda):
        return LinComb.scalar(mode.weight())
    if isinstance(e, Gen):
        return LinComb.word(Rbw((Atom(e.name),)))
    if isinstance(e, Neg):
        return -evaluate(e.arg, mode)
    if isinstance(e, BinOp):
        a, b = evaluate(e.left, mode), evaluate(e.right, mode)
        if e.op == "*":
            return _mul(a, b, mode, e.pos)
        if type(a) is not type(b):
            raise EvalError(
                "cannot add %s and %s (offset %d)" % (_kind(a), _kind(b), e.pos)
            )
        return a + b if e.op == "+" else a - b
    if isinstance(e, Pow):
        base = evaluate(e.base, mode)
        out = LinComb.one()
        for _ in range(e.exponent):
            out = _mul(out, base, mode, e.pos)
        return out
    if isinstance(e, TensorOf):
        a, b = evaluate(e.left, mode), evaluate(e.right, mode)
        if not (isinstance(a, LinComb) and isinstance(b, LinComb)):
            raise EvalError("tensor slots must be algebra elements (offset %d)" % e.pos)
        return Tensor2.pure(a, b).specialize(mode)
    if isinstance(e, Call):
        arg = evaluate(e.arg, mode)
        if not isinstance(arg, LinComb):
            raise EvalError("%s(...) needs an algebra element (offset %d)" % (e.fn, e.pos))
        if e.fn == "P":
            return rb_operator(arg)
        if e.fn == "cop":
            return coproduct(arg, mode)
        if e.fn == "eps":
            return LinComb.scalar(counit(arg))
        if e.fn == "S":
            from .hopf import antipode_lin

            return antipode_lin(arg, mode)
    raise TypeError("not an expression node: %r" % (e,))


def uses(e: Expr, names: set) -> bool:
    """Whether any of the functions in ``names`` is called inside ``e``."""
    if isinstance(e, Call):
        return e.fn in names or uses(e.arg, names)
    if isinstance(e, (Neg,)):
        return uses(e.arg, names)
    if isinstance(e, (BinOp, TensorOf)):
        return uses(e.left, names) or uses(e.right, names)
    if isinstance(e, Pow):
        return uses(e.base, names)
    return False


def parse_lincomb(text: str, mode: WeightMode = SYMBOLIC, alphabet=None) -> LinComb:
    v = evaluate(parse(text, alphabet), mode)
    if not isinstance(v, LinComb):
        raise EvalError("expression evaluates to a tensor, not an algebra element")
    return v


def parse_tensor(text: str, mode: WeightMode = SYMBOLIC, alphabet=None) -> Tensor2:
    text = text.strip()
    if text == "0":
        return Tensor2()
    return evaluate(parse_tensor_expr(text, alphabet), mode)


# ---------------------------------------------------------------- JSON


def word_to_json(w: Rbw) -> list:
    return [
        {"atom": it.name} if isinstance(it, Atom) else {"bracket": word_to_json(it.inner)}
        for it in w.items
    ]


def word_from_json(data: list) -> Rbw:
    items = []
    for d in data:
        if set(d) == {"atom"}:
            items.append(Atom(d["atom"]))
        elif set(d) == {"bracket"}:
            items.append(Bracket(word_from_json(d["bracket"])))
        else:
            raise ValueError("bad word item %r" % (d,))
    return Rbw(items)


def coeff_to_json(c: Coeff) -> dict:
    return {str(e): [r.numerator, r.denominator] for e, r in c.items()}


def coeff_from_json(data: dict) -> Coeff:
    return Coeff({int(e): Fraction(n, d) for e, (n, d) in data.items()})


def _lincomb_json(a: LinComb) -> dict:
    terms = sorted(a.items(), key=lambda kv: lincomb_key(kv[0]))
    return {"terms": [{"word": word_to_json(w), "coeff": coeff_to_json(c)} for w, c in terms]}


def _tensor_json(t: Tensor2) -> dict:
    terms = sorted(t.items(), key=lambda kv: tensor_key(kv[0]))
    return {
        "tensor": 2,
        "terms": [
            {"left": word_to_json(a), "right": word_to_json(b), "coeff": coeff_to_json(c)}
            for (a, b), c in terms
        ],
    }


def _mode_json(mode: WeightMode) -> str:
    return "symbolic" if mode.value is None else str(mode.value)


def _report_json(r) -> dict:
    return {
        "report": "counterexample",
        "weight": _mode_json(r.mode),
        "product": _lincomb_json(r.product),
        "product_degrees": sorted(r.product_degrees),
        "product_expected_degrees": sorted(r.product_expected_degrees),
        "coproduct": _tensor_json(r.coproduct),
        "coproduct_expected_degree": r.coproduct_expected_degree,
        "cograding_violations": [
            {"left": word_to_json(a), "right": word_to_json(b), "coeff": coeff_to_json(c)}
            for a, b, c in r.cograding_violations
        ],
        "violation_count": len(r.violations),
    }


def to_jsonable(value):
    from .hopf import CounterexampleReport

    if isinstance(value, Tensor2):
        return _tensor_json(value)
    if isinstance(value, LinComb):
        return _lincomb_json(value)
    if isinstance(value, CounterexampleReport):
        return _report_json(value)
    if isinstance(value, Coeff):
        return {"coeff": coeff_to_json(value)}
    raise TypeError("cannot export %r" % (value,))


def export_structured(value) -> str:
    return json.dumps(to_jsonable(value), separators=(",", ":"))


def _tensor_from(data: dict) -> Tensor2:
    return Tensor2(
        ((word_from_json(t["left"]), word_from_json(t["right"])), coeff_from_json(t["coeff"]))
        for t in data["terms"]
    )


def from_jsonable(data: dict):
    from .hopf import CounterexampleReport

    if "report" in data:
        mode = SYMBOLIC if data["weight"] == "symbolic" else WeightMode(Fraction(data["weight"]))
        return CounterexampleReport(
            mode=mode,
            product=from_jsonable(data["product"]),
            product_expected_degrees=set(data["product_expected_degrees"]),
            product_degrees=set(data["product_degrees"]),
            coproduct=_tensor_from(data["coproduct"]),
            coproduct_expected_degree=data["coproduct_expected_degree"],
            cograding_violations=[
                (word_from_json(v["left"]), word_from_json(v["right"]), coeff_from_json(v["coeff"]))
                for v in data["cograding_violations"]
            ],
        )
    if "coeff" in data and "terms" not in data:
        return coeff_from_json(data["coeff"])
    if data.get("tensor") == 2:
        return _tensor_from(data)
    return LinComb((word_from_json(t["word"]), coeff_from_json(t["coeff"])) for t in data["terms"])


def import_structured(text: str):
    return from_jsonable(json.loads(text))


__all__ = [
    "IDENTIFIER",
    "UNIT",
    "evaluate",
    "export_structured",
    "import_structured",
    "parse",
    "parse_lincomb",
    "parse_tensor",
    "print_coeff",
    "print_lincomb",
    "print_tensor2",
    "print_word",
    "to_text",
    "tokenize",
]
