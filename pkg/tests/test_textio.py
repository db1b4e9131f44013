import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rbhopf.algebra import LinComb
from rbhopf.coalgebra import Tensor2, coproduct_basis
from rbhopf.coeffs import LAMBDA, WEIGHT_ZERO, Coeff
from rbhopf.errors import EvalError, ParseError, UnknownIdentifier
from rbhopf.hopf import counterexample_weight_nonzero
from rbhopf.textio import (
    export_structured,
    import_structured,
    parse,
    parse_lincomb,
    parse_tensor,
    print_lincomb,
    print_tensor2,
    tokenize,
)
from rbhopf.words import UNIT, bracket, enumerate_words, letter

P1 = bracket(UNIT)
x = letter("x")


def test_parse_examples():
    assert print_lincomb(parse_lincomb("P(1)*P(1)")) == "lambda*P(1) + 2*P(P(1))"
    assert parse_lincomb("[x] y + 2 x") == parse_lincomb("P(x)*y + 2*x")
    with pytest.raises(ParseError) as err:
        parse("P(")
    assert err.value.position == 2


def test_syntax_variants():
    assert parse_lincomb("[1][1]") == parse_lincomb("P(1) P(1)")
    assert parse_lincomb("lambda^2 x") == LinComb.word(x, Coeff.lam(2))
    assert parse_lincomb("1/2 x - 1/2 x") == LinComb.zero()
    assert parse_lincomb("-x") == -LinComb.word(x)
    assert parse_lincomb("(x + 1)^0") == LinComb.one()
    assert parse_lincomb("eps(3 + x)") == LinComb.scalar(3)
    assert parse_lincomb("S(P(x))", WEIGHT_ZERO) == parse_lincomb("-P(x) + x P(1)")
    assert parse_lincomb("lambda x", WEIGHT_ZERO) == LinComb.zero()


@pytest.mark.parametrize("text,pos", [("x +", 3), ("x )", 2), ("1/0", 0), ("x ^ y", 4), ("x $", 2)])
def test_syntax_errors(text, pos):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.position == pos


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifier) as err:
        parse("x y z", alphabet={"x", "y"})
    assert err.value.position == 4
    parse("x y z")  # free-form letters without a declared alphabet


def test_eval_type_errors():
    with pytest.raises(EvalError):
        parse_lincomb("cop(x)")
    with pytest.raises(EvalError):
        parse_lincomb("x + cop(x)")
    with pytest.raises(EvalError):
        parse_lincomb("P(cop(x))")


def test_tensor_expressions():
    from rbhopf.textio import evaluate

    t = evaluate(parse("cop(x) cop(x)"))
    assert t == evaluate(parse("cop(x x)"))
    assert evaluate(parse("lambda cop(1)")) == Tensor2({(UNIT, UNIT): LAMBDA})


def test_print_examples():
    assert print_lincomb(LinComb({bracket(P1): 2, P1: LAMBDA})) == "lambda*P(1) + 2*P(P(1))"
    assert print_tensor2(coproduct_basis(x)) == "x (x) 1 + 1 (x) x"
    assert print_lincomb(LinComb.zero()) == "0"
    assert print_tensor2(Tensor2()) == "0"
    assert print_lincomb(LinComb.one()) == "1"
    c = Coeff({0: 3, 1: -2})
    assert print_lincomb(LinComb({UNIT: c, x: c})) == "3 - 2*lambda + (3 - 2*lambda)*x"
    assert print_lincomb(LinComb({x: Fraction(-1, 2)})) == "-1/2*x"


def test_tensor_tokenizing_keeps_parenthesised_letter():
    kinds = [t.kind for t in tokenize("P(x) (x) x", tensor=True)]
    assert kinds == ["ident", "op", "ident", "op", "tensor", "ident", "eof"]
    assert "tensor" not in [t.kind for t in tokenize("P(x) (x) x")]


def test_export_examples():
    assert export_structured(LinComb.word(x)) == '{"terms":[{"word":[{"atom":"x"}],"coeff":{"0":[1,1]}}]}'
    assert export_structured(LinComb.word(P1, LAMBDA)) == '{"terms":[{"word":[{"bracket":[]}],"coeff":{"1":[1,1]}}]}'
    assert export_structured(LinComb.zero()) == '{"terms":[]}'


def test_report_export_roundtrip():
    for mode in (None, WEIGHT_ZERO):
        r = counterexample_weight_nonzero() if mode is None else counterexample_weight_nonzero(mode)
        doc = export_structured(r)
        back = import_structured(doc)
        assert back.product == r.product and back.coproduct == r.coproduct
        assert back.cograding_violations == r.cograding_violations
        assert back.mode == r.mode
        assert json.loads(doc)["violation_count"] == len(r.violations)


WORDS = enumerate_words("xy", 4)
small = st.fractions(min_value=-4, max_value=4, max_denominator=3)
coeffs = st.dictionaries(st.integers(0, 2), small, max_size=3).map(Coeff)
lincombs = st.dictionaries(st.sampled_from(WORDS), coeffs, max_size=5).map(LinComb)


@settings(max_examples=300)
@given(lincombs)
def test_print_parse_roundtrip(a):
    assert parse_lincomb(print_lincomb(a)) == a


@settings(max_examples=200)
@given(st.dictionaries(st.tuples(st.sampled_from(WORDS), st.sampled_from(WORDS)), coeffs, max_size=5))
def test_tensor_roundtrip(terms):
    t = Tensor2(terms)
    assert parse_tensor(print_tensor2(t)) == t
    assert import_structured(export_structured(t)) == t


@settings(max_examples=300)
@given(lincombs)
def test_export_import_roundtrip(a):
    assert import_structured(export_structured(a)) == a


def test_printing_injective_on_enumeration():
    texts = {print_lincomb(LinComb.word(w)) for w in WORDS}
    assert len(texts) == len(WORDS)
    rng = random.Random(3)
    seen = {}
    for _ in range(500):
        a = LinComb({rng.choice(WORDS): rng.randint(-2, 2) for _ in range(3)})
        text = print_lincomb(a)
        assert seen.setdefault(text, a) == a
