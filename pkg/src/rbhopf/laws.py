"""Exhaustive law suites over enumerated basis words.

Every law here is (multi)linear, so checking it on all basis words, pairs or
triples up to a degree bound covers all elements of that degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .algebra import LinComb, check_rota_baxter, diamond
from .coalgebra import check_bialgebra_compat, check_coassociativity, check_counit_laws
from .coeffs import SYMBOLIC, WeightMode
from .errors import WeightNotZero
from .hopf import (
    check_antihomomorphism,
    check_antipode,
    check_graded_coproduct,
    check_graded_product,
    counterexample_weight_nonzero,
)
from .words import UNIT, enumerate_words

LAWS = ("rb", "assoc", "unit", "coassoc", "counit", "bialgebra", "antipode", "grading", "counterexample")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case):
        self.checked += 1
        if not ok:
            self.failures.append(case)

    def summary(self) -> str:
        line = "%s: %d/%d passed" % (self.name, self.checked - len(self.failures), self.checked)
        if self.failures:
            line += "; first failure: %s" % (_show(self.failures[0]),)
        return line


def _show(case) -> str:
    if isinstance(case, tuple):
        return "(" + ", ".join(map(str, case)) + ")"
    return str(case)


def tuples_up_to(words: list, k: int, max_degree: int) -> Iterable[tuple]:
    """All ``k``-tuples of words whose degrees add up to at most ``max_degree``."""
    for combo in product(words, repeat=k):
        if sum(w.degree().total for w in combo) <= max_degree:
            yield combo


def run_suite(name: str, cases: Iterable, check: Callable[..., bool]) -> SuiteResult:
    result = SuiteResult(name)
    for case in cases:
        args = case if isinstance(case, tuple) else (case,)
        result.record(check(*args), case)
    return result


def _word(w) -> LinComb:
    return LinComb.word(w)


def rota_baxter_suite(alphabet, max_degree, mode=SYMBOLIC) -> SuiteResult:
    words = enumerate_words(alphabet, max_degree)
    return run_suite(
        "rb",
        tuples_up_to(words, 2, max_degree),
        lambda u, v: check_rota_baxter(_word(u), _word(v), mode),
    )


def associativity_suite(alphabet, max_degree, mode=SYMBOLIC) -> SuiteResult:
    words = enumerate_words(alphabet, max_degree)

    def check(a, b, c):
        a, b, c = _word(a), _word(b), _word(c)
        return diamond(diamond(a, b, mode), c, mode) == diamond(a, diamond(b, c, mode), mode)

    return run_suite("assoc", tuples_up_to(words, 3, max_degree), check)


def unit_suite(alphabet, max_degree, mode=SYMBOLIC) -> SuiteResult:
    one = _word(UNIT)

    def check(w):
        a = _word(w)
        return diamond(one, a, mode) == a == diamond(a, one, mode)

    return run_suite("unit", enumerate_words(alphabet, max_degree), check)


def coassociativity_suite(alphabet, max_degree, mode=SYMBOLIC) -> SuiteResult:
    return run_suite(
        "coassoc", enumerate_words(alphabet, max_degree), lambda w: check_coassociativity(w, mode)
    )


def counit_suite(alphabet, max_degree, mode=SYMBOLIC) -> SuiteResult:
    return run_suite(
        "counit", enumerate_words(alphabet, max_degree), lambda w: check_counit_laws(w, mode)
    )


def bialgebra_suite(alphabet, max_degree, mode=SYMBOLIC) -> SuiteResult:
    words = enumerate_words(alphabet, max_degree)
    return run_suite(
        "bialgebra",
        tuples_up_to(words, 2, max_degree),
        lambda u, v: check_bialgebra_compat(u, v, mode),
    )


def antipode_suite(alphabet, max_degree, mode) -> SuiteResult:
    return run_suite(
        "antipode", enumerate_words(alphabet, max_degree), lambda w: check_antipode(w, mode)
    )


def antihomomorphism_suite(alphabet, max_degree, mode) -> SuiteResult:
    words = enumerate_words(alphabet, max_degree)
    return run_suite(
        "antipode-antihom",
        tuples_up_to(words, 2, max_degree),
        lambda u, v: check_antihomomorphism(u, v, mode),
    )


def graded_product_suite(alphabet, max_degree, mode) -> SuiteResult:
    words = enumerate_words(alphabet, max_degree)
    return run_suite(
        "grading-product",
        tuples_up_to(words, 2, max_degree),
        lambda u, v: check_graded_product(u, v, mode),
    )


def graded_coproduct_suite(alphabet, max_degree, mode) -> SuiteResult:
    return run_suite(
        "grading-coproduct",
        enumerate_words(alphabet, max_degree),
        lambda w: check_graded_coproduct(w, mode),
    )


def connectedness_suite(alphabet, max_degree) -> SuiteResult:
    degree_zero = [w for w in enumerate_words(alphabet, max_degree) if w.degree().total == 0]
    result = SuiteResult("connected")
    result.record(degree_zero == [UNIT], degree_zero)
    return result


def counterexample_suite(x: str = "x") -> SuiteResult:
    """Passes iff the violations appear at symbolic weight and vanish at weight 0."""
    result = SuiteResult("counterexample")
    symbolic = counterexample_weight_nonzero(SYMBOLIC, x)
    zero = counterexample_weight_nonzero(WeightMode(0), x)
    result.record(symbolic.product_violation, "no product violation at symbolic weight")
    result.record(len(symbolic.cograding_violations) == 2, "expected two cograding violations")
    result.record(zero.is_empty(), "violations remain at weight 0")
    return result


def run_law(law: str, alphabet, max_degree: int, mode: WeightMode) -> list:
    """Run the suites behind a CLI law name; returns a list of results."""
    if law == "rb":
        return [rota_baxter_suite(alphabet, max_degree, mode)]
    if law == "assoc":
        return [associativity_suite(alphabet, max_degree, mode)]
    if law == "unit":
        return [unit_suite(alphabet, max_degree, mode)]
    if law == "coassoc":
        return [coassociativity_suite(alphabet, max_degree, mode)]
    if law == "counit":
        return [counit_suite(alphabet, max_degree, mode)]
    if law == "bialgebra":
        return [bialgebra_suite(alphabet, max_degree, mode)]
    if law == "antipode":
        if not mode.is_zero:
            raise WeightNotZero(mode)
        return [
            antipode_suite(alphabet, max_degree, mode),
            antihomomorphism_suite(alphabet, max_degree, mode),
        ]
    if law == "grading":
        if not mode.is_zero:
            raise WeightNotZero(mode)
        return [
            graded_product_suite(alphabet, max_degree, mode),
            graded_coproduct_suite(alphabet, max_degree, mode),
            connectedness_suite(alphabet, max_degree),
        ]
    if law == "counterexample":
        return [counterexample_suite(sorted(alphabet)[0] if alphabet else "x")]
    raise ValueError("unknown law %r" % (law,))
