"""Grading, convolution and the weight-zero antipode.

At weight 0 the total degree (letters plus brackets) makes the algebra a
connected graded bialgebra, so the antipode exists and is computed by the
usual recursion over the reduced coproduct:

    S(1) = 1,    S(w) = -w - sum S(w') <> w''.

At any other weight the grading breaks (``P(1)<>P(1)`` picks up a term of
lower degree), and this module refuses to produce an antipode.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .algebra import LinComb, diamond, rb_operator
from .coalgebra import Tensor2, coproduct, coproduct_basis, counit_word, reduced_coproduct
from .coeffs import SYMBOLIC, WEIGHT_ZERO, WeightMode
from .errors import WeightNotZero
from .words import UNIT, Rbw, bracket, letter


def graded_component(a: LinComb, n: int) -> LinComb:
    return LinComb._raw({w: c for w, c in a.items() if w.degree().total == n})


def is_homogeneous(a: LinComb) -> Optional[int]:
    """The common degree of the support, or ``None`` if mixed or zero."""
    degrees = {w.degree().total for w in a.support()}
    return degrees.pop() if len(degrees) == 1 else None


class LinearMap:
    """A linear endomorphism given by its values on words."""

    def __init__(self, rule: Callable[[Rbw], LinComb], name: str = "f"):
        self.rule = rule
        self.name = name

    def on_word(self, w: Rbw) -> LinComb:
        return self.rule(w)

    def __call__(self, a: Union[Rbw, LinComb]) -> LinComb:
        if isinstance(a, Rbw):
            return self.rule(a)
        out = LinComb()
        for w, c in a.items():
            out = out + self.rule(w).scale(c)
        return out

    def __repr__(self):
        return "LinearMap(%s)" % self.name


identity = LinearMap(LinComb.word, "id")
unit_counit = LinearMap(lambda w: LinComb.scalar(counit_word(w)), "u.eps")
rb_map = LinearMap(lambda w: rb_operator(LinComb.word(w)), "P")


def convolution(f: LinearMap, g: LinearMap, mode: WeightMode = SYMBOLIC) -> LinearMap:
    """``f * g = mu (f (x) g) cop``."""

    def rule(w: Rbw) -> LinComb:
        out = LinComb()
        for (a, b), c in coproduct_basis(w, mode).items():
            out = out + diamond(f.on_word(a), g.on_word(b), mode).scale(c)
        return out

    return LinearMap(rule, "(%s*%s)" % (f.name, g.name))


def _require_zero(mode: WeightMode):
    if not mode.is_zero:
        raise WeightNotZero(mode)


_antipode_memo = {UNIT: LinComb.one()}
_antipode_lock = threading.Lock()


def antipode(w: Rbw, mode: WeightMode = WEIGHT_ZERO) -> LinComb:
    _require_zero(mode)
    hit = _antipode_memo.get(w)
    if hit is not None:
        return hit
    out = -LinComb.word(w)
    for (a, b), c in reduced_coproduct(w, WEIGHT_ZERO).items():
        out = out - diamond(antipode(a), LinComb.word(b), WEIGHT_ZERO).scale(c)
    with _antipode_lock:
        _antipode_memo.setdefault(w, out)
    return out


def antipode_lin(a: LinComb, mode: WeightMode = WEIGHT_ZERO) -> LinComb:
    _require_zero(mode)
    out = LinComb()
    for w, c in a.items():
        out = out + antipode(w).scale(c)
    return out


antipode_map = LinearMap(antipode, "S")


def check_antipode(w: Rbw, mode: WeightMode = WEIGHT_ZERO) -> bool:
    """``S * id = id * S = u.eps`` evaluated on ``w``."""
    _require_zero(mode)
    target = unit_counit.on_word(w)
    return (
        convolution(antipode_map, identity, mode).on_word(w) == target
        and convolution(identity, antipode_map, mode).on_word(w) == target
    )


def check_antihomomorphism(u: Rbw, v: Rbw, mode: WeightMode = WEIGHT_ZERO) -> bool:
    _require_zero(mode)
    prod = diamond(LinComb.word(u), LinComb.word(v), mode)
    return antipode_lin(prod) == diamond(antipode(v), antipode(u), mode)


def check_graded_product(u: Rbw, v: Rbw, mode: WeightMode = WEIGHT_ZERO) -> bool:
    _require_zero(mode)
    prod = diamond(LinComb.word(u), LinComb.word(v), mode)
    return is_homogeneous(prod) == u.degree().total + v.degree().total


def _cograding_violations(t: Tensor2, n: int) -> list:
    return [
        (a, b, c)
        for (a, b), c in t.items()
        if a.degree().total + b.degree().total != n
    ]


def check_graded_coproduct(w: Rbw, mode: WeightMode = WEIGHT_ZERO) -> bool:
    _require_zero(mode)
    return not _cograding_violations(coproduct_basis(w, mode), w.degree().total)


@dataclass
class CounterexampleReport:
    """Grading failures of ``w = P(1)`` and ``w x w`` at the given weight."""

    mode: WeightMode
    product: LinComb
    product_expected_degrees: set
    product_degrees: set
    coproduct: Tensor2
    coproduct_expected_degree: int
    # (left, right, coeff) triples whose slot degrees do not add up
    cograding_violations: list = field(default_factory=list)

    @property
    def product_violation(self) -> bool:
        return self.product_degrees != self.product_expected_degrees

    @property
    def violations(self) -> list:
        out = []
        if self.product_violation:
            out.append(("product", self.product_degrees))
        out.extend(("coproduct", v) for v in self.cograding_violations)
        return out

    def is_empty(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        from .textio import print_coeff, print_lincomb, print_tensor2

        lines = [
            "weight: %s" % self.mode,
            "P(1) <> P(1) = %s" % print_lincomb(self.product),
            "  product degrees %s, expected %s: %s"
            % (
                sorted(self.product_degrees),
                sorted(self.product_expected_degrees),
                "VIOLATION" if self.product_violation else "ok",
            ),
            "cop(P(1)*x*P(1)) = %s" % print_tensor2(self.coproduct),
        ]
        if not self.cograding_violations:
            lines.append("  cograding: ok (all slot degrees sum to %d)" % self.coproduct_expected_degree)
        for a, b, c in self.cograding_violations:
            lines.append(
                "  cograding VIOLATION: %s (x) %s with coefficient %s has degree %d != %d"
                % (a, b, print_coeff(c), a.degree().total + b.degree().total,
                   self.coproduct_expected_degree)
            )
        lines.append("violations: %d" % len(self.violations))
        return "\n".join(lines)


def counterexample_weight_nonzero(mode: WeightMode = SYMBOLIC, x: str = "x") -> CounterexampleReport:
    """Recompute the two grading failures at nonzero weight.

    With ``w = P(1)``: ``w <> w = 2 P(P(1)) + lambda P(1)`` is not homogeneous,
    and ``cop(w x w)`` contains ``lambda P(1) (x) x`` and ``lambda x (x) P(1)``,
    whose slot degrees sum to 2 instead of 3.
    """
    w = bracket(UNIT)
    prod = diamond(LinComb.word(w), LinComb.word(w), mode)
    wxw = Rbw(w.items + letter(x).items + w.items)
    cop = coproduct(LinComb.word(wxw), mode)
    n = wxw.degree().total
    return CounterexampleReport(
        mode=mode,
        product=prod,
        product_expected_degrees={2 * w.degree().total},
        product_degrees={v.degree().total for v in prod.support()},
        coproduct=cop,
        coproduct_expected_degree=n,
        cograding_violations=sorted(
            _cograding_violations(cop, n), key=lambda t: (t[0].sort_key(), t[1].sort_key())
        ),
    )


def check_involution(w: Rbw) -> bool:
    """Whether ``S(S(w)) == w``; an observation, not a law of this algebra."""
    return antipode_lin(antipode(w)) == LinComb.word(w)
