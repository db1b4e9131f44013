"""Coproduct, counit and the coalgebra/bialgebra law checkers.

The coproduct is defined on words by recursion over the item sequence:

* ``cop(1) = 1 (x) 1``
* a letter ``x`` is primitive: ``x (x) 1 + 1 (x) x``
* ``cop(P(w)) = P(w) (x) 1 + (id (x) P) cop(w)``
* otherwise ``cop(w1 ... wm) = cop(w1) <> ... <> cop(wm)``, folded left to right.
"""

from __future__ import annotations

from functools import lru_cache, reduce

from .algebra import LinComb, Sparse, _diamond_words
from .coeffs import ONE, SYMBOLIC, Coeff, WeightMode
from .errors import EmptyWord
from .words import UNIT, Atom, Rbw, bracket


class Tensor2(Sparse):
    """``{(left, right): Coeff}``, an element of the tensor square."""

    __slots__ = ()

    @classmethod
    def pure(cls, a: LinComb, b: LinComb) -> "Tensor2":
        """``a (x) b`` expanded bilinearly."""
        return cls(((u, v), cu * cv) for u, cu in a.items() for v, cv in b.items())

    def swap(self) -> "Tensor2":
        return Tensor2._raw({(b, a): c for (a, b), c in self.items()})

    def apply(self, f, g) -> "Tensor2":
        """``(f (x) g)`` for maps taking a word to a :class:`LinComb`."""
        out = Tensor2()
        for (a, b), c in self.items():
            out = out + Tensor2.pure(f(a), g(b)).scale(c)
        return out


class Tensor3(Sparse):
    """``{(a, b, c): Coeff}``, codomain of the two iterated coproducts."""

    __slots__ = ()


def tensor2_diamond(s: Tensor2, t: Tensor2, mode: WeightMode = SYMBOLIC) -> Tensor2:
    """Componentwise product ``(a (x) b) <> (c (x) d) = (a<>c) (x) (b<>d)``."""
    lam = mode.weight()
    out = {}
    for (a, b), cs in s.items():
        for (c, d), ct in t.items():
            k = cs * ct
            left = _diamond_words(a, c, lam)
            right = _diamond_words(b, d, lam)
            for l, cl in left.items():
                for r, cr in right.items():
                    key = (l, r)
                    v = k * cl * cr
                    out[key] = out[key] + v if key in out else v
    return Tensor2(out).specialize(mode)


@lru_cache(maxsize=None)
def _coproduct_word(w: Rbw, mode: WeightMode) -> Tensor2:
    items = w.items
    if not items:
        return Tensor2._raw({(UNIT, UNIT): ONE})
    if len(items) == 1:
        it = items[0]
        if isinstance(it, Atom):
            return Tensor2._raw({(w, UNIT): ONE, (UNIT, w): ONE})
        inner = _coproduct_word(it.inner, mode)
        terms = {(a, bracket(b)): c for (a, b), c in inner.items()}
        terms[(w, UNIT)] = terms.get((w, UNIT), Coeff()) + ONE
        return Tensor2(terms)
    factors = [_coproduct_word(Rbw((it,)), mode) for it in items]
    return reduce(lambda s, t: tensor2_diamond(s, t, mode), factors)


def coproduct_basis(w: Rbw, mode: WeightMode = SYMBOLIC) -> Tensor2:
    return _coproduct_word(w, mode)


def coproduct(a: LinComb, mode: WeightMode = SYMBOLIC) -> Tensor2:
    out = Tensor2()
    for w, c in a.items():
        out = out + _coproduct_word(w, mode).scale(c)
    return out.specialize(mode)


def counit(a: LinComb) -> Coeff:
    return a.coeff(UNIT)


def counit_word(w: Rbw) -> Coeff:
    return ONE if w.is_unit() else Coeff()


def reduced_coproduct(w: Rbw, mode: WeightMode = SYMBOLIC) -> Tensor2:
    """``cop(w) - w (x) 1 - 1 (x) w``."""
    if w.is_unit():
        raise EmptyWord("the reduced coproduct")
    trivial = Tensor2({(w, UNIT): ONE, (UNIT, w): ONE})
    return _coproduct_word(w, mode) - trivial


def _left_cop3(w: Rbw, mode: WeightMode) -> Tensor3:
    """``(cop (x) id) cop(w)``."""
    out = {}
    for (a, b), c in _coproduct_word(w, mode).items():
        for (a1, a2), ca in _coproduct_word(a, mode).items():
            key = (a1, a2, b)
            out[key] = out[key] + c * ca if key in out else c * ca
    return Tensor3(out)


def _right_cop3(w: Rbw, mode: WeightMode) -> Tensor3:
    """``(id (x) cop) cop(w)``."""
    out = {}
    for (a, b), c in _coproduct_word(w, mode).items():
        for (b1, b2), cb in _coproduct_word(b, mode).items():
            key = (a, b1, b2)
            out[key] = out[key] + c * cb if key in out else c * cb
    return Tensor3(out)


def check_coassociativity(w: Rbw, mode: WeightMode = SYMBOLIC) -> bool:
    return _left_cop3(w, mode) == _right_cop3(w, mode)


def counit_left(t: Tensor2) -> LinComb:
    """``(eps (x) id) t`` with the scalar folded into the right slot."""
    return LinComb((b, c) for (a, b), c in t.items() if a.is_unit())


def counit_right(t: Tensor2) -> LinComb:
    return LinComb((a, c) for (a, b), c in t.items() if b.is_unit())


def check_counit_laws(w: Rbw, mode: WeightMode = SYMBOLIC) -> bool:
    t = _coproduct_word(w, mode)
    target = LinComb.word(w)
    return counit_left(t) == target and counit_right(t) == target


def check_bialgebra_compat(u: Rbw, v: Rbw, mode: WeightMode = SYMBOLIC) -> bool:
    """``cop(u<>v) = cop(u)<>cop(v)`` and ``eps(u<>v) = eps(u) eps(v)``."""
    prod = _diamond_words(u, v, mode.weight()).specialize(mode)
    lhs = coproduct(prod, mode)
    rhs = tensor2_diamond(_coproduct_word(u, mode), _coproduct_word(v, mode), mode)
    if lhs != rhs:
        return False
    return counit(prod) == counit_word(u) * counit_word(v)


def is_cocommutative_on(w: Rbw, mode: WeightMode = SYMBOLIC) -> bool:
    t = _coproduct_word(w, mode)
    return t == t.swap()

