"""The free Rota-Baxter algebra on bracketed words.

Elements are :class:`LinComb` values, finite sums of words with :class:`Coeff`
coefficients.  The product is the diamond product: concatenation, except
where a bracket meets a bracket, which expands by the Rota-Baxter rule

    P(u) P(v) = P(u P(v)) + P(P(u) v) + lambda P(u v).
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Iterable, Mapping

from .coeffs import ONE, SYMBOLIC, ZERO, Coeff, WeightMode, specialize
from .words import UNIT, Atom, Bracket, Rbw, bracket, letter


class Sparse:
    """Finite map from hashable basis keys to nonzero :class:`Coeff` values.

    Subclasses fix the key type.  Values are treated as immutable; every
    operation returns a new instance.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for k, c in items:
            c = Coeff.coerce(c)
            if k in clean:
                c = clean[k] + c
            if c:
                clean[k] = c
            else:
                clean.pop(k, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        # trusted constructor: terms already pruned
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, key) -> Coeff:
        return self._terms.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                del out[k]
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Sparse":
        c = Coeff.coerce(c)
        if not c:
            return self._raw({})
        out = {}
        for k, v in self._terms.items():
            p = v * c
            if p:
                out[k] = p
        return self._raw(out)

    def __rmul__(self, c):
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    def specialize(self, mode: WeightMode) -> "Sparse":
        if mode.is_symbolic:
            return self
        return type(self)((k, specialize(c, mode)) for k, c in self._terms.items())

    def __repr__(self):
        from .textio import to_text

        return "%s(%s)" % (type(self).__name__, to_text(self))


class LinComb(Sparse):
    """An element of the free Rota-Baxter algebra: ``{Rbw: Coeff}``."""

    __slots__ = ()

    @classmethod
    def word(cls, w: Rbw, c=ONE) -> "LinComb":
        return cls({w: c})

    @classmethod
    def scalar(cls, c) -> "LinComb":
        return cls({UNIT: c})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def one(cls) -> "LinComb":
        return cls({UNIT: ONE})

    def scalar_value(self):
        """The coefficient if this is a multiple of the unit word, else ``None``."""
        if not self._terms:
            return ZERO
        if set(self._terms) == {UNIT}:
            return self._terms[UNIT]
        return None


def add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def scale(c: Coeff, a: LinComb) -> LinComb:
    return a.scale(c)


def rb_operator(a: LinComb) -> LinComb:
    """The Rota-Baxter operator ``P``: ``w -> P(w)`` extended linearly."""
    return LinComb._raw({bracket(w): c for w, c in a.items()})


P = rb_operator


def _splice(prefix: tuple, middle: LinComb, suffix: tuple) -> dict:
    return {Rbw(prefix + w.items + suffix): c for w, c in middle.items()}


@lru_cache(maxsize=None)
def _diamond_words(u: Rbw, v: Rbw, lam: Coeff) -> LinComb:
    if not u.items:
        return LinComb._raw({v: ONE})
    if not v.items:
        return LinComb._raw({u: ONE})
    last, first = u.items[-1], v.items[0]
    if not (isinstance(last, Bracket) and isinstance(first, Bracket)):
        return LinComb._raw({Rbw(u.items + v.items): ONE})
    inner = _bracket_product(last.inner, first.inner, lam)
    if len(u.items) == 1 and len(v.items) == 1:
        return inner
    return LinComb._raw(_splice(u.items[:-1], inner, v.items[1:]))


@lru_cache(maxsize=None)
def _bracket_product(ub: Rbw, vb: Rbw, lam: Coeff) -> LinComb:
    """P(ub) <> P(vb) = P(ub <> P(vb)) + P(P(ub) <> vb) + lam P(ub <> vb)."""
    total = _diamond_words(ub, bracket(vb), lam) + _diamond_words(bracket(ub), vb, lam)
    if lam:
        total = total + _diamond_words(ub, vb, lam).scale(lam)
    return rb_operator(total)


def diamond_basis(u: Rbw, v: Rbw, mode: WeightMode = SYMBOLIC) -> LinComb:
    return _diamond_words(u, v, mode.weight())


def diamond(a: LinComb, b: LinComb, mode: WeightMode = SYMBOLIC) -> LinComb:
    """Bilinear extension of :func:`diamond_basis`."""
    lam = mode.weight()
    out = {}
    for u, cu in a.items():
        for v, cv in b.items():
            c = cu * cv
            for w, cw in _diamond_words(u, v, lam).items():
                out[w] = out[w] + c * cw if w in out else c * cw
    result = LinComb(out)
    return result.specialize(mode)


def diamond_all(factors: Iterable[LinComb], mode: WeightMode = SYMBOLIC) -> LinComb:
    return reduce(lambda a, b: diamond(a, b, mode), factors, LinComb.one())


def check_rota_baxter(u: LinComb, v: LinComb, mode: WeightMode = SYMBOLIC) -> bool:
    lhs = diamond(P(u), P(v), mode)
    rhs = (
        P(diamond(u, P(v), mode))
        + P(diamond(P(u), v, mode))
        + P(diamond(u, v, mode)).scale(mode.weight())
    )
    return lhs == rhs.specialize(mode)


def word(w: Rbw) -> LinComb:
    return LinComb.word(w)


def gen(name: str) -> LinComb:
    """The generator ``name`` as an algebra element."""
    return LinComb.word(letter(name))


__all__ = [
    "Atom",
    "Bracket",
    "LinComb",
    "P",
    "Sparse",
    "add",
    "check_rota_baxter",
    "diamond",
    "diamond_all",
    "diamond_basis",
    "gen",
    "rb_operator",
    "scale",
    "word",
]
