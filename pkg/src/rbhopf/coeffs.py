"""Exact scalars: polynomials in the formal weight ``lambda`` over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Optional, Union

Scalar = Union[int, Fraction]


class Coeff:
    """A univariate polynomial in ``lambda`` with :class:`Fraction` coefficients.

    Stored sparsely as ``{exponent: nonzero rational}``; the zero polynomial is
    the empty map.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        clean = {}
        if terms:
            for e, r in terms.items():
                if e < 0:
                    raise ValueError("negative power of lambda: %r" % (e,))
                r = Fraction(r)
                if r:
                    clean[int(e)] = r
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, value: Scalar) -> "Coeff":
        return cls({0: value})

    @classmethod
    def lam(cls, power: int = 1) -> "Coeff":
        return cls({power: 1})

    @classmethod
    def coerce(cls, value) -> "Coeff":
        if isinstance(value, Coeff):
            return value
        if isinstance(value, Rational):
            return cls.const(value)
        raise TypeError("cannot use %r as a coefficient" % (value,))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_term(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def degree(self) -> int:
        """Highest power of lambda present; -1 for zero."""
        return max(self._terms, default=-1)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == Coeff.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        try:
            other = Coeff.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, r in other._terms.items():
            out[e] = out.get(e, 0) + r
        return Coeff(out)

    __radd__ = __add__

    def __neg__(self):
        return Coeff({e: -r for e, r in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Coeff.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Coeff.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Coeff.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for e1, r1 in self._terms.items():
            for e2, r2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + r1 * r2
        return Coeff(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, value: Scalar) -> Fraction:
        value = Fraction(value)
        return sum((r * value**e for e, r in self._terms.items()), Fraction(0))

    def __repr__(self):
        return "Coeff(%s)" % format_coeff(self)

    def __str__(self):
        return format_coeff(self)


ZERO = Coeff()
ONE = Coeff.const(1)
LAMBDA = Coeff.lam()


def coeff_add(a: Coeff, b: Coeff) -> Coeff:
    return a + b


def coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    return a * b


def coeff_neg(a: Coeff) -> Coeff:
    return -a


@dataclass(frozen=True)
class WeightMode:
    """How the weight is treated: ``value=None`` keeps lambda formal."""

    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def numeric(cls, value: Scalar) -> "WeightMode":
        return cls(Fraction(value))

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def weight(self) -> Coeff:
        """The scalar that plays the role of lambda in products."""
        return LAMBDA if self.value is None else Coeff.const(self.value)

    def __str__(self):
        return "symbolic" if self.value is None else str(self.value)


SYMBOLIC = WeightMode()
WEIGHT_ZERO = WeightMode(Fraction(0))


def specialize(a: Coeff, mode: WeightMode) -> Coeff:
    if mode.value is None or a.is_constant():
        return a
    return Coeff.const(a.evaluate(mode.value))


def _format_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else "%d/%d" % (r.numerator, r.denominator)


def _format_monomial(r: Fraction, e: int) -> str:
    """Format ``|r| * lambda^e``; the sign is handled by the caller."""
    r = abs(r)
    if e == 0:
        return _format_rational(r)
    power = "lambda" if e == 1 else "lambda^%d" % e
    return power if r == 1 else "%s*%s" % (_format_rational(r), power)


def format_coeff(a: Coeff) -> str:
    """Canonical text, ascending powers: ``3 + 2*lambda``, ``-1/3``, ``lambda^2``."""
    items = a.items()
    if not items:
        return "0"
    parts = []
    for i, (e, r) in enumerate(items):
        mono = _format_monomial(r, e)
        if i == 0:
            parts.append("-" + mono if r < 0 else mono)
        else:
            parts.append(("- " if r < 0 else "+ ") + mono)
    return " ".join(parts)
