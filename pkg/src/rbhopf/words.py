"""Rota-Baxter words: the canonical basis of the free Rota-Baxter algebra.

A word is an alternating sequence of items, each either a single letter
(:class:`Atom`) or a bracketed subword (:class:`Bracket`).  Consecutive letters
are allowed; consecutive brackets are not, at any nesting level.  The empty
sequence is the unit word ``1``.

Words print as ``x*P(y)*z``; the bracket ``P(...)`` stands for the formal
Rota-Baxter operator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Tuple, Union

from .errors import AdjacentBrackets, EmptyWord

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"P", "S", "cop", "eps", "lambda"})


class Atom:
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        if not IDENTIFIER.match(name) or name in RESERVED:
            raise ValueError("invalid letter name %r" % (name,))
        self.name = name
        self._hash = hash(("atom", name))

    def degree(self) -> int:
        return 1

    def __eq__(self, other):
        return isinstance(other, Atom) and other.name == self.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Atom(%r)" % self.name

    def __str__(self):
        return self.name


class Bracket:
    __slots__ = ("inner", "_hash")

    def __init__(self, inner: "Rbw"):
        if not isinstance(inner, Rbw):
            raise TypeError("bracket content must be an Rbw, got %r" % (inner,))
        self.inner = inner
        self._hash = hash(("bracket", inner))

    def degree(self) -> int:
        return 1 + self.inner.degree().total

    def __eq__(self, other):
        return isinstance(other, Bracket) and other.inner == self.inner

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Bracket(%r)" % (self.inner,)

    def __str__(self):
        return "P(%s)" % self.inner


RbwItem = Union[Atom, Bracket]


class Degree(NamedTuple):
    deg_P: int
    deg_X: int
    total: int


class Rbw:
    """An immutable Rota-Baxter word, stored as its item sequence."""

    __slots__ = ("items", "_hash", "_degree", "_str")

    def __init__(self, items: Iterable[RbwItem] = ()):
        items = tuple(items)
        prev_bracket = False
        for i, it in enumerate(items):
            if isinstance(it, Bracket):
                if prev_bracket:
                    raise AdjacentBrackets(i)
                prev_bracket = True
            elif isinstance(it, Atom):
                prev_bracket = False
            else:
                raise TypeError("not a word item: %r" % (it,))
        self.items = items
        self._hash = hash(items)
        self._degree = None
        self._str = None

    def __eq__(self, other):
        return isinstance(other, Rbw) and (self is other or self.items == other.items)

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.items)

    def __bool__(self):
        # the unit word is falsy, like an empty tuple
        return bool(self.items)

    def is_unit(self) -> bool:
        return not self.items

    def degree(self) -> Degree:
        if self._degree is None:
            dp = dx = 0
            for it in self.items:
                if isinstance(it, Atom):
                    dx += 1
                else:
                    d = it.inner.degree()
                    dp += 1 + d.deg_P
                    dx += d.deg_X
            self._degree = Degree(dp, dx, dp + dx)
        return self._degree

    def concat(self, other: "Rbw") -> "Rbw":
        """Plain concatenation; raises :class:`AdjacentBrackets` if alternation breaks."""
        return Rbw(self.items + other.items)

    def sort_key(self):
        return (self.degree().total, str(self))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "Rbw(%s)" % self

    def __str__(self):
        if self._str is None:
            self._str = "*".join(map(str, self.items)) if self.items else "1"
        return self._str


UNIT = Rbw()


def letter(name: str) -> Rbw:
    return Rbw((Atom(name),))


def bracket(w: Rbw) -> Rbw:
    return Rbw((Bracket(w),))


def letters(names: str | Sequence[str]) -> Rbw:
    """A bracket-free word; a plain string is split into single characters."""
    return Rbw(Atom(n) for n in names)


def make_word(items: Sequence[RbwItem]) -> Rbw:
    return Rbw(items)


def depth(w: Rbw) -> int:
    return max((1 + depth(it.inner) for it in w.items if isinstance(it, Bracket)), default=0)


def degree(w: Rbw) -> Degree:
    return w.degree()


@dataclass(frozen=True)
class LetterRun:
    letters: Tuple[Atom, ...]


@dataclass(frozen=True)
class BracketBlock:
    inner: Rbw


StdBlock = Union[LetterRun, BracketBlock]


def standard_decomposition(w: Rbw) -> list:
    """Split ``w`` into maximal letter runs and single brackets."""
    if w.is_unit():
        raise EmptyWord("standard decomposition")
    blocks = []
    run = []
    for it in w.items:
        if isinstance(it, Atom):
            run.append(it)
            continue
        if run:
            blocks.append(LetterRun(tuple(run)))
            run = []
        blocks.append(BracketBlock(it.inner))
    if run:
        blocks.append(LetterRun(tuple(run)))
    return blocks


def breadth(w: Rbw) -> int:
    return len(standard_decomposition(w))


def diamond_factorization(w: Rbw) -> tuple:
    return w.items


def width(w: Rbw) -> int:
    return len(w.items)


@lru_cache(maxsize=None)
def _words_of_degree(alphabet: Tuple[str, ...], n: int) -> Tuple[Rbw, ...]:
    return tuple(Rbw(seq) for seq in _sequences(alphabet, n, True))


@lru_cache(maxsize=None)
def _sequences(alphabet: Tuple[str, ...], n: int, bracket_ok: bool) -> tuple:
    """Alternating item sequences of total degree ``n``.

    ``bracket_ok`` says whether the first item may be a bracket.
    """
    if n == 0:
        return ((),)
    out = []
    for a in alphabet:
        for rest in _sequences(alphabet, n - 1, True):
            out.append((Atom(a),) + rest)
    if bracket_ok:
        for k in range(n):
            # bracket around a word of degree k costs k + 1
            for inner in _words_of_degree(alphabet, k):
                head = Bracket(inner)
                for rest in _sequences(alphabet, n - 1 - k, False):
                    out.append((head,) + rest)
    return tuple(out)


def words_of_degree(alphabet: Iterable[str], n: int) -> list:
    alphabet = tuple(sorted(set(alphabet)))
    return sorted(_words_of_degree(alphabet, n), key=Rbw.sort_key)


def enumerate_words(alphabet: Iterable[str], max_total_degree: int) -> list:
    """Every word of total degree at most ``max_total_degree``, in canonical order."""
    alphabet = tuple(sorted(set(alphabet)))
    if not alphabet:
        raise ValueError("alphabet must be non-empty")
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be >= 0")
    out = []
    for n in range(max_total_degree + 1):
        out.extend(words_of_degree(alphabet, n))
    return out
