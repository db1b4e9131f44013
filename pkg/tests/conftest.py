import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rbhopf.algebra import LinComb
from rbhopf.textio import parse_lincomb
from rbhopf.words import Atom, Rbw


def to_brackets(w: Rbw) -> str:
    """Render a word in the oracle's bracket-string notation."""
    return "".join(it.name if isinstance(it, Atom) else "[%s]" % to_brackets(it.inner) for it in w.items)


def lc_to_oracle(a: LinComb) -> dict:
    out = {}
    for w, c in a.items():
        poly = {e: int(r) for e, r in c.items()}
        assert all(r.denominator == 1 for _, r in c.items())
        out[to_brackets(w)] = poly
    return out


@pytest.fixture
def E():
    """Shorthand: parse an algebra expression with symbolic weight."""
    return parse_lincomb


@pytest.fixture
def W():
    """Shorthand: the single word an expression evaluates to."""

    def word(text):
        (w,) = parse_lincomb(text).support()
        return w

    return word
