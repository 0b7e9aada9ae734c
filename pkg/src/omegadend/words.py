"""Typed words: letters v₁…v_n with a type between consecutive letters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dendriform import PREC, SUCC
from .eds import EdsError, FiniteEds
from .scalars import LinComb
from .trees import _check_side, d_map, shuffle_side, shuffles

ONE = Fraction(1)

# Which (←/→) goes with which half product in the recursion.  "tree" pairs ←
# with the ≺ continuation, as the tree products do; "swapped" exchanges them.
PAIRINGS = ("tree", "swapped")
DEFAULT_PAIRING = "tree"


@dataclass(frozen=True, order=True)
class TypedWord:
    letters: tuple[str, ...]
    types: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise EdsError("typed words are nonempty")
        if len(self.types) != len(self.letters) - 1:
            raise EdsError("a word of length n carries n-1 types")

    def __len__(self) -> int:
        return len(self.letters)

    def prepend(self, a: int, v: str) -> "TypedWord":
        """(a ⊗ v)·w: the letter v followed by w, with type a between them."""
        return TypedWord((v,) + self.letters, (a,) + self.types)

    def tail(self) -> "TypedWord":
        return TypedWord(self.letters[1:], self.types[1:])

    def __str__(self) -> str:
        return format_word(self)


def word(letters: Sequence[str], types: Sequence[int] = ()) -> TypedWord:
    return TypedWord(tuple(letters), tuple(types))


def format_word(w: TypedWord) -> str:
    parts = [w.letters[0]]
    for a, v in zip(w.types, w.letters[1:]):
        parts += [str(a), v]
    return " ".join(parts)


def parse_word(text: str) -> TypedWord:
    toks = text.split()
    if not toks or len(toks) % 2 == 0:
        raise EdsError("word literal must alternate letters and types, starting and ending with a letter")
    letters = toks[0::2]
    try:
        types = [int(t) for t in toks[1::2]]
    except ValueError:
        raise EdsError(f"bad type in word literal {text!r}") from None
    return TypedWord(tuple(letters), tuple(types))


class WordPoly(LinComb):
    __slots__ = ()

    @staticmethod
    def render_key(key):
        return format_word(key)

    @staticmethod
    def sort_key(key):
        return (len(key.letters), key.letters, key.types)

    def _same(self, other) -> bool:
        return isinstance(other, WordPoly)

    @classmethod
    def of(cls, w: TypedWord, coef=ONE) -> "WordPoly":
        return cls({w: Fraction(coef) if isinstance(coef, int) else coef})


def as_wpoly(x) -> WordPoly:
    if isinstance(x, TypedWord):
        return WordPoly.of(x)
    if isinstance(x, WordPoly):
        return x
    raise TypeError(f"expected TypedWord or WordPoly, got {type(x).__name__}")


class _WordEngine:
    def __init__(self, eds: FiniteEds, pairing: str) -> None:
        if pairing not in PAIRINGS:
            raise ValueError(f"pairing must be one of {PAIRINGS}")
        self.eds, self.pairing = eds, pairing
        self.memo: dict = {}

    def basis(self, side: str, a: int, x: TypedWord, y: TypedWord) -> dict[TypedWord, int]:
        key = (side, a, x, y)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._prec(a, x, y) if side == PREC else self._succ(a, x, y)
            self.memo[key] = hit
        return hit

    def _branches(self, p: int, q: int):
        """((type, continuation side, inner type), ...) for the pair (p, q)."""
        L, R, TL, TR = self.eds.tables()
        if self.pairing == "tree":
            return ((L[p][q], PREC, TL[p][q]), (R[p][q], SUCC, TR[p][q]))
        return ((R[p][q], PREC, TL[p][q]), (L[p][q], SUCC, TR[p][q]))

    def _prec(self, a: int, x: TypedWord, y: TypedWord) -> dict[TypedWord, int]:
        v = x.letters[0]
        if len(x) == 1:
            return {y.prepend(a, v): 1}
        a2, rest = x.types[0], x.tail()
        out: dict[TypedWord, int] = {}
        for typ, s, inner in self._branches(a2, a):
            for w, c in self.basis(s, inner, rest, y).items():
                k = w.prepend(typ, v)
                out[k] = out.get(k, 0) + c
        return out

    def _succ(self, a: int, x: TypedWord, y: TypedWord) -> dict[TypedWord, int]:
        w1 = y.letters[0]
        if len(y) == 1:
            return {x.prepend(a, w1): 1}
        b2, rest = y.types[0], y.tail()
        L, R, TL, TR = self.eds.tables()
        if self.pairing == "tree":
            branches = ((R[a][b2], SUCC, TR[a][b2]), (L[a][b2], PREC, TL[a][b2]))
        else:
            branches = ((R[a][b2], PREC, TL[a][b2]), (L[a][b2], SUCC, TR[a][b2]))
        out: dict[TypedWord, int] = {}
        for typ, s, inner in branches:
            for w, c in self.basis(s, inner, x, rest).items():
                k = w.prepend(typ, w1)
                out[k] = out.get(k, 0) + c
        return out


_ENGINES: dict = {}


def _engine(eds: FiniteEds, pairing: str) -> _WordEngine:
    key = (eds, pairing)
    if key not in _ENGINES:
        if len(_ENGINES) > 128:
            _ENGINES.clear()
        _ENGINES[key] = _WordEngine(eds, pairing)
    return _ENGINES[key]


def word_product(eds: FiniteEds, side: str, a: int, x, y, pairing: str = DEFAULT_PAIRING) -> WordPoly:
    _check_side(eds, side, a)
    X, Y = as_wpoly(x), as_wpoly(y)
    eng = _engine(eds, pairing)
    out: dict = {}
    for u, c in X.items():
        for w, d in Y.items():
            cd = c * d
            for k, m in eng.basis(side, a, u, w).items():
                out[k] = out[k] + cd * m if k in out else cd * m
    return WordPoly(out)


def word_mul(eds: FiniteEds, pairing: str = DEFAULT_PAIRING):
    return lambda side, a, x, y: word_product(eds, side, a, x, y, pairing)


def word_shuffle_product(eds: FiniteEds, side: str, a: int, x: TypedWord, y: TypedWord) -> WordPoly:
    """Sum over the shuffles starting on the correct side, types transported by D."""
    _check_side(eds, side, a)
    k, l = len(x), len(y)
    letters = x.letters + y.letters
    al = x.types + (a,) + y.types
    out: dict[TypedWord, Fraction] = {}
    for sigma in shuffles(k, l):
        if shuffle_side(k, sigma) != side:
            continue
        inv = [0] * (k + l)
        for pos, v in enumerate(sigma):
            inv[v - 1] = pos
        w = TypedWord(tuple(letters[inv[i]] for i in range(k + l)), d_map(eds, k, l, sigma, al))
        out[w] = out.get(w, 0) + ONE
    return WordPoly(out)


def enumerate_words(alphabet: Sequence[str], omega_size: int, n: int) -> list[TypedWord]:
    return sorted(TypedWord(tuple(ls), tuple(ts))
                  for ls in itertools.product(alphabet, repeat=n)
                  for ts in itertools.product(range(omega_size), repeat=n - 1))


def words_by_length(alphabet: Sequence[str], omega_size: int, max_len: int) -> dict[int, list[TypedWord]]:
    return {n: enumerate_words(alphabet, omega_size, n) for n in range(1, max_len + 1)}
