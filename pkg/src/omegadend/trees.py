"""Typed plane binary trees and the free Ω-dendriform products on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .dendriform import PREC, SUCC
from .eds import EdsError, FiniteEds
from .scalars import LinComb

ONE = Fraction(1)


class Tree:
    """A leaf, or a node carrying optional types on its two child edges.

    An edge carries a type exactly when it leads to an internal vertex.
    Instances are interned-free but cache their hash, size and sort key.
    """

    __slots__ = ("left", "lt", "rt", "right", "size", "_hash", "_key")

    def __init__(self, left: "Tree | None", lt: int | None, rt: int | None,
                 right: "Tree | None") -> None:
        self.left, self.lt, self.rt, self.right = left, lt, rt, right
        if left is None:
            self.size = 0
            self._key: tuple = (0,)
        else:
            assert right is not None
            self.size = 1 + left.size + right.size
            self._key = (1, left._key, -1 if lt is None else lt, -1 if rt is None else rt, right._key)
        self._hash = hash(self._key)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def key(self) -> tuple:
        return self._key

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self._hash == other._hash and self._key == other._key

    def __lt__(self, other: "Tree") -> bool:
        return self._key < other._key

    def __iter__(self) -> Iterator:
        return iter((self.left, self.lt, self.rt, self.right))

    def edge_types(self) -> list[int]:
        """Types of the internal edges, in depth-first (left before right) order."""
        if self.is_leaf:
            return []
        out = []
        if self.lt is not None:
            out.append(self.lt)
        out += self.left.edge_types()
        if self.rt is not None:
            out.append(self.rt)
        out += self.right.edge_types()
        return out

    def __str__(self) -> str:
        return format_tree(self)

    def __repr__(self) -> str:
        return f"Tree({format_tree(self)})"


LEAF = Tree(None, None, None, None)
COROLLA = Tree(LEAF, None, None, LEAF)  # ∨


def _node(t1: Tree, a: int | None, b: int | None, t2: Tree) -> Tree:
    return Tree(t1, a, b, t2)


def graft(t1: Tree, a: int | None, b: int | None, t2: Tree) -> Tree:
    """T₁ ∨^a_b T₂; types must be given exactly on non-leaf sides."""
    if (a is None) != t1.is_leaf:
        raise EdsError("left type must be given iff the left subtree is not a leaf")
    if (b is None) != t2.is_leaf:
        raise EdsError("right type must be given iff the right subtree is not a leaf")
    return _node(t1, a, b, t2)


def left_comb(*types: int) -> Tree:
    """Left comb with edge types listed from the root upwards."""
    t = COROLLA
    for a in reversed(types):
        t = _node(t, a, None, LEAF)
    return t


def right_comb(*types: int) -> Tree:
    t = COROLLA
    for a in reversed(types):
        t = _node(LEAF, None, a, t)
    return t


# ---------------------------------------------------------------------------
# literals


def format_tree(t: Tree) -> str:
    if t.is_leaf:
        return "."
    lt = "-" if t.lt is None else str(t.lt)
    rt = "-" if t.rt is None else str(t.rt)
    return f"({format_tree(t.left)} {lt} {rt} {format_tree(t.right)})"


def _tokens(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_tree(text: str) -> Tree:
    toks = _tokens(text)
    pos = 0

    def typ(tok: str) -> int | None:
        if tok == "-":
            return None
        try:
            return int(tok)
        except ValueError:
            raise EdsError(f"bad type token {tok!r} in tree literal") from None

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(toks):
            raise EdsError("unexpected end of tree literal")
        tok = toks[pos]
        pos += 1
        if tok == ".":
            return LEAF
        if tok != "(":
            raise EdsError(f"unexpected token {tok!r} in tree literal")
        left = parse()
        if pos + 2 > len(toks):
            raise EdsError("unexpected end of tree literal")
        a, b = typ(toks[pos]), typ(toks[pos + 1])
        pos += 2
        right = parse()
        if pos >= len(toks) or toks[pos] != ")":
            raise EdsError("missing ')' in tree literal")
        pos += 1
        return graft(left, a, b, right)

    t = parse()
    if pos != len(toks):
        raise EdsError(f"trailing tokens in tree literal: {' '.join(toks[pos:])}")
    return t


# ---------------------------------------------------------------------------
# linear combinations


class TreePoly(LinComb):
    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return key.key()

    @staticmethod
    def render_key(key):
        return format_tree(key)

    def _same(self, other) -> bool:
        return isinstance(other, TreePoly)

    @classmethod
    def of(cls, t: Tree, coef=ONE) -> "TreePoly":
        return cls({t: Fraction(coef) if isinstance(coef, int) else coef})

    def degree_support(self) -> set[int]:
        return {t.size for t in self.keys()}


def as_poly(x) -> TreePoly:
    if isinstance(x, Tree):
        return TreePoly.of(x)
    if isinstance(x, TreePoly):
        return x
    raise TypeError(f"expected Tree or TreePoly, got {type(x).__name__}")


def enumerate_basis(omega_size: int, n: int) -> list[Tree]:
    """All typed trees with n internal vertices, sorted."""
    return sorted(_basis(omega_size, n))


@lru_cache(maxsize=None)
def _basis(w: int, n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for i in range(n):
        for t1 in _basis(w, i):
            for t2 in _basis(w, n - 1 - i):
                for a in (range(w) if i else (None,)):
                    for b in (range(w) if n - 1 - i else (None,)):
                        out.append(_node(t1, a, b, t2))
    return tuple(out)


def basis_by_degree(omega_size: int, max_degree: int) -> dict[int, list[Tree]]:
    return {d: enumerate_basis(omega_size, d) for d in range(1, max_degree + 1)}


# ---------------------------------------------------------------------------
# recursive products


class _ProductEngine:
    """Memoised products of basis trees for one structure."""

    def __init__(self, eds: FiniteEds) -> None:
        self.eds = eds
        self.memo: dict = {}

    def basis(self, side: str, a: int, t: Tree, u: Tree) -> dict[Tree, int]:
        key = (side, a, t, u)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._prec(a, t, u) if side == PREC else self._succ(a, t, u)
            self.memo[key] = hit
        return hit

    def _prec(self, a: int, t: Tree, u: Tree) -> dict[Tree, int]:
        t1, al, be, t2 = t
        if t2.is_leaf:
            return {_node(t1, al, a, u): 1}
        L, R, TL, TR = self.eds.tables()
        out: dict[Tree, int] = {}
        for s, typ, inner in ((PREC, L[be][a], TL[be][a]), (SUCC, R[be][a], TR[be][a])):
            for w, c in self.basis(s, inner, t2, u).items():
                k = _node(t1, al, typ, w)
                out[k] = out.get(k, 0) + c
        return out

    def _succ(self, a: int, t: Tree, u: Tree) -> dict[Tree, int]:
        u1, be, ga, u2 = u
        if u1.is_leaf:
            return {_node(t, a, ga, u2): 1}
        L, R, TL, TR = self.eds.tables()
        out: dict[Tree, int] = {}
        for s, typ, inner in ((SUCC, R[a][be], TR[a][be]), (PREC, L[a][be], TL[a][be])):
            for w, c in self.basis(s, inner, t, u1).items():
                k = _node(w, typ, ga, u2)
                out[k] = out.get(k, 0) + c
        return out


@lru_cache(maxsize=64)
def _engine(eds: FiniteEds) -> _ProductEngine:
    return _ProductEngine(eds)


def _check_side(eds: FiniteEds, side: str, a: int) -> None:
    if side not in (PREC, SUCC):
        raise EdsError(f"side must be 'prec' or 'succ', got {side!r}")
    if not 0 <= a < eds.size:
        raise EdsError(f"type {a} outside 0..{eds.size - 1}")


def typed_product(eds: FiniteEds, side: str, a: int, x, y) -> TreePoly:
    """x ≺_a y or x ≻_a y, extended bilinearly; x and y avoid the bare leaf."""
    _check_side(eds, side, a)
    X, Y = as_poly(x), as_poly(y)
    eng = _engine(eds)
    out: dict[Tree, object] = {}
    for t, c in X.items():
        if t.is_leaf:
            raise EdsError("products are defined on nonempty trees")
        for u, d in Y.items():
            if u.is_leaf:
                raise EdsError("products are defined on nonempty trees")
            cd = c * d
            for w, m in eng.basis(side, a, t, u).items():
                out[w] = out[w] + cd * m if w in out else cd * m
    return TreePoly(out)


def tree_mul(eds: FiniteEds):
    """Adapter for the generic relation checker."""
    return lambda side, a, x, y: typed_product(eds, side, a, x, y)


# ---------------------------------------------------------------------------
# comb decompositions and the shuffle formula


@dataclass(frozen=True)
class CombDecomposition:
    side: str  # "right" or "left"
    spine_types: tuple[int, ...]  # α₂ … α_k
    branches: tuple[tuple[int | None, Tree], ...]  # (βᵢ, Tᵢ)

    def reassemble(self) -> Tree:
        k = len(self.branches)
        t = LEAF
        for i in range(k - 1, -1, -1):
            beta, sub = self.branches[i]
            link = self.spine_types[i] if i < k - 1 else None
            if self.side == "right":
                t = _node(sub, beta, link, t)
            else:
                t = _node(t, link, beta, sub)
        return t


def decompose(t: Tree, side: str) -> CombDecomposition:
    """Right comb: walk down right children.  Left comb: walk down left children."""
    if t.is_leaf:
        raise EdsError("cannot decompose the leaf")
    spine, branches = [], []
    cur = t
    while not cur.is_leaf:
        if side == "right":
            branches.append((cur.lt, cur.left))
            nxt, link = cur.right, cur.rt
        else:
            branches.append((cur.rt, cur.right))
            nxt, link = cur.left, cur.lt
        if not nxt.is_leaf:
            spine.append(link)
        cur = nxt
    return CombDecomposition(side, tuple(spine), tuple(branches))


def shuffles(k: int, l: int) -> list[tuple[int, ...]]:
    """(k,l)-shuffles in one-line notation σ(1..k+l), increasing on both blocks."""
    out = []
    for first in itertools.combinations(range(1, k + l + 1), k):
        rest = [v for v in range(1, k + l + 1) if v not in first]
        out.append(tuple(first) + tuple(rest))
    return sorted(out)


def is_shuffle(k: int, l: int, sigma: Sequence[int]) -> bool:
    s = tuple(sigma)
    return (sorted(s) == list(range(1, k + l + 1))
            and all(s[i] < s[i + 1] for i in range(k - 1))
            and all(s[i] < s[i + 1] for i in range(k, k + l - 1)))


def shuffle_side(k: int, sigma: Sequence[int]) -> str:
    """sh_≺ when σ⁻¹(1) = 1, sh_≻ when σ⁻¹(1) = k+1."""
    return PREC if sigma[0] == 1 else SUCC


def d_map(eds: FiniteEds, k: int, l: int, sigma: Sequence[int], types: Sequence[int]) -> tuple[int, ...]:
    """Transport of the type vector (α₂, …, α_{k+l}) along a (k,l)-shuffle."""
    sigma = tuple(sigma)
    if k + l < 1 or not is_shuffle(k, l, sigma):
        raise EdsError(f"{sigma} is not a ({k},{l})-shuffle")
    if len(types) != k + l - 1:
        raise EdsError(f"expected {k + l - 1} types, got {len(types)}")
    return _d(eds, k, l, sigma, tuple(types))


def _d(eds: FiniteEds, k: int, l: int, sigma: tuple[int, ...], al: tuple[int, ...]) -> tuple[int, ...]:
    if k == 0 or l == 0:
        return al
    L, R, TL, TR = eds.tables()
    if sigma[0] == 1:
        if k == 1:
            return al
        sub = tuple(v - 1 for v in sigma[1:])
        a2, ak1 = al[0], al[k - 1]
        head, inner = (L[a2][ak1], TL[a2][ak1]) if sub[0] == 1 else (R[a2][ak1], TR[a2][ak1])
        return (head,) + _d(eds, k - 1, l, sub, al[1:k - 1] + (inner,) + al[k:])
    if l == 1:
        return (al[k - 1],) + al[:k - 1]
    sub = tuple(v - 1 for v in sigma[:k] + sigma[k + 1:])
    ak1, ak2 = al[k - 1], al[k]
    head, inner = (L[ak1][ak2], TL[ak1][ak2]) if sub[0] == 1 else (R[ak1][ak2], TR[ak1][ak2])
    return (head,) + _d(eds, k, l - 1, sub, al[:k - 1] + (inner,) + al[k + 1:])


def ladder_tree(branches: Sequence[tuple[int | None, Tree]], k: int, sigma: Sequence[int],
                types: Sequence[int]) -> Tree:
    """Graft branch σ⁻¹(i) at ladder vertex i: on the left if it came from the
    first factor, on the right otherwise; the ladder continues on the other side."""
    m = len(branches)
    inv = [0] * (m + 1)
    for pos, v in enumerate(sigma, start=1):
        inv[v] = pos
    t = LEAF
    for i in range(m, 0, -1):
        j = inv[i]
        beta, sub = branches[j - 1]
        link = types[i - 1] if i < m else None  # type between vertex i and i+1
        t = _node(sub, beta, link, t) if j <= k else _node(t, link, beta, sub)
    return t


def shuffle_product_trees(eds: FiniteEds, side: str, a: int, t: Tree, u: Tree) -> TreePoly:
    _check_side(eds, side, a)
    if t.is_leaf or u.is_leaf:
        raise EdsError("products are defined on nonempty trees")
    rt, lt = decompose(t, "right"), decompose(u, "left")
    k, l = len(rt.branches), len(lt.branches)
    al = rt.spine_types + (a,) + lt.spine_types
    branches = rt.branches + lt.branches
    out: dict[Tree, Fraction] = {}
    for sigma in shuffles(k, l):
        if shuffle_side(k, sigma) != side:
            continue
        w = ladder_tree(branches, k, sigma, _d(eds, k, l, sigma, al))
        out[w] = out.get(w, 0) + ONE
    return TreePoly(out)


# ---------------------------------------------------------------------------
# named small trees used in examples and tests


def four_leaf_trees(a: int, b: int) -> dict[int, Tree]:
    """The five trees with three internal vertices, indexed 1..5.

    1: left comb ``comb(b)`` grafted left with type a; 2: right comb grafted
    left; 3: left comb grafted right; 4: right comb grafted right; 5: the
    balanced tree with types (a, b).
    """
    return {
        1: _node(left_comb(b), a, None, LEAF),
        2: _node(right_comb(b), a, None, LEAF),
        3: _node(LEAF, None, a, left_comb(b)),
        4: _node(LEAF, None, a, right_comb(b)),
        5: _node(COROLLA, a, b, COROLLA),
    }

