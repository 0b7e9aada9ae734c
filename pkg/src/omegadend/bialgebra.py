"""Scalar extension 𝕂Ω⊗A of an Ω-dendriform algebra and its dendriform coproducts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator

from .dendriform import PREC, SUCC
from .eds import EdsError, FiniteEds, PreconditionError, inverse_ops, is_commutative, is_nondegenerate
from .scalars import LinComb
from .trees import COROLLA, LEAF, Tree, basis_by_degree, format_tree, typed_product
from .words import TypedWord, enumerate_words, format_word, word_product

ONE = Fraction(1)


def _fmt_basis(x) -> str:
    return format_tree(x) if isinstance(x, Tree) else format_word(x)


def _basis_key(x) -> tuple:
    if isinstance(x, Tree):
        return (0, x.size, x.key())
    return (1, len(x), x.letters, x.types)


def _degree(x) -> int:
    return x.size if isinstance(x, Tree) else len(x)


class ExtendedElement(LinComb):
    """Linear combination of α ⊗ x, keyed by (α, x) with x a tree or a typed word."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return (_basis_key(key[1]), key[0])

    @staticmethod
    def render_key(key):
        return f"({key[0]} ⊗ {_fmt_basis(key[1])})"

    def _same(self, other) -> bool:
        return isinstance(other, ExtendedElement)

    @classmethod
    def of(cls, a: int, x, coef=ONE) -> "ExtendedElement":
        return cls({(a, x): coef})


class TensorPoly(LinComb):
    """Elements of (𝕂Ω⊗A)⊗(𝕂Ω⊗A), keyed by ((α, x), (β, y))."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return tuple(ExtendedElement.sort_key(k) for k in key)

    @staticmethod
    def render_key(key):
        return " ⊗ ".join(ExtendedElement.render_key(k) for k in key)

    def _same(self, other) -> bool:
        return isinstance(other, TensorPoly)


def tensor(x: ExtendedElement, y: ExtendedElement) -> TensorPoly:
    out: dict = {}
    for k1, c in x.items():
        for k2, d in y.items():
            out[(k1, k2)] = c * d
    return TensorPoly(out)


# ---------------------------------------------------------------------------
# scalar extension products


def _underlying(x) -> type | None:
    kinds = {type(k[1]) for k in x.keys()}
    if len(kinds) > 1:
        raise EdsError("element mixes trees and words")
    return kinds.pop() if kinds else None


def scalar_extension_product(eds: FiniteEds, side: str, x: ExtendedElement, y: ExtendedElement) -> ExtendedElement:
    """(α⊗u)≺(β⊗v) = (α←β)⊗(u ≺_{α◁β} v), and likewise for ≻ with → and ▷."""
    kx, ky = _underlying(x), _underlying(y)
    if kx is not None and ky is not None and kx is not ky:
        raise EdsError("cannot multiply elements over different algebras")
    L, R, TL, TR = eds.tables()
    outer, inner = (L, TL) if side == PREC else (R, TR)
    mul = typed_product if (kx or ky) is Tree else word_product
    out: dict = {}
    for (a, u), c in x.items():
        for (b, v), d in y.items():
            g = outer[a][b]
            for w, m in mul(eds, side, inner[a][b], u, v).items():
                k = (g, w)
                val = c * d * m
                out[k] = out[k] + val if k in out else val
    return ExtendedElement(out)


def extended_mul(eds: FiniteEds) -> Callable[[str, Any, Any], ExtendedElement]:
    return lambda side, x, y: scalar_extension_product(eds, side, x, y)


# ---------------------------------------------------------------------------
# compatibility formulas


def _apply_left(t: TensorPoly, f: Callable[[ExtendedElement], ExtendedElement]) -> TensorPoly:
    """Σ f(x') ⊗ x''."""
    out = TensorPoly()
    for (k1, k2), c in t.items():
        out = out + tensor(f(ExtendedElement({k1: c})), ExtendedElement({k2: ONE}))
    return out


def _apply_right(t: TensorPoly, f: Callable[[ExtendedElement], ExtendedElement]) -> TensorPoly:
    """Σ x' ⊗ f(x'')."""
    out = TensorPoly()
    for (k1, k2), c in t.items():
        out = out + tensor(ExtendedElement({k1: c}), f(ExtendedElement({k2: ONE})))
    return out


def compatibility_rhs(prod, delta, side: str, x: ExtendedElement, y: ExtendedElement) -> TensorPoly:
    """The value Δ(x≺y) or Δ(x≻y) must take, given Δ on x and y."""
    dx, dy = delta(x), delta(y)

    def dot(u, v):
        return prod(PREC, u, v) + prod(SUCC, u, v)

    if side == PREC:
        res = tensor(x, y)
        res = res + _apply_left(dx, lambda u: prod(PREC, u, y))
        res = res + _apply_right(dx, lambda u: dot(u, y))
        res = res + _apply_left(dy, lambda v: prod(PREC, x, v))
    else:
        res = tensor(y, x)
        res = res + _apply_left(dx, lambda u: prod(SUCC, u, y))
        res = res + _apply_right(dy, lambda v: dot(x, v))
        res = res + _apply_left(dy, lambda v: prod(SUCC, x, v))
    for (k1, k2), c in dx.items():
        for (l1, l2), d in dy.items():
            left = prod(side, ExtendedElement({k1: c}), ExtendedElement({l1: d}))
            right = dot(ExtendedElement({k2: ONE}), ExtendedElement({l2: ONE}))
            res = res + tensor(left, right)
    return res


# ---------------------------------------------------------------------------
# coproduct on trees, recursive construction


@dataclass(frozen=True)
class Factorization:
    """α⊗T written as a dendriform word in smaller elements and one generator."""

    left: tuple[int, Tree] | None  # β▶α ⊗ T₁
    generator: int  # symbol carried by the corolla
    right: tuple[int, Tree] | None  # α◀γ ⊗ T₂

    def evaluate(self, eds: FiniteEds) -> ExtendedElement:
        mid = ExtendedElement.of(self.generator, COROLLA)
        if self.right is not None:
            mid = scalar_extension_product(eds, PREC, mid, ExtendedElement.of(*self.right))
        if self.left is not None:
            mid = scalar_extension_product(eds, SUCC, ExtendedElement.of(*self.left), mid)
        return mid


def factorize(eds: FiniteEds, a: int, t: Tree) -> Factorization:
    """Factor α ⊗ (T₁ ∨^β_γ T₂) as (β▶α ⊗ T₁) ≻ ((β↷α)↶γ ⊗ ∨) ≺ (α◀γ ⊗ T₂).

    A missing side is simply dropped: the generator symbol becomes α↶γ when
    T₁ is a leaf and β↷α when T₂ is a leaf.
    """
    if t.is_leaf:
        raise EdsError("the leaf has no factorization")
    ops = inverse_ops(eds)
    t1, b, g, t2 = t
    gen = a
    left = right = None
    if not t1.is_leaf:
        left = (ops.tri_right[b][a], t1)
        gen = ops.up_right[b][a]
    if not t2.is_leaf:
        right = (ops.tri_left[a][g], t2)
        gen = ops.up_left[gen][g]
    return Factorization(left, gen, right)


class _TreeCoproduct:
    def __init__(self, eds: FiniteEds) -> None:
        self.eds = eds
        self.memo: dict = {}
        self.prod = extended_mul(eds)

    def basis(self, a: int, t: Tree) -> TensorPoly:
        key = (a, t)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._compute(a, t)
            self.memo[key] = hit
        return hit

    def delta(self, x: ExtendedElement) -> TensorPoly:
        out = TensorPoly()
        for (a, t), c in x.items():
            out = out + self.basis(a, t).scale(c)
        return out

    def _compute(self, a: int, t: Tree) -> TensorPoly:
        f = factorize(self.eds, a, t)
        if f.left is None and f.right is None:
            return TensorPoly()
        mid = ExtendedElement.of(f.generator, COROLLA)
        if f.right is not None:
            y = ExtendedElement.of(*f.right)
            if f.left is None:
                return compatibility_rhs(self.prod, self.delta, PREC, mid, y)
            mid = self.prod(PREC, mid, y)
        x = ExtendedElement.of(*f.left)
        return compatibility_rhs(self.prod, self.delta, SUCC, x, mid)


_COPRODUCTS: dict = {}


def _tree_coproduct(eds: FiniteEds) -> _TreeCoproduct:
    if eds not in _COPRODUCTS:
        if len(_COPRODUCTS) > 64:
            _COPRODUCTS.clear()
        _COPRODUCTS[eds] = _TreeCoproduct(eds)
    return _COPRODUCTS[eds]


# ---------------------------------------------------------------------------
# coproduct on trees, admissible cuts


@dataclass(frozen=True)
class AdmissibleCut:
    """Cut edges, as root-to-edge paths of 'L'/'R' steps, ordered left to right."""

    edges: tuple[tuple[str, ...], ...]


def _cut_options(t: Tree, sym: int, path: tuple[str, ...], ops):
    """Yield (remaining tree, [(edge path, decoration, subtree)]) for all cuts of t,
    including the empty one; sym is the decoration reached at t."""
    if t.is_leaf:
        yield t, []
        return
    t1, b, g, t2 = t
    lefts = [(t1, [])]
    if not t1.is_leaf:
        s1 = ops.tri_right[b][sym]
        lefts = list(_cut_options(t1, s1, path + ("L",), ops)) + [(LEAF, [(path + ("L",), s1, t1)])]
    rights = [(t2, [])]
    if not t2.is_leaf:
        s2 = ops.tri_left[sym][g]
        rights = list(_cut_options(t2, s2, path + ("R",), ops)) + [(LEAF, [(path + ("R",), s2, t2)])]
    for (r1, p1), (r2, p2) in itertools.product(lefts, rights):
        rest = Tree(r1, None if r1.is_leaf else b, None if r2.is_leaf else g, r2)
        yield rest, p1 + p2


def admissible_cuts(eds: FiniteEds, a: int, t: Tree) -> Iterator[tuple[AdmissibleCut, Tree, list[tuple[int, Tree]]]]:
    """(cut, R^c(T), [T_e(α) for e in c, left to right]) over all admissible cuts."""
    ops = inverse_ops(eds)
    for rest, pieces in _cut_options(t, a, (), ops):
        if pieces:
            yield (AdmissibleCut(tuple(p for p, _, _ in pieces)), rest,
                   [(s, sub) for _, s, sub in pieces])


def _coproduct_cuts(eds: FiniteEds, a: int, t: Tree) -> TensorPoly:
    prod = extended_mul(eds)
    out = TensorPoly()
    for _, rest, pieces in admissible_cuts(eds, a, t):
        right = ExtendedElement.of(*pieces[0])
        for piece in pieces[1:]:
            nxt = ExtendedElement.of(*piece)
            right = prod(PREC, right, nxt) + prod(SUCC, right, nxt)
        out = out + tensor(ExtendedElement.of(a, rest), right)
    return out


def _require_nondegenerate(eds: FiniteEds) -> None:
    if not is_nondegenerate(eds):
        raise PreconditionError("the coproduct requires a nondegenerate structure")


def coproduct_tree(eds: FiniteEds, x: ExtendedElement, mode: str = "recursive") -> TensorPoly:
    _require_nondegenerate(eds)
    if _underlying(x) not in (Tree, None):
        raise EdsError("expected an element over trees")
    if mode == "recursive":
        return _tree_coproduct(eds).delta(x)
    if mode == "cuts":
        out = TensorPoly()
        for (a, t), c in x.items():
            out = out + _coproduct_cuts(eds, a, t).scale(c)
        return out
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# coproduct on words


def _word_coproduct_basis(eds: FiniteEds, a: int, w: TypedWord) -> TensorPoly:
    BL = inverse_ops(eds).tri_left
    types = (a,) + w.types  # α₁, α₂, …, α_n
    n = len(w)
    out: dict = {}
    chain = a
    for i in range(1, n):
        chain = BL[chain][types[i]]  # α₁◀…◀α_{i+1}
        left = (a, TypedWord(w.letters[:i], types[1:i]))
        right = (chain, TypedWord(w.letters[i:], types[i + 1:]))
        out[(left, right)] = ONE
    return TensorPoly(out)


class _WordCoproduct:
    """Δ forced by primitivity of α⊗v, via α⊗(v₁ α₂ w) = (α↶α₂ ⊗ v₁) ≺ (α◀α₂ ⊗ w)."""

    def __init__(self, eds: FiniteEds) -> None:
        self.eds = eds
        self.ops = inverse_ops(eds)
        self.memo: dict = {}
        self.prod = extended_mul(eds)

    def basis(self, a: int, w: TypedWord) -> TensorPoly:
        key = (a, w)
        hit = self.memo.get(key)
        if hit is None:
            if len(w) == 1:
                hit = TensorPoly()
            else:
                g = w.types[0]
                x = ExtendedElement.of(self.ops.up_left[a][g], TypedWord(w.letters[:1], ()))
                y = ExtendedElement.of(self.ops.tri_left[a][g], w.tail())
                hit = compatibility_rhs(self.prod, self.delta, PREC, x, y)
            self.memo[key] = hit
        return hit

    def delta(self, x: ExtendedElement) -> TensorPoly:
        out = TensorPoly()
        for (a, w), c in x.items():
            out = out + self.basis(a, w).scale(c)
        return out


_WORD_COPRODUCTS: dict = {}

WORD_MODES = ("recursive", "formula")


def coproduct_word(eds: FiniteEds, x: ExtendedElement, mode: str = "recursive", *,
                   check: bool = True) -> TensorPoly:
    """Coproduct on 𝕂Ω⊗(typed words) with every α⊗v primitive.

    "formula" is the closed deconcatenation sum whose right leg carries
    α₁◀…◀α_{i+1} and whose left leg keeps α₁; "recursive" is forced by the
    compatibility with ≺.  With check=False the commutativity precondition is
    skipped, which is how the negative direction is exhibited.
    """
    _require_nondegenerate(eds)
    if check and not is_commutative(eds):
        raise PreconditionError("the word coproduct requires a commutative structure")
    if _underlying(x) not in (TypedWord, None):
        raise EdsError("expected an element over words")
    if mode == "recursive":
        if eds not in _WORD_COPRODUCTS:
            if len(_WORD_COPRODUCTS) > 64:
                _WORD_COPRODUCTS.clear()
            _WORD_COPRODUCTS[eds] = _WordCoproduct(eds)
        return _WORD_COPRODUCTS[eds].delta(x)
    if mode != "formula":
        raise ValueError(f"unknown mode {mode!r}")
    out = TensorPoly()
    for (a, w), c in x.items():
        out = out + _word_coproduct_basis(eds, a, w).scale(c)
    return out


# ---------------------------------------------------------------------------
# checks


@dataclass(frozen=True)
class CompatFailure:
    kind: str  # "prec", "succ", "coassoc" or "grading"
    x: Any
    y: Any
    expected: Any
    actual: Any


@dataclass
class BialgebraReport:
    checked: int
    failures: list[CompatFailure]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def extended_basis(eds: FiniteEds, algebra: str, max_degree: int, alphabet: str = "xy") -> dict[int, list]:
    n = eds.size
    if algebra == "trees":
        by = basis_by_degree(n, max_degree)
    elif algebra == "words":
        by = {d: enumerate_words(alphabet, n, d) for d in range(1, max_degree + 1)}
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    return {d: [ExtendedElement.of(a, b) for b in bs for a in range(n)] for d, bs in by.items()}


def _triple(t: TensorPoly, delta, which: str) -> dict:
    out: dict = {}
    for (k1, k2), c in t.items():
        if which == "left":
            for (j1, j2), d in delta(ExtendedElement({k1: ONE})).items():
                key = (j1, j2, k2)
                out[key] = out.get(key, 0) + c * d
        else:
            for (j1, j2), d in delta(ExtendedElement({k2: ONE})).items():
                key = (k1, j1, j2)
                out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def coproduct_function(eds: FiniteEds, algebra: str, mode: str = "recursive"):
    if algebra == "trees":
        return lambda x: coproduct_tree(eds, x, mode)
    return lambda x: coproduct_word(eds, x, mode, check=False)


def check_coassociative(eds: FiniteEds, algebra: str, bound: int, mode: str = "recursive") -> BialgebraReport:
    """(Δ⊗id)Δ = (id⊗Δ)Δ and homogeneity on basis elements up to degree `bound`."""
    delta = coproduct_function(eds, algebra, mode)
    fails: list[CompatFailure] = []
    checked = 0
    for d, elems in extended_basis(eds, algebra, bound).items():
        for x in elems:
            checked += 1
            dx = delta(x)
            for (k1, k2), _ in dx.items():
                if _degree(k1[1]) + _degree(k2[1]) != d:
                    fails.append(CompatFailure("grading", x, None, d, dx))
                    break
            lhs, rhs = _triple(dx, delta, "left"), _triple(dx, delta, "right")
            if lhs != rhs:
                fails.append(CompatFailure("coassoc", x, None, rhs, lhs))
    return BialgebraReport(checked, fails)


def check_bialgebra_compat(eds: FiniteEds, algebra: str, bound: int, *, mode: str = "recursive",
                           stop_at_first: bool = False) -> BialgebraReport:
    """Both compatibilities on all basis pairs of total degree ≤ bound, plus coassociativity."""
    delta = coproduct_function(eds, algebra, mode)
    prod = extended_mul(eds)
    basis = extended_basis(eds, algebra, bound)
    fails: list[CompatFailure] = []
    checked = 0
    for i, j in itertools.product(basis, repeat=2):
        if i + j > bound:
            continue
        for x, y in itertools.product(basis[i], basis[j]):
            for side in (PREC, SUCC):
                checked += 1
                actual = delta(prod(side, x, y))
                expected = compatibility_rhs(prod, delta, side, x, y)
                if actual != expected:
                    fails.append(CompatFailure(side, x, y, expected, actual))
                    if stop_at_first:
                        return BialgebraReport(checked, fails)
    co = check_coassociative(eds, algebra, bound, mode)
    return BialgebraReport(checked + co.checked, fails + co.failures)


@dataclass(frozen=True)
class Discrepancy:
    eds: str
    tree: Any  # a Tree, or a TypedWord for the word coproduct
    alpha: int
    recursive_term: TensorPoly
    cuts_term: TensorPoly

    def record(self) -> str:
        return (f"({self.eds}, {_fmt_basis(self.tree)}, {self.alpha}, "
                f"{self.recursive_term}, {self.cuts_term})")


def cuts_discrepancies(eds: FiniteEds, max_degree: int, algebra: str = "trees") -> list[Discrepancy]:
    """Every α⊗x (deg x ≤ max_degree) on which the recursive coproduct and the
    closed formula (admissible cuts, or deconcatenation for words) differ.

    The recorded terms are the parts of each side not shared with the other.
    """
    _require_nondegenerate(eds)
    closed = "cuts" if algebra == "trees" else "formula"
    out = []
    for d, elems in extended_basis(eds, algebra, max_degree).items():
        for x in elems:
            (a, t), = x.keys()
            if algebra == "trees":
                rec, cut = coproduct_tree(eds, x), coproduct_tree(eds, x, closed)
            else:
                rec = coproduct_word(eds, x, check=False)
                cut = coproduct_word(eds, x, closed, check=False)
            if rec != cut:
                common = {k: v for k, v in rec.items() if cut.coefficient(k) == v}
                only_rec = TensorPoly({k: v for k, v in rec.items() if k not in common})
                only_cut = TensorPoly({k: v for k, v in cut.items() if k not in common})
                out.append(Discrepancy(eds.label or "?", t, a, only_rec, only_cut))
    return out


@dataclass(frozen=True)
class Collision:
    """Two distinct generator pairs with the same product on one side."""

    side: str
    first: tuple[int, int]
    second: tuple[int, int]
    product: ExtendedElement


def generator_collision(eds: FiniteEds) -> Collision | None:
    """A witness that no coproduct with primitive α⊗∨ can satisfy Δ(x≺y) = x⊗y
    (resp. Δ(x≻y) = y⊗x), or None when both φ maps are injective."""
    n = eds.size
    for side in (PREC, SUCC):
        seen: dict = {}
        for a, b in itertools.product(range(n), repeat=2):
            p = scalar_extension_product(eds, side, ExtendedElement.of(a, COROLLA), ExtendedElement.of(b, COROLLA))
            if p in seen:
                return Collision(side, seen[p], (a, b), p)
            seen[p] = (a, b)
    return None
