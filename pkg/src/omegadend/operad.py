"""The operad of typed trees: composition, associative and dendriform elements,
and the arity-3 dimension of the Koszul dual."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .dendriform import PREC, SUCC
from .eds import EdsError, FiniteEds, is_nondegenerate
from .linalg import EchelonBasis, rank
from .scalars import Fp, format_scalar, parse_scalar
from .trees import COROLLA, Tree, TreePoly, enumerate_basis, left_comb, right_comb, typed_product

SIDE_SYMBOL = {PREC: "≺", SUCC: "≻"}


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class OperadElement:
    arity: int
    value: TreePoly

    def __post_init__(self) -> None:
        if any(t.size != self.arity for t in self.value.keys()):
            raise EdsError(f"element is not homogeneous of arity {self.arity}")

    def __add__(self, other: "OperadElement") -> "OperadElement":
        if other.arity != self.arity:
            raise EdsError("cannot add elements of different arities")
        return OperadElement(self.arity, self.value + other.value)

    def __sub__(self, other: "OperadElement") -> "OperadElement":
        return self + OperadElement(other.arity, -other.value)


IDENTITY = OperadElement(1, TreePoly.of(COROLLA))


def generator(side: str, a: int) -> Tree:
    """≺_a is the corolla grafted on the right; ≻_a on the left."""
    return right_comb(a) if side == PREC else left_comb(a)


class Arity2Element:
    """Σ a_α ≺_α + Σ b_α ≻_α with coefficients keyed by (side, α)."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: dict[tuple[str, int], Any] | None = None, modulus: int | None = None) -> None:
        self.modulus = modulus
        clean = {}
        for (side, a), c in (coeffs or {}).items():
            if side not in (PREC, SUCC):
                raise EdsError(f"bad side {side!r}")
            if modulus is not None and not isinstance(c, Fp):
                c = Fp(0, modulus) + c
            elif modulus is None and isinstance(c, int):
                c = Fraction(c)
            if c:
                clean[(side, a)] = c
        self.coeffs = clean

    def zero(self) -> Any:
        return Fp(0, self.modulus) if self.modulus else Fraction(0)

    def get(self, side: str, a: int) -> Any:
        return self.coeffs.get((side, a), self.zero())

    def prec(self, a: int) -> Any:
        return self.get(PREC, a)

    def succ(self, a: int) -> Any:
        return self.get(SUCC, a)

    def to_operad(self) -> OperadElement:
        return OperadElement(2, TreePoly({generator(s, a): c for (s, a), c in self.coeffs.items()}))

    def __add__(self, other: "Arity2Element") -> "Arity2Element":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return Arity2Element(out, self.modulus or other.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Arity2Element) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        return format_arity2(self)

    def __repr__(self) -> str:
        return f"Arity2Element({self})"


def format_arity2(m: Arity2Element) -> str:
    if not m.coeffs:
        body = "0"
    else:
        body = ",".join(f"{s}:{a}={format_scalar(c)}" for (s, a), c in sorted(m.coeffs.items()))
    return f"{body} mod {m.modulus}" if m.modulus else body


def parse_arity2(text: str) -> Arity2Element:
    text = text.strip()
    modulus = None
    mt = re.fullmatch(r"(.*?)\s*mod\s+(\d+)", text)
    if mt:
        text, modulus = mt.group(1).strip(), int(mt.group(2))
        if modulus < 2:
            raise EdsError("modulus must be a prime")
    coeffs: dict = {}
    if text and text != "0":
        for part in text.split(","):
            m = re.fullmatch(r"\s*(prec|succ)\s*:\s*(\d+)\s*=\s*([-+]?\d+(?:/\d+)?)\s*", part)
            if not m:
                raise EdsError(f"bad arity-2 term {part!r}; expected prec:<sym>=<coef> or succ:<sym>=<coef>")
            key = (m.group(1), int(m.group(2)))
            c = parse_scalar(m.group(3), modulus)
            coeffs[key] = coeffs[key] + c if key in coeffs else c
    return Arity2Element(coeffs, modulus)


# ---------------------------------------------------------------------------
# composition


class _Composer:
    def __init__(self, eds: FiniteEds) -> None:
        self.eds = eds
        self.memo: dict = {}

    def basis(self, t: Tree, args: tuple[Tree, ...]) -> TreePoly:
        key = (t, args)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._compose(t, args)
            self.memo[key] = hit
        return hit

    def _compose(self, t: Tree, args: tuple[Tree, ...]) -> TreePoly:
        t1, a, b, t2 = t
        i = t1.size
        res = TreePoly.of(args[i])
        if not t1.is_leaf:
            res = typed_product(self.eds, SUCC, a, self.basis(t1, args[:i]), res)
        if not t2.is_leaf:
            res = typed_product(self.eds, PREC, b, res, self.basis(t2, args[i + 1:]))
        return res


_COMPOSERS: dict = {}


def _composer(eds: FiniteEds) -> _Composer:
    if eds not in _COMPOSERS:
        if len(_COMPOSERS) > 64:
            _COMPOSERS.clear()
        _COMPOSERS[eds] = _Composer(eds)
    return _COMPOSERS[eds]


def compose(eds: FiniteEds, t: OperadElement, args: Sequence[OperadElement]) -> OperadElement:
    """t ∘ (args), multilinear; the result has arity Σ arities of args."""
    if len(args) != t.arity:
        raise EdsError(f"arity mismatch: element of arity {t.arity} given {len(args)} arguments")
    comp = _composer(eds)
    total = sum(x.arity for x in args)
    out: dict[Tree, Any] = {}
    arg_terms = [list(x.value.items()) for x in args]
    for tree, c in t.value.items():
        for combo in itertools.product(*arg_terms):
            coef = c
            for _, d in combo:
                coef = coef * d
            if not coef:
                continue
            for w, m in comp.basis(tree, tuple(s for s, _ in combo)).items():
                v = coef * m
                out[w] = out[w] + v if w in out else v
    return OperadElement(total, TreePoly(out))


# ---------------------------------------------------------------------------
# associativity


@dataclass(frozen=True)
class AssocResult:
    associative: bool
    witnesses: tuple = ()

    def __bool__(self) -> bool:
        return self.associative


def _preimages(eds: FiniteEds, which: str) -> dict[tuple[int, int], list[tuple[int, int]]]:
    n = eds.size
    phi = eds.phi_left if which == "left" else eds.phi_right
    pre: dict = {(g, d): [] for g in range(n) for d in range(n)}
    for a, b in itertools.product(range(n), repeat=2):
        pre[phi(a, b)].append((a, b))
    return pre


def associativity_equations(eds: FiniteEds, m: Arity2Element) -> list[tuple[str, tuple[int, int], Any, Any]]:
    """Failures of the general coefficient equations, as (name, (γ,δ), lhs, rhs)."""
    n = eds.size
    pl, pr = _preimages(eds, "left"), _preimages(eds, "right")
    a, b, z = m.prec, m.succ, m.zero()
    fails = []
    for g, d in itertools.product(range(n), repeat=2):
        checks = (
            ("bb", b(g) * b(d), sum((b(x) * b(y) for x, y in pr[(g, d)]), z)),
            ("aa", a(g) * a(d), sum((a(x) * a(y) for x, y in pl[(g, d)]), z)),
            ("ba", b(g) * a(d), sum((b(x) * b(y) for x, y in pl[(g, d)]), z)),
            ("ab", a(g) * b(d), sum((a(x) * a(y) for x, y in pr[(g, d)]), z)),
        )
        for name, lhs, rhs in checks:
            if lhs != rhs:
                fails.append((name, (g, d), lhs, rhs))
    return fails


def associativity_equations_nondegenerate(eds: FiniteEds, m: Arity2Element):
    """The simplified equations valid when φ_← and φ_→ are bijective."""
    n = eds.size
    L, R, TL, TR = eds.tables()
    a, b = m.prec, m.succ
    fails = []
    for x, y in itertools.product(range(n), repeat=2):
        checks = (
            ("bb", b(R[x][y]) * b(TR[x][y]), b(x) * b(y)),
            ("aa", a(L[x][y]) * a(TL[x][y]), a(x) * a(y)),
            ("ba", b(L[x][y]) * a(TL[x][y]), b(x) * b(y)),
            ("ab", a(R[x][y]) * b(TR[x][y]), a(x) * a(y)),
        )
        for name, lhs, rhs in checks:
            if lhs != rhs:
                fails.append((name, (x, y), lhs, rhs))
    return fails


def check_associative(eds: FiniteEds, m: Arity2Element, mode: str = "equations") -> AssocResult:
    if mode == "equations":
        if is_nondegenerate(eds):
            fails = associativity_equations_nondegenerate(eds, m)
        else:
            fails = associativity_equations(eds, m)
        return AssocResult(not fails, tuple(fails))
    if mode == "composition":
        op = m.to_operad()
        diff = compose(eds, op, [op, IDENTITY]) - compose(eds, op, [IDENTITY, op])
        return AssocResult(not diff.value, tuple(diff.value.sorted_items()))
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# dendriform pairs


def dendriform_pair_equations(eds: FiniteEds, p: Arity2Element, s: Arity2Element):
    """Coefficient equations for (p, s) to satisfy the dendriform relations.

    With p = Σ a ≺ + Σ b ≻ and s = Σ c ≺ + Σ d ≻; returns failures as
    (equation number 1..13, (α,β), lhs, rhs).
    """
    n = eds.size
    pl, pr = _preimages(eds, "left"), _preimages(eds, "right")
    a, b, c, d = p.prec, p.succ, s.prec, s.succ
    z = p.zero()

    def S(pre, f):
        return sum((f(x, y) for x, y in pre), z)

    fails = []
    for al, be in itertools.product(range(n), repeat=2):
        L_, R_ = pl[(al, be)], pr[(al, be)]
        eqs = [
            (b(al) * b(be), S(R_, lambda x, y: b(x) * (b(y) + d(y)))),
            (a(al) * (a(be) + c(be)), S(L_, lambda x, y: a(x) * a(y))),
            (b(al) * a(be), S(L_, lambda x, y: b(x) * (b(y) + d(y)))),
            (a(al) * (b(be) + d(be)), S(R_, lambda x, y: a(x) * a(y))),
            (b(al) * c(be), z),
            (z, S(L_, lambda x, y: d(x) * b(y))),
            (b(al) * d(be), S(R_, lambda x, y: d(x) * b(y))),
            (z, S(R_, lambda x, y: c(x) * a(y))),
            (c(al) * a(be), S(L_, lambda x, y: c(x) * a(y))),
            (c(al) * c(be), S(L_, lambda x, y: (a(x) + c(x)) * c(y))),
            (d(al) * (b(be) + d(be)), S(R_, lambda x, y: d(x) * d(y))),
            (c(al) * d(be), S(R_, lambda x, y: (a(x) + c(x)) * c(y))),
            (d(al) * (a(be) + c(be)), S(L_, lambda x, y: d(x) * d(y))),
        ]
        for k, (lhs, rhs) in enumerate(eqs, start=1):
            if lhs != rhs:
                fails.append((k, (al, be), lhs, rhs))
    return fails


def dendriform_pair_relations(eds: FiniteEds, p: Arity2Element, s: Arity2Element):
    """The three relations computed by composition; returns nonzero differences."""
    P, Sv = p.to_operad(), s.to_operad()
    tot = P + Sv
    I = IDENTITY
    rels = [
        ("prec-prec", compose(eds, P, [P, I]) - compose(eds, P, [I, tot])),
        ("prec-succ", compose(eds, P, [Sv, I]) - compose(eds, Sv, [I, P])),
        ("succ-succ", compose(eds, Sv, [I, Sv]) - compose(eds, Sv, [tot, I])),
    ]
    return [(name, diff.value) for name, diff in rels if diff.value]


def check_dendriform_pair(eds: FiniteEds, p: Arity2Element, s: Arity2Element,
                          mode: str = "equations") -> AssocResult:
    if mode == "equations":
        fails = dendriform_pair_equations(eds, p, s)
    elif mode == "composition":
        fails = dendriform_pair_relations(eds, p, s)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return AssocResult(not fails, tuple(fails))


# ---------------------------------------------------------------------------
# brute force over F_p

SEARCH_LIMIT = 10 ** 7


def all_arity2(n: int, p: int) -> Iterable[Arity2Element]:
    keys = [(PREC, a) for a in range(n)] + [(SUCC, a) for a in range(n)]
    for vals in itertools.product(range(p), repeat=len(keys)):
        yield Arity2Element({k: Fp(v, p) for k, v in zip(keys, vals) if v}, p)


def solve_associative_fp(eds: FiniteEds, p: int) -> list[Arity2Element]:
    """Every associative arity-2 element with coefficients in F_p."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise EdsError(f"{p} is not prime")
    if p ** (2 * eds.size) > SEARCH_LIMIT:
        raise EdsError(f"search space {p}^{2 * eds.size} exceeds {SEARCH_LIMIT}")
    return [m for m in all_arity2(eds.size, p) if check_associative(eds, m)]


# ---------------------------------------------------------------------------
# reference table of associative products on two elements

# Each entry lists families; a family is a list of spanning vectors written
# with p/s for ≺/≻ and a/b for the two types.
ASSOCIATIVE_TABLE2: dict[str, list[list[str]]] = {
    "A1": [["pa+sa"]], "A2": [["pa+sa"]],
    "B1": [["pa+sa"]], "B2": [["pa+sa"], ["sa-sb"]],
    "C1": [["pa+sa"]], "C2": [["pa+sb"]],
    "C3": [["pa+sa"], ["pb+sb"]], "C4": [["pb+sa"]],
    "C5": [["pb+sb"]], "D1": [["pa+sa"]],
    "D2": [["pa+sa"], ["pa-pb"]], "E1": [["pa+sa"]],
    "E2": [["pa+sb"]], "E3": [["pa+sa"], ["pb+sb"], ["pa-pb"]],
    "F1": [["pa+sa"]], "F2": [["pa+sb"]],
    "F3": [["pa+sa", "pb+sb"]], "F4": [["pa+sa"], ["pa+pb+sa+sb"]],
    "F5": [["pa+sb"], ["pa+pb+sa+sb"]], "G1": [["pa+sa"]],
    "G2": [["pa+sb"]], "G3": [["pa+sa"], ["pb+sb"], ["sa-sb"]],
    "H1": [["pa+sa"]], "H2": [["pa+sa"], ["pa+pb+sa+sb"]],
}


def parse_table_vector(text: str) -> dict[tuple[str, int], int]:
    out: dict[tuple[str, int], int] = {}
    for sign, side, typ in re.findall(r"([+-]?)([ps])([ab])", text):
        key = (PREC if side == "p" else SUCC, "ab".index(typ))
        out[key] = out.get(key, 0) + (-1 if sign == "-" else 1)
    return out


def table_evaluations(label: str, p: int) -> set[Arity2Element]:
    """All F_p-points of the reference families for one catalog entry."""
    out: set[Arity2Element] = set()
    for fam in ASSOCIATIVE_TABLE2[label]:
        vecs = [parse_table_vector(v) for v in fam]
        for lams in itertools.product(range(p), repeat=len(vecs)):
            acc: dict = {}
            for lam, vec in zip(lams, vecs):
                for k, c in vec.items():
                    acc[k] = acc.get(k, 0) + lam * c
            out.add(Arity2Element({k: Fp(c, p) for k, c in acc.items()}, p))
    return out


# ---------------------------------------------------------------------------
# dimensions


def dim_operad(omega_size: int, n: int) -> int:
    return len(enumerate_basis(omega_size, n))


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


def koszul_relations(eds: FiniteEds) -> list[dict]:
    """Relation vectors in the arity-3 free operad on ⊣_α, ⊢_α.

    A basis element is (outer, α, position, inner, β) meaning
    outer_α ∘ (inner_β, I) for position "L" and outer_α ∘ (I, inner_β) for "R";
    "dl" stands for ⊣ and "dr" for ⊢.
    """
    n = eds.size
    L, R, TL, TR = eds.tables()

    def e(outer, a, pos, inner, b):
        return (outer, a, pos, inner, b)

    rels = []
    for a, b in itertools.product(range(n), repeat=2):
        lhs1 = e("dl", b, "L", "dl", a)
        rels.append({lhs1: 1, e("dl", L[a][b], "R", "dl", TL[a][b]): -1})
        rels.append({lhs1: 1, e("dl", R[a][b], "R", "dr", TR[a][b]): -1})
        rels.append({e("dr", b, "R", "dl", a): 1, e("dl", a, "L", "dr", b): -1})
        lhs3 = e("dr", a, "R", "dr", b)
        rels.append({lhs3: 1, e("dr", R[a][b], "L", "dr", TR[a][b]): -1})
        rels.append({lhs3: 1, e("dr", L[a][b], "L", "dl", TL[a][b]): -1})
    return rels


def koszul_dual_dim3(eds: FiniteEds) -> int:
    n = eds.size
    free_dim = 8 * n * n
    return free_dim - rank(koszul_relations(eds))


# ---------------------------------------------------------------------------
# dendriform subalgebra generated by the α ⊗ ∨ (spot check of generation/freeness)


def generated_span_dims(eds: FiniteEds, max_degree: int) -> dict[int, int]:
    """Dimension, in each degree, of the dendriform subalgebra of KΩ⊗(trees)
    generated by the elements α ⊗ ∨."""
    from .bialgebra import ExtendedElement, scalar_extension_product

    n = eds.size
    spans: dict[int, list] = {1: [ExtendedElement.of(a, COROLLA) for a in range(n)]}
    dims = {1: n}
    for deg in range(2, max_degree + 1):
        basis = EchelonBasis()
        keep = []
        for i in range(1, deg):
            for x in spans[i]:
                for y in spans[deg - i]:
                    for side in (PREC, SUCC):
                        v = scalar_extension_product(eds, side, x, y)
                        if basis.add(dict(v.items())):
                            keep.append(v)
        spans[deg] = keep
        dims[deg] = len(keep)
    return dims
