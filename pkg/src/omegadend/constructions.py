"""Standard constructions and the named catalog of structures on two elements."""

from __future__ import annotations

import itertools
from typing import Sequence

from .eds import (
    ConstructionError,
    FiniteEds,
    OpTable,
    check_eds,
    make_table,
    table_from_function,
)


def associativity_witness(t: OpTable) -> tuple[int, int, int] | None:
    n = len(t)
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return (a, b, c)
    return None


def is_associative(t: OpTable) -> bool:
    return associativity_witness(t) is None


def group_identity(t: OpTable) -> int | None:
    n = len(t)
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            return e
    return None


def check_group(t: OpTable) -> tuple[int, list[int]]:
    """Return (identity, inverse list) or raise ConstructionError with a witness."""
    w = associativity_witness(t)
    if w is not None:
        raise ConstructionError("table is not associative", w)
    e = group_identity(t)
    if e is None:
        raise ConstructionError("table has no two-sided identity", None)
    inv = []
    for x in range(len(t)):
        ys = [y for y in range(len(t)) if t[x][y] == e and t[y][x] == e]
        if not ys:
            raise ConstructionError("element has no inverse", x)
        inv.append(ys[0])
    return e, inv


def cyclic_group(n: int) -> OpTable:
    return table_from_function(n, lambda a, b: (a + b) % n)


def matching(n: int) -> FiniteEds:
    """Left/right projections for ←/→ with α◁β = β and α▷β = α."""
    return FiniteEds(
        table_from_function(n, lambda a, b: a),
        table_from_function(n, lambda a, b: b),
        table_from_function(n, lambda a, b: b),
        table_from_function(n, lambda a, b: a),
        label=f"matching({n})",
    )


def diassociative_pair(left: OpTable, right: OpTable) -> FiniteEds:
    """Any diassociative pair with α◁β = β and α▷β = α; checked."""
    left = make_table(left)
    right = make_table(right, len(left))
    n = len(left)
    eds = FiniteEds(left, right,
                    table_from_function(n, lambda a, b: b),
                    table_from_function(n, lambda a, b: a))
    rep = check_eds(eds, diassociative_only=True)
    if not rep.passed:
        v = rep.violations[0]
        raise ConstructionError(f"pair violates axiom {v.axiom}", v.witness)
    return eds


def family(star: OpTable, label: str = "") -> FiniteEds:
    """Both ← and → equal to an associative product."""
    star = make_table(star)
    w = associativity_witness(star)
    if w is not None:
        raise ConstructionError("product is not associative", w)
    n = len(star)
    return FiniteEds(star, star,
                     table_from_function(n, lambda a, b: b),
                     table_from_function(n, lambda a, b: a),
                     label=label or "family")


def morphism(left: OpTable, right: OpTable, phi_tl: Sequence[int], phi_tr: Sequence[int],
             label: str = "") -> FiniteEds:
    """α◁β = φ◁(β) and α▷β = φ▷(α) for idempotent-compatible endomorphisms φ◁, φ▷."""
    base = diassociative_pair(left, right)
    n = base.size
    f, g = list(phi_tl), list(phi_tr)
    if len(f) != n or len(g) != n or any(not 0 <= x < n for x in f + g):
        raise ConstructionError("maps must send 0..n-1 into 0..n-1")
    for x in range(n):
        for name, lhs, rhs in (("φ◁ = φ◁∘φ◁", f[x], f[f[x]]), ("φ◁ = φ◁∘φ▷", f[x], f[g[x]]),
                               ("φ▷ = φ▷∘φ◁", g[x], g[f[x]]), ("φ▷ = φ▷∘φ▷", g[x], g[g[x]])):
            if lhs != rhs:
                raise ConstructionError(f"condition {name} fails", x)
    for h, name in ((f, "φ◁"), (g, "φ▷")):
        for a, b in itertools.product(range(n), repeat=2):
            for op in (base.left, base.right):
                if h[op[a][b]] != op[h[a]][h[b]]:
                    raise ConstructionError(f"{name} is not a morphism", (a, b))
    return FiniteEds(base.left, base.right,
                     table_from_function(n, lambda a, b: f[b]),
                     table_from_function(n, lambda a, b: g[a]),
                     label=label or "morphism")


def star(group: OpTable, k: int = 1, theta: Sequence[int] = (0,), label: str = "") -> FiniteEds:
    """The nondegenerate construction on H×K from a group H, a set K and θ: K → H.

    Element (h, j) is encoded as ``h * k + j``.
    """
    group = make_table(group)
    _, inv = check_group(group)
    if len(theta) != k or any(not 0 <= t < len(group) for t in theta):
        raise ConstructionError("theta must map each of the k elements into H", tuple(theta))
    h = len(group)
    n = h * k
    mul = group

    def split(x: int) -> tuple[int, int]:
        return divmod(x, k)

    def join(a: int, j: int) -> int:
        return a * k + j

    def tl(x: int, y: int) -> int:
        (a, _), (b, j) = split(x), split(y)
        return join(mul[inv[a]][b], j)

    def tr(x: int, y: int) -> int:
        (a, i), (b, j) = split(x), split(y)
        return join(mul[mul[theta[j]][inv[b]]][a], i)

    return FiniteEds(
        table_from_function(n, lambda x, y: x),
        table_from_function(n, lambda x, y: y),
        table_from_function(n, tl),
        table_from_function(n, tr),
        label=label or "star",
    )


def build_standard(kind: str, **params) -> FiniteEds:
    builders = {"matching": matching, "family": family, "morphism": morphism, "star": star}
    if kind not in builders:
        raise ValueError(f"unknown construction {kind!r}")
    return builders[kind](**params)


# ---------------------------------------------------------------------------
# cardinality-2 catalog (a -> 0, b -> 1)

M_A = ((0, 0), (0, 0))
M_B = ((1, 1), (1, 1))
TL_STD = ((0, 1), (0, 1))  # α◁β = β
TR_STD = ((0, 0), (1, 1))  # α▷β = α
M_1 = ((0, 1), (1, 0))
M_2 = ((1, 0), (0, 1))

STAR_A = ((0, 0), (0, 0))
STAR_C = ((0, 0), (0, 1))
STAR_E = ((0, 0), (1, 1))
STAR_G = ((0, 1), (0, 1))
STAR_H = ((0, 1), (1, 0))

FAMILY_PAIRS = {
    "A": (STAR_A, STAR_A),
    "B": (STAR_A, STAR_G),
    "C": (STAR_C, STAR_C),
    "D": (STAR_E, STAR_A),
    "E": (STAR_E, STAR_E),
    "F": (STAR_E, STAR_G),
    "G": (STAR_G, STAR_G),
    "H": (STAR_H, STAR_H),
}

_STD = (TL_STD, TR_STD)
CATALOG2_TABLES: list[tuple[str, tuple[OpTable, OpTable]]] = [
    ("A1", (M_A, M_A)), ("A2", _STD),
    ("B1", (M_A, M_A)), ("B2", _STD),
    ("C1", (M_A, M_A)), ("C2", (M_A, M_B)), ("C3", _STD), ("C4", (M_B, M_A)), ("C5", (M_B, M_B)),
    ("D1", (M_A, M_A)), ("D2", _STD),
    ("E1", (M_A, M_A)), ("E2", (M_A, M_B)), ("E3", _STD),
    ("F1", (M_A, M_A)), ("F2", (M_A, M_B)), ("F3", _STD), ("F4", (M_1, M_1)), ("F5", (M_1, M_2)),
    ("G1", (M_A, M_A)), ("G2", (M_A, M_B)), ("G3", _STD),
    ("H1", (M_A, M_A)), ("H2", _STD),
]

# reference corank of each entry
CATALOG2_CORANK = {
    "A1": 3, "A2": 1, "B1": 2, "B2": 0, "C1": 2, "C2": 2, "C3": 0, "C4": 2, "C5": 2,
    "D1": 2, "D2": 0, "E1": 2, "E2": 2, "E3": 0, "F1": 1, "F2": 1, "F3": 0, "F4": 0,
    "F5": 0, "G1": 2, "G2": 2, "G3": 0, "H1": 2, "H2": 0,
}


def catalog2() -> list[FiniteEds]:
    out = []
    for label, (tl, tr) in CATALOG2_TABLES:
        left, right = FAMILY_PAIRS[label[0]]
        out.append(FiniteEds(left, right, tl, tr, label=label))
    return out


def catalog_entry(label: str) -> FiniteEds:
    for e in catalog2():
        if e.label == label:
            return e
    raise KeyError(label)
