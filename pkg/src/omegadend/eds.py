"""Finite extended diassociative semigroups stored as operation tables.

The carrier of a size-``n`` structure is ``{0, ..., n-1}``.  The four tables
are ``left`` (←), ``right`` (→), ``tri_left`` (◁) and ``tri_right`` (▷); row
index is the left argument.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

OpTable = tuple[tuple[int, ...], ...]


class EdsError(ValueError):
    """Base class for errors raised by this package."""


class StructureError(EdsError):
    """Malformed tables (wrong shape or out-of-range entries)."""


class ConstructionError(EdsError):
    """A constructor's hypothesis fails; ``witness`` holds the offending inputs."""

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message if witness is None else f"{message}: witness {witness}")
        self.witness = witness


class PreconditionError(EdsError):
    """An operation was called on a structure outside its domain."""


def make_table(rows: Iterable[Iterable[int]], size: int | None = None) -> OpTable:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(t) if size is None else size
    if len(t) != n or any(len(r) != n for r in t):
        raise StructureError(f"table must be {n}x{n}")
    for i, r in enumerate(t):
        for j, x in enumerate(r):
            if not 0 <= x < n:
                raise StructureError(f"entry ({i},{j}) = {x} outside 0..{n - 1}")
    return t


def table_from_function(n: int, f: Callable[[int, int], int]) -> OpTable:
    return tuple(tuple(f(i, j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FiniteEds:
    """Four operation tables on ``{0..size-1}``; ``label`` is cosmetic."""

    left: OpTable
    right: OpTable
    tri_left: OpTable
    tri_right: OpTable
    label: str = field(default="", compare=False)
    size: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.left)
        for name in ("left", "right", "tri_left", "tri_right"):
            object.__setattr__(self, name, make_table(getattr(self, name), n))
        if n < 1:
            raise StructureError("size must be positive")
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "_hash", hash(self.tables()))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def tables(self) -> tuple[OpTable, OpTable, OpTable, OpTable]:
        return (self.left, self.right, self.tri_left, self.tri_right)

    def with_label(self, label: str) -> "FiniteEds":
        return FiniteEds(*self.tables(), label=label)

    def phi_left(self, a: int, b: int) -> tuple[int, int]:
        return (self.left[a][b], self.tri_left[a][b])

    def phi_right(self, a: int, b: int) -> tuple[int, int]:
        return (self.right[a][b], self.tri_right[a][b])


# ---------------------------------------------------------------------------
# axiom checking


@dataclass(frozen=True)
class Violation:
    axiom: int | str
    witness: tuple[int, int, int]
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def from_violations(cls, vs: Sequence[Violation]) -> "AxiomReport":
        return cls(passed=not vs, violations=tuple(vs))


def _pointwise_equalities(L: OpTable, R: OpTable, TL: OpTable, TR: OpTable):
    """(axiom id, callable(a,b,c) -> list of (lhs, rhs)) for the thirteen axioms."""

    def ax1(a, b, c):
        lhs = L[L[a][b]][c]
        return [(lhs, L[a][L[b][c]]), (lhs, L[a][R[b][c]])]

    def ax2(a, b, c):
        return [(L[R[a][b]][c], R[a][L[b][c]])]

    def ax3(a, b, c):
        lhs = R[R[a][b]][c]
        return [(lhs, R[L[a][b]][c]), (lhs, R[a][R[b][c]])]

    def ax4(a, b, c):
        return [(TR[a][L[b][c]], TR[a][b])]

    def ax5(a, b, c):
        return [(TL[R[a][b]][c], TL[b][c])]

    def ax6(a, b, c):
        return [(L[TL[a][b]][TL[L[a][b]][c]], TL[a][L[b][c]])]

    def ax7(a, b, c):
        return [(TL[TL[a][b]][TL[L[a][b]][c]], TL[b][c])]

    def ax8(a, b, c):
        return [(R[TL[a][b]][TL[L[a][b]][c]], TL[a][R[b][c]])]

    def ax9(a, b, c):
        return [(TR[TL[a][b]][TL[L[a][b]][c]], TR[b][c])]

    def ax10(a, b, c):
        return [(L[TR[a][R[b][c]]][TR[b][c]], TR[L[a][b]][c])]

    def ax11(a, b, c):
        return [(TL[TR[a][R[b][c]]][TR[b][c]], TL[a][b])]

    def ax12(a, b, c):
        return [(R[TR[a][R[b][c]]][TR[b][c]], TR[R[a][b]][c])]

    def ax13(a, b, c):
        return [(TR[TR[a][R[b][c]]][TR[b][c]], TR[a][b])]

    return [(1, ax1), (2, ax2), (3, ax3), (4, ax4), (5, ax5), (6, ax6), (7, ax7),
            (8, ax8), (9, ax9), (10, ax10), (11, ax11), (12, ax12), (13, ax13)]


def _map_form_equalities(L: OpTable, R: OpTable, TL: OpTable, TR: OpTable):
    """Map-form axioms: equalities of maps on triples, built from φ_←, φ_→ and the flip."""

    def phl(x, y):
        return (L[x][y], TL[x][y])

    def phr(x, y):
        return (R[x][y], TR[x][y])

    # helpers acting on triples
    def first(f):
        return lambda t: (*f(t[0], t[1]), t[2])

    def second(f):
        return lambda t: (t[0], *f(t[1], t[2]))

    def swap_first(t):
        return (t[1], t[0], t[2])

    def swap_second(t):
        return (t[0], t[2], t[1])

    def chain(*maps):
        # rightmost map acts first, as in composition notation
        def run(t):
            for m in reversed(maps):
                t = m(t)
            return t
        return run

    pairs = {
        "map1": (chain(swap_first, second(phl), swap_first, first(phr)),
                   chain(first(phr), second(phl))),
        "map2": (chain(second(phl), swap_first, second(phl), swap_first, first(phl)),
                   chain(first(phl), second(phl))),
        "map3": (chain(second(phr), swap_first, second(phl), swap_first, first(phl)),
                   chain(first(phl), second(phr))),
        "map4": (chain(second(phl), first(phr), second(phr)),
                   chain(first(phr), swap_second, first(phl))),
        "map5": (chain(second(phr), first(phr), second(phr)),
                   chain(first(phr), swap_second, first(phr))),
    }

    def wrap(lhs, rhs):
        return lambda a, b, c: [(lhs((a, b, c)), rhs((a, b, c)))]

    return [(k, wrap(*v)) for k, v in pairs.items()]


def _run_checks(n: int, checks, stop_at_first: bool) -> AxiomReport:
    found: list[Violation] = []
    for axiom, fn in checks:
        hit = None
        for a, b, c in itertools.product(range(n), repeat=3):
            for lhs, rhs in fn(a, b, c):
                if lhs != rhs:
                    hit = Violation(axiom, (a, b, c), lhs, rhs)
                    break
            if hit:
                break
        if hit:
            found.append(hit)
            if stop_at_first:
                break
    return AxiomReport.from_violations(found)


def check_eds(eds: FiniteEds, mode: str = "pointwise", *, stop_at_first: bool = False,
              diassociative_only: bool = False) -> AxiomReport:
    """Check the axioms; report the first witness (lexicographic) per failing axiom.

    ``pointwise`` evaluates the thirteen axioms symbol by symbol; ``map_form`` compares
    the five composite maps on triples.  With ``diassociative_only`` only the
    (←, →) axioms are checked (pointwise mode).
    """
    tables = eds.tables()
    if mode == "pointwise":
        checks = _pointwise_equalities(*tables)
        if diassociative_only:
            checks = checks[:3]
    elif mode == "map_form":
        if diassociative_only:
            raise ValueError("map_form mode always involves all four tables")
        checks = _map_form_equalities(*tables)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _run_checks(eds.size, checks, stop_at_first)


def is_eds(eds: FiniteEds) -> bool:
    return check_eds(eds, stop_at_first=True).passed


# ---------------------------------------------------------------------------
# derived structure


def opposite(eds: FiniteEds) -> FiniteEds:
    n = eds.size
    L, R, TL, TR = eds.tables()
    return FiniteEds(
        table_from_function(n, lambda a, b: R[b][a]),
        table_from_function(n, lambda a, b: L[b][a]),
        table_from_function(n, lambda a, b: TR[b][a]),
        table_from_function(n, lambda a, b: TL[b][a]),
        label=f"{eds.label}^op" if eds.label else "",
    )


def is_commutative(eds: FiniteEds) -> bool:
    n = eds.size
    return all(eds.right[a][b] == eds.left[b][a] and eds.tri_right[a][b] == eds.tri_left[b][a]
               for a in range(n) for b in range(n))


@dataclass(frozen=True)
class NondegeneracyReport:
    left_bijective: bool
    right_bijective: bool
    inv_left: tuple[OpTable, OpTable] | None  # (↶, ◀)
    inv_right: tuple[OpTable, OpTable] | None  # (↷, ▶)
    corank: int

    @property
    def nondegenerate(self) -> bool:
        return self.left_bijective and self.right_bijective


def _pair_map_rank(n: int, pairs: Iterable[tuple[tuple[int, int], tuple[int, int]]]) -> int:
    """Rank of the span of the vectors e_u ⊕ e_v.

    These are the edges of a bipartite graph between the two copies of Ω²; the
    rank of such edge vectors is (#touched vertices − #components).
    """
    parent: dict[Any, Any] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rank = 0
    for u, v in set(pairs):
        ku, kv = ("L", u), ("R", v)
        parent.setdefault(ku, ku)
        parent.setdefault(kv, kv)
        ru, rv = find(ku), find(kv)
        if ru != rv:
            parent[ru] = rv
            rank += 1
    return rank


def corank(eds: FiniteEds) -> int:
    """Kernel dimension of the linear map e_(α,β) ↦ (e_φ←(α,β), e_φ→(α,β))."""
    n = eds.size
    cells = itertools.product(range(n), repeat=2)
    return n * n - _pair_map_rank(n, ((eds.phi_left(a, b), eds.phi_right(a, b)) for a, b in cells))


def nondegeneracy(eds: FiniteEds) -> NondegeneracyReport:
    n = eds.size
    cells = list(itertools.product(range(n), repeat=2))
    inv_l = {eds.phi_left(a, b): (a, b) for a, b in cells}
    inv_r = {eds.phi_right(a, b): (a, b) for a, b in cells}
    left_ok = len(inv_l) == n * n
    right_ok = len(inv_r) == n * n
    inv_left = inv_right = None
    if left_ok:
        # φ_←⁻¹(α,β) = (α↶β, α◀β)
        inv_left = (table_from_function(n, lambda a, b: inv_l[(a, b)][0]),
                    table_from_function(n, lambda a, b: inv_l[(a, b)][1]))
    if right_ok:
        # φ_→⁻¹(α,β) = (β▶α, β↷α); tables are indexed (left arg, right arg)
        inv_right = (table_from_function(n, lambda b, a: inv_r[(a, b)][1]),
                     table_from_function(n, lambda b, a: inv_r[(a, b)][0]))
    return NondegeneracyReport(left_ok, right_ok, inv_left, inv_right, corank(eds))


def is_nondegenerate(eds: FiniteEds) -> bool:
    return nondegeneracy(eds).nondegenerate


@dataclass(frozen=True)
class InverseOps:
    """The four derived products of a nondegenerate structure."""

    up_left: OpTable  # ↶
    up_right: OpTable  # ↷
    tri_left: OpTable  # ◀
    tri_right: OpTable  # ▶


def inverse_ops(eds: FiniteEds) -> InverseOps:
    rep = nondegeneracy(eds)
    if not rep.nondegenerate:
        raise PreconditionError("structure is degenerate: φ_← or φ_→ is not bijective")
    assert rep.inv_left is not None and rep.inv_right is not None
    return InverseOps(rep.inv_left[0], rep.inv_right[0], rep.inv_left[1], rep.inv_right[1])


def _derived_identities(ops: InverseOps):
    UL, UR, BL, BR = ops.up_left, ops.up_right, ops.tri_left, ops.tri_right
    # UL=↶, UR=↷, BL=◀, BR=▶
    return [
        (1, lambda a, b, c: (UL[UR[a][b]][c], UR[a][UL[b][c]])),
        (2, lambda a, b, c: (BL[a][BL[b][c]], BL[BL[a][b]][c])),
        (3, lambda a, b, c: (BR[BR[a][b]][c], BR[a][BR[b][c]])),
        (4, lambda a, b, c: (BR[a][UL[b][c]], BR[a][b])),
        (5, lambda a, b, c: (BL[UR[a][b]][c], BL[b][c])),
        (6, lambda a, b, c: (UL[UL[a][BL[b][c]]][UL[b][c]], UL[a][b])),
        (7, lambda a, b, c: (UR[UR[a][b]][UR[BR[a][b]][c]], UR[b][c])),
        (8, lambda a, b, c: (BL[UL[a][BL[b][c]]][UL[b][c]], UL[BL[a][b]][c])),
        (9, lambda a, b, c: (BR[UR[a][b]][UR[BR[a][b]][c]], UR[a][BR[b][c]])),
        (10, lambda a, b, c: (UL[UL[a][UR[b][c]]][BR[b][c]], UL[a][c])),
        (11, lambda a, b, c: (UR[BL[a][b]][UR[UL[a][b]][c]], UR[a][c])),
        (12, lambda a, b, c: (BL[UL[a][UR[b][c]]][BR[b][c]], BR[b][BL[a][c]])),
        (13, lambda a, b, c: (BR[BL[a][b]][UR[UL[a][b]][c]], BL[BR[a][c]][b])),
        (14, lambda a, b, c: (BR[UL[a][b]][c], UL[BR[a][c]][b])),
        (15, lambda a, b, c: (UR[b][BL[a][c]], BL[a][UR[b][c]])),
    ]


DERIVED_IDENTITY_TEXT = {
    1: "(α↷β)↶γ = α↷(β↶γ)",
    2: "α◀(β◀γ) = (α◀β)◀γ",
    3: "(α▶β)▶γ = α▶(β▶γ)",
    4: "α▶(β↶γ) = α▶β",
    5: "(α↷β)◀γ = β◀γ",
    6: "(α↶(β◀γ))↶(β↶γ) = α↶β",
    7: "(α↷β)↷((α▶β)↷γ) = β↷γ",
    8: "(α↶(β◀γ))◀(β↶γ) = (α◀β)↶γ",
    9: "(α↷β)▶((α▶β)↷γ) = α↷(β▶γ)",
    10: "(α↶(β↷γ))↶(β▶γ) = α↶γ",
    11: "(α◀β)↷((α↶β)↷γ) = α↷γ",
    12: "(α↶(β↷γ))◀(β▶γ) = β▶(α◀γ)",
    13: "(α◀β)▶((α↶β)↷γ) = (α▶γ)◀β",
    14: "(α↶β)▶γ = (α▶γ)↶β",
    15: "β↷(α◀γ) = α◀(β↷γ)",
}


def derived_identity_check(eds: FiniteEds) -> AxiomReport:
    """Check the identities satisfied by ↶, ↷, ◀, ▶ (ids as in DERIVED_IDENTITY_TEXT)."""
    ops = inverse_ops(eds)
    checks = [(k, (lambda f: lambda a, b, c: [f(a, b, c)])(f)) for k, f in _derived_identities(ops)]
    return _run_checks(eds.size, checks, stop_at_first=False)


# ---------------------------------------------------------------------------
# isomorphism


def relabel(eds: FiniteEds, perm: Sequence[int]) -> FiniteEds:
    """Image of ``eds`` under the bijection ``i -> perm[i]``."""
    n = eds.size
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i

    def move(t: OpTable) -> OpTable:
        return tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))

    return FiniteEds(*(move(t) for t in eds.tables()), label=eds.label)


def flat_key(eds: FiniteEds) -> tuple[int, ...]:
    return tuple(x for t in eds.tables() for row in t for x in row)


def canonical_form(eds: FiniteEds) -> FiniteEds:
    best = min((relabel(eds, p) for p in itertools.permutations(range(eds.size))), key=flat_key)
    return best.with_label(eds.label)


def are_isomorphic(e1: FiniteEds, e2: FiniteEds) -> tuple[int, ...] | None:
    """Lexicographically smallest relabeling σ with σ(e1) = e2, or None."""
    if e1.size != e2.size:
        return None
    for p in itertools.permutations(range(e1.size)):
        if relabel(e1, p) == e2:
            return p
    return None


# ---------------------------------------------------------------------------
# text format


def dump_eds(eds: FiniteEds) -> str:
    head = f"eds {eds.size}" + (f" {eds.label}" if eds.label else "")
    lines = [head]
    for name, t in zip(("left", "right", "tri_left", "tri_right"), eds.tables()):
        lines.append(name)
        lines.extend(" ".join(str(x) for x in row) for row in t)
    return "\n".join(lines) + "\n"


def parse_eds(text: str) -> FiniteEds:
    records = parse_eds_many(text)
    if len(records) != 1:
        raise StructureError(f"expected one structure, found {len(records)}")
    return records[0]


def parse_eds_many(text: str) -> list[FiniteEds]:
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    out: list[FiniteEds] = []
    pos = 0

    def take(no_default: int = 0) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise StructureError(f"line {no_default}: unexpected end of input")
        item = lines[pos]
        pos += 1
        return item

    while pos < len(lines):
        no, head = take()
        parts = head.split(maxsplit=2)
        if parts[0] != "eds" or len(parts) < 2:
            raise StructureError(f"line {no}: expected 'eds <n> [label]'")
        try:
            n = int(parts[1])
        except ValueError:
            raise StructureError(f"line {no}: size {parts[1]!r} is not an integer") from None
        if n < 1:
            raise StructureError(f"line {no}: size must be positive")
        label = parts[2] if len(parts) > 2 else ""
        tables = []
        for name in ("left", "right", "tri_left", "tri_right"):
            no, tag = take(no)
            if tag != name:
                raise StructureError(f"line {no}: expected block header {name!r}, got {tag!r}")
            rows = []
            for _ in range(n):
                no, row = take(no)
                cells = row.split()
                if len(cells) != n:
                    raise StructureError(f"line {no}: expected {n} entries, got {len(cells)}")
                vals = []
                for col, cell in enumerate(cells, start=1):
                    try:
                        v = int(cell)
                    except ValueError:
                        raise StructureError(f"line {no}, column {col}: {cell!r} is not an integer") from None
                    if not 0 <= v < n:
                        raise StructureError(f"line {no}, column {col}: entry {v} outside 0..{n - 1}")
                    vals.append(v)
                rows.append(tuple(vals))
            tables.append(tuple(rows))
        out.append(FiniteEds(*tables, label=label))
    return out
