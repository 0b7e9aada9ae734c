"""Exhaustive enumeration of small EDS by backtracking over table cells.

Cells are filled in the order ←/→ (interleaved, row-major) then ◁/▷.  Every
axiom instance is a pair of closed terms; an instance is re-evaluated only
when the cell it is blocked on gets a value (watch lists with a trail for
undo).  Nondegeneracy adds injectivity of the partial maps φ_← and φ_→.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .eds import (
    FiniteEds,
    _pointwise_equalities,
    canonical_form,
    flat_key,
    is_commutative,
    table_from_function,
)

LEFT, RIGHT, TRI_LEFT, TRI_RIGHT = range(4)
MAX_SIZE = 3
MAX_SIZE_NONDEGENERATE = 4


@dataclass(frozen=True)
class EnumFilter:
    diassociative_only: bool = False
    nondegenerate_only: bool = False
    commutative_only: bool = False
    up_to_iso: bool = False


class _SymbolicTable:
    """``T[x][y]`` builds the term (op, x, y) instead of looking anything up."""

    def __init__(self, op: int) -> None:
        self.op = op

    def __getitem__(self, x):
        op = self.op
        return _SymbolicRow(op, x)


class _SymbolicRow:
    def __init__(self, op, x) -> None:
        self.op, self.x = op, x

    def __getitem__(self, y):
        return (self.op, self.x, y)


def axiom_instances(n: int, diassociative_only: bool) -> list[tuple]:
    sym = [_SymbolicTable(k) for k in range(4)]
    eqs = _pointwise_equalities(*sym)
    if diassociative_only:
        eqs = eqs[:3]
    seen = set()
    out = []
    for _, fn in eqs:
        for a, b, c in itertools.product(range(n), repeat=3):
            for lhs, rhs in fn(a, b, c):
                if lhs == rhs:
                    continue
                key = (lhs, rhs) if repr(lhs) <= repr(rhs) else (rhs, lhs)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


class _Solver:
    def __init__(self, n: int, diassociative_only: bool, nondegenerate: bool) -> None:
        self.n = n
        self.nondeg = nondegenerate and not diassociative_only
        self.tabs = [[-1] * (n * n) for _ in range(4)]
        ops = (LEFT, RIGHT) if diassociative_only else (LEFT, RIGHT, TRI_LEFT, TRI_RIGHT)
        cells = range(n * n)
        self.order = [(op, c) for c in cells for op in (LEFT, RIGHT)]
        if not diassociative_only:
            self.order += [(op, c) for c in cells for op in (TRI_LEFT, TRI_RIGHT)]
        self.ops = ops
        self.instances = axiom_instances(n, diassociative_only)
        self.watch: dict[tuple[int, int], list[int]] = {}
        self.trail: list[tuple[int, int]] = []  # (cell key index, previous list length)
        self.used = [dict(), dict()]  # image pairs of φ_←, φ_→
        self.results: list[tuple[tuple[int, ...], ...]] = []
        self._blocked = None
        for i in range(len(self.instances)):
            ok = self._check(i)
            assert ok  # nothing is assigned yet

    def _ev(self, t):
        if type(t) is int:
            return t
        x = self._ev(t[1])
        if x < 0:
            return -1
        y = self._ev(t[2])
        if y < 0:
            return -1
        cell = x * self.n + y
        v = self.tabs[t[0]][cell]
        if v < 0:
            self._blocked = (t[0], cell)
        return v

    def _check(self, i: int) -> bool:
        """Evaluate instance i; False on conflict, otherwise register if blocked."""
        lhs, rhs = self.instances[i]
        u = self._ev(lhs)
        if u < 0:
            self._register(i)
            return True
        v = self._ev(rhs)
        if v < 0:
            self._register(i)
            return True
        return u == v

    def _register(self, i: int) -> None:
        key = self._blocked
        lst = self.watch.setdefault(key, [])
        lst.append(i)
        self.trail.append(key)

    def _assign(self, op: int, cell: int, v: int) -> bool:
        self.tabs[op][cell] = v
        if self.nondeg and op in (LEFT, RIGHT, TRI_LEFT, TRI_RIGHT):
            side = 0 if op in (LEFT, TRI_LEFT) else 1
            a, b = (LEFT, TRI_LEFT) if side == 0 else (RIGHT, TRI_RIGHT)
            p, q = self.tabs[a][cell], self.tabs[b][cell]
            if p >= 0 and q >= 0:
                if (p, q) in self.used[side]:
                    return False
                self.used[side][(p, q)] = cell
        for i in list(self.watch.get((op, cell), ())):
            if not self._check(i):
                return False
        return True

    def _unassign(self, op: int, cell: int, trail_mark: int) -> None:
        while len(self.trail) > trail_mark:
            key = self.trail.pop()
            self.watch[key].pop()
        if self.nondeg:
            side = 0 if op in (LEFT, TRI_LEFT) else 1
            a, b = (LEFT, TRI_LEFT) if side == 0 else (RIGHT, TRI_RIGHT)
            pair = (self.tabs[a][cell], self.tabs[b][cell])
            if self.used[side].get(pair) == cell:
                del self.used[side][pair]
        self.tabs[op][cell] = -1

    def search(self, depth: int = 0, stop_depth: int | None = None, sink=None) -> None:
        if depth == len(self.order) or depth == stop_depth:
            snapshot = tuple(tuple(t) for t in self.tabs)
            (sink if sink is not None else self.results).append(snapshot)
            return
        op, cell = self.order[depth]
        for v in range(self.n):
            mark = len(self.trail)
            if self._assign(op, cell, v):
                self.search(depth + 1, stop_depth, sink)
            self._unassign(op, cell, mark)

    def replay(self, prefix: tuple[tuple[int, ...], ...], depth: int) -> bool:
        for op, cell in self.order[:depth]:
            if not self._assign(op, cell, prefix[op][cell]):
                return False
        return True


def _to_eds(n: int, flat: tuple[tuple[int, ...], ...], diassociative_only: bool) -> FiniteEds:
    tabs = [tuple(tuple(t[i * n:(i + 1) * n]) for i in range(n)) for t in flat]
    if diassociative_only:
        tabs[TRI_LEFT] = table_from_function(n, lambda a, b: b)
        tabs[TRI_RIGHT] = table_from_function(n, lambda a, b: a)
    return FiniteEds(*tabs)


def _worker(args) -> list:
    n, diass, nondeg, depth, prefix = args
    s = _Solver(n, diass, nondeg)
    if not s.replay(prefix, depth):
        return []
    s.search(depth)
    return s.results


def _raw_search(n: int, diass: bool, nondeg: bool, jobs: int) -> list:
    s = _Solver(n, diass, nondeg)
    if jobs <= 1:
        s.search()
        return s.results
    # split on the first few cells; each prefix is an independent subtree
    depth = min(len(s.order), 4)
    prefixes: list = []
    s.search(0, stop_depth=depth, sink=prefixes)
    out: list = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_worker, [(n, diass, nondeg, depth, p) for p in prefixes]):
            out.extend(part)
    return out


def reduce_up_to_iso(items: list[FiniteEds]) -> list[tuple[FiniteEds, int]]:
    """Group by canonical form; representatives are canonical, ascending."""
    if not items:
        return []
    if len({e.size for e in items}) != 1:
        raise ValueError("all structures must have the same size")
    classes: dict[tuple[int, ...], list] = {}
    for e in items:
        c = canonical_form(e)
        entry = classes.setdefault(flat_key(c), [c.with_label(""), 0])
        entry[1] += 1
    return [(rep, size) for _, (rep, size) in sorted(classes.items())]


def enumerate_eds(n: int, flt: EnumFilter = EnumFilter(), jobs: int = 1):
    """All structures on ``{0..n-1}`` passing the filter.

    Returns a list of FiniteEds in canonical-form order, or with ``up_to_iso``
    a list of (representative, class size) pairs.
    """
    if n < 1:
        raise ValueError("size must be positive")
    limit = MAX_SIZE_NONDEGENERATE if (flt.nondegenerate_only and not flt.diassociative_only) else MAX_SIZE
    if n > limit:
        raise ValueError(f"size {n} unsupported (max {MAX_SIZE}, or {MAX_SIZE_NONDEGENERATE} "
                         "for nondegenerate-only search)")
    raw = _raw_search(n, flt.diassociative_only, flt.nondegenerate_only, jobs)
    found = [_to_eds(n, r, flt.diassociative_only) for r in raw]
    if flt.commutative_only:
        found = [e for e in found if is_commutative(e)]
    if flt.up_to_iso:
        return reduce_up_to_iso(found)
    keyed = sorted(found, key=lambda e: (flat_key(canonical_form(e)), flat_key(e)))
    return keyed
