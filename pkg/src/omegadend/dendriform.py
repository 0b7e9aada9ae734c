"""Generic checker for the Ω-dendriform relations on any product implementation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .eds import FiniteEds

PREC, SUCC = "prec", "succ"

# mul(side, alpha, x, y) on polynomials
Mul = Callable[[str, int, Any, Any], Any]


@dataclass(frozen=True)
class DendriformViolation:
    relation: int  # 1 (≺≺), 2 (≻≺) or 3 (≻≻)
    x: Any
    y: Any
    z: Any
    alpha: int
    beta: int
    lhs: Any
    rhs: Any


def relation_sides(eds: FiniteEds, mul: Mul, x, y, z, a: int, b: int):
    """Yield (relation id, lhs, rhs) for the three Ω-dendriform relations."""
    L, R, TL, TR = eds.tables()
    lhs1 = mul(PREC, b, mul(PREC, a, x, y), z)
    rhs1 = (mul(PREC, L[a][b], x, mul(PREC, TL[a][b], y, z))
             + mul(PREC, R[a][b], x, mul(SUCC, TR[a][b], y, z)))
    yield 1, lhs1, rhs1
    yield 2, mul(SUCC, a, x, mul(PREC, b, y, z)), mul(PREC, b, mul(SUCC, a, x, y), z)
    lhs3 = mul(SUCC, a, x, mul(SUCC, b, y, z))
    rhs3 = (mul(SUCC, R[a][b], mul(SUCC, TR[a][b], x, y), z)
             + mul(SUCC, L[a][b], mul(PREC, TL[a][b], x, y), z))
    yield 3, lhs3, rhs3


def check_omega_dendriform(eds: FiniteEds, mul: Mul, triples: Iterable[tuple[Any, Any, Any]],
                           stop_at_first: bool = True) -> list[DendriformViolation]:
    out = []
    n = eds.size
    for x, y, z in triples:
        for a, b in itertools.product(range(n), repeat=2):
            for rel, lhs, rhs in relation_sides(eds, mul, x, y, z, a, b):
                if lhs != rhs:
                    out.append(DendriformViolation(rel, x, y, z, a, b, lhs, rhs))
                    if stop_at_first:
                        return out
    return out


def graded_triples(basis_by_degree: dict[int, list], total: int):
    """All (x, y, z) of basis elements with deg x + deg y + deg z ≤ total."""
    degs = sorted(basis_by_degree)
    for i in degs:
        for j in degs:
            for k in degs:
                if i + j + k <= total:
                    yield from itertools.product(basis_by_degree[i], basis_by_degree[j],
                                                 basis_by_degree[k])


def graded_pairs(basis_by_degree: dict[int, list], total: int):
    degs = sorted(basis_by_degree)
    for i in degs:
        for j in degs:
            if i + j <= total:
                yield from itertools.product(basis_by_degree[i], basis_by_degree[j])
