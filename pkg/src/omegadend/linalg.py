"""Exact sparse row reduction over Q or F_p."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Hashable, Iterable, Mapping


class EchelonBasis:
    """Incrementally maintained reduced basis of a span of sparse vectors.

    Vectors are dicts from hashable coordinates to field elements.  The pivot of
    a new row is its first surviving coordinate, so results depend only on the
    insertion order.
    """

    def __init__(self) -> None:
        self._rows: dict[Hashable, dict[Hashable, Any]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping[Hashable, Any]) -> dict[Hashable, Any]:
        v = {k: c for k, c in vec.items() if c}
        # rows are kept fully reduced, so one pass over pivots suffices
        for piv in [k for k in v if k in self._rows]:
            c = v.pop(piv)
            for k, r in self._rows[piv].items():
                if k == piv:
                    continue
                s = v.get(k, 0) - c * r
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping[Hashable, Any]) -> bool:
        """Insert a vector; return True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = next(iter(v))
        inv = v[piv].inverse() if hasattr(v[piv], "inverse") else 1 / v[piv]
        v = {k: c * inv for k, c in v.items()}
        for row in self._rows.values():
            c = row.get(piv)
            if c:
                for k, r in v.items():
                    s = row.get(k, 0) - c * r
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
        self._rows[piv] = v
        return True

    def contains(self, vec: Mapping[Hashable, Any]) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping[Hashable, Any]]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add({k: (Fraction(c) if isinstance(c, int) else c) for k, c in v.items()})
    return len(basis)
