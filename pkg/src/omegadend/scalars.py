"""Exact scalars and sparse formal linear combinations.

Coefficients are :class:`fractions.Fraction` by default.  :class:`Fp` gives a
prime-field alternative; both only need ``+``, ``*``, negation and truthiness,
so :class:`LinComb` is agnostic to which one is used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping


class Fp:
    """Element of the prime field Z/pZ."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int) -> None:
        self.v = v % p
        self.p = p

    def _coerce(self, other: Any) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) * Fp(other.denominator, self.p).inverse()
        return NotImplemented

    def __add__(self, other: Any) -> "Fp":
        o = self._coerce(other)
        return Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Fp":
        o = self._coerce(other)
        return Fp(self.v - o.v, self.p)

    def __rsub__(self, other: Any) -> "Fp":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Fp":
        o = self._coerce(other)
        return Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self) -> "Fp":
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError("zero has no inverse in F_p")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other: Any) -> "Fp":
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return self.v != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.v, self.p))

    def __int__(self) -> int:
        return self.v

    def __repr__(self) -> str:
        return f"{self.v} mod {self.p}"

    def __str__(self) -> str:
        return str(self.v)


def format_scalar(c: Any) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def parse_scalar(text: str, modulus: int | None = None) -> Any:
    value = Fraction(text.strip())
    if modulus is None:
        return value
    return Fp(0, modulus) + value


class LinComb:
    """Immutable finite linear combination of hashable, orderable basis keys.

    Zero coefficients are never stored.  Subclasses only customise how a key is
    rendered and sorted.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] = ()) -> None:
        acc: dict[Hashable, Any] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            if k in acc:
                acc[k] = acc[k] + c
            else:
                acc[k] = c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash: int | None = None

    @classmethod
    def basis(cls, key: Hashable, coef: Any = 1) -> "LinComb":
        return cls({key: Fraction(coef) if isinstance(coef, int) else coef})

    @classmethod
    def _raw(cls, terms: dict[Hashable, Any]) -> "LinComb":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[Hashable, Any]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Hashable, Any]]:
        return iter(self._terms.items())

    def keys(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def coefficient(self, key: Hashable) -> Any:
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def _same(self, other: Any) -> bool:
        return isinstance(other, LinComb)

    def __add__(self, other: "LinComb") -> "LinComb":
        if not self._same(other):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)._raw(out)

    def __neg__(self) -> "LinComb":
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Any) -> "LinComb":
        if not c:
            return type(self)._raw({})
        out = {}
        for k, v in self._terms.items():
            w = v * c
            if w:
                out[k] = w
        return type(self)._raw(out)

    def __rmul__(self, c: Any) -> "LinComb":
        return self.scale(c)

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "LinComb":
        return type(self)((f(k), c) for k, c in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def sort_key(key: Hashable) -> Any:
        return key

    @staticmethod
    def render_key(key: Hashable) -> str:
        return str(key)

    def sorted_items(self) -> list[tuple[Hashable, Any]]:
        return sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{format_scalar(c)} · {self.render_key(k)}" for k, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


def sum_lincomb(parts: Iterable[LinComb], empty: LinComb) -> LinComb:
    """Sum many combinations with one dictionary pass."""
    out: dict[Hashable, Any] = {}
    for part in parts:
        for k, c in part.items():
            out[k] = out[k] + c if k in out else c
    return type(empty)._raw({k: c for k, c in out.items() if c})
