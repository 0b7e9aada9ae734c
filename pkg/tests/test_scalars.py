from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from omegadend.linalg import EchelonBasis, rank
from omegadend.scalars import Fp, LinComb, format_scalar, parse_scalar


@given(st.integers(), st.integers(), st.integers(1, 6))
def test_fp_field_laws(a, b, k):
    p = [2, 3, 5, 7, 11, 13][k - 1]
    x, y = Fp(a, p), Fp(b, p)
    assert x + y == Fp(a + b, p)
    assert x * y == Fp(a * b, p)
    if y:
        assert (x / y) * y == x


def test_fp_rejects_mixed_moduli():
    with pytest.raises(ValueError):
        Fp(1, 5) + Fp(1, 7)


def test_parse_scalar_roundtrip():
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    assert parse_scalar("3", 5) == Fp(3, 5)
    assert parse_scalar(format_scalar(Fraction(7, 2))) == Fraction(7, 2)


def test_lincomb_drops_zero_terms():
    x = LinComb({"a": 1, "b": 2}) - LinComb({"a": 1})
    assert x == LinComb({"b": 2})
    assert not (x - x)
    assert str(LinComb()) == "0"


@given(st.lists(st.dictionaries(st.integers(0, 4), st.integers(-3, 3), max_size=5), max_size=6))
def test_rank_matches_echelon_and_bound(vectors):
    r = rank(vectors)
    assert r <= min(len(vectors), 5)
    basis = EchelonBasis()
    for v in vectors:
        basis.add({k: Fraction(c) for k, c in v.items()})
    assert len(basis) == r
    for v in vectors:
        assert basis.contains({k: Fraction(c) for k, c in v.items()})


def test_rank_over_fp():
    vs = [{0: Fp(1, 2), 1: Fp(1, 2)}, {1: Fp(1, 2), 2: Fp(1, 2)}, {0: Fp(1, 2), 2: Fp(1, 2)}]
    assert rank(vs) == 2
    assert rank([{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]) == 3
