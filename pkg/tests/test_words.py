from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from omegadend.constructions import matching
from omegadend.dendriform import PREC, SUCC, check_omega_dendriform, graded_pairs, graded_triples, relation_sides
from omegadend.eds import EdsError
from omegadend.words import (DEFAULT_PAIRING, TypedWord, WordPoly, enumerate_words, format_word, parse_word, word,
                             word_mul, word_product, word_shuffle_product, words_by_length)

from .support import BY_LABEL, CATALOG, catalog_eds


def words(omega: int, max_len: int = 3):
    return st.integers(1, max_len).flatmap(
        lambda n: st.tuples(st.lists(st.sampled_from("xyz"), min_size=n, max_size=n),
                            st.lists(st.integers(0, omega - 1), min_size=n - 1, max_size=n - 1))
    ).map(lambda p: word(p[0], p[1]))


@given(words(3, 5))
def test_literal_roundtrip(w):
    assert parse_word(format_word(w)) == w


@pytest.mark.parametrize("text", ["", "x 0", "x a y"])
def test_bad_literals(text):
    with pytest.raises(EdsError):
        parse_word(text)


def test_word_needs_matching_type_count():
    with pytest.raises(EdsError):
        TypedWord(("x", "y"), ())


def test_single_letter_products():
    e = BY_LABEL["F3"]
    assert word_product(e, PREC, 1, word("x"), word("y")) == WordPoly.of(word("xy", (1,)))
    assert word_product(e, SUCC, 0, word("x"), word("y")) == WordPoly.of(word("yx", (0,)))


def test_untyped_case_is_the_half_shuffle():
    e = matching(1)
    x, y = word("ab", (0,)), word("cd", (0,))
    total = word_product(e, PREC, 0, x, y) + word_product(e, SUCC, 0, x, y)
    assert len(total) == math.comb(4, 2)
    assert sum(c for _, c in total.items()) == math.comb(4, 2)
    assert all(w.letters[0] == "a" for w in word_product(e, PREC, 0, x, y).keys())


@given(catalog_eds, words(2, 2), words(2, 2), words(2, 1), st.integers(0, 1), st.integers(0, 1))
def test_relations_hold_on_random_triples(e, x, y, z, a, b):
    mul = word_mul(e)
    for rel, lhs, rhs in relation_sides(e, mul, x, y, z, a, b):
        assert lhs == rhs, (e.label, rel)


def test_default_pairing_passes_everywhere_up_to_length_four():
    assert DEFAULT_PAIRING == "tree"
    for e in CATALOG:
        by = words_by_length("xy", 2, 2)
        assert not check_omega_dendriform(e, word_mul(e), graded_triples(by, 4)), e.label


def test_swapped_pairing_fails_on_matching():
    e = BY_LABEL["F3"]
    by = words_by_length("xy", 2, 2)
    out = check_omega_dendriform(e, word_mul(e, "swapped"), graded_triples(by, 4))
    assert out


@pytest.mark.parametrize("label", ["A2", "C4", "F5", "H2"])
def test_shuffle_formula_matches_recursion(label):
    e = BY_LABEL[label]
    by = words_by_length("xy", 2, 3)
    for x, y in graded_pairs(by, 4):
        for side in (PREC, SUCC):
            for a in range(2):
                assert word_shuffle_product(e, side, a, x, y) == word_product(e, side, a, x, y)


def test_enumerate_words_size():
    assert len(enumerate_words("xy", 3, 3)) == 2 ** 3 * 3 ** 2
