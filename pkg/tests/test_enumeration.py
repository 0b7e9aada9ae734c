from __future__ import annotations

import itertools

import pytest

from omegadend.constructions import cyclic_group, family, matching, star
from omegadend.eds import (FiniteEds, are_isomorphic, canonical_form, check_eds, flat_key, is_commutative, is_eds,
                           is_nondegenerate)
from omegadend.enumeration import EnumFilter, enumerate_eds, reduce_up_to_iso

from .support import CATALOG


@pytest.fixture(scope="module")
def all_two():
    return enumerate_eds(2)


def test_counts_on_two_elements(all_two):
    assert len(all_two) == 45
    assert len(enumerate_eds(2, EnumFilter(up_to_iso=True))) == 24
    assert len(enumerate_eds(2, EnumFilter(diassociative_only=True))) == 13
    assert len(enumerate_eds(2, EnumFilter(diassociative_only=True, up_to_iso=True))) == 8


def test_enumeration_matches_brute_force_over_all_tables(all_two):
    cells = [((a, b), (c, d)) for a, b, c, d in itertools.product(range(2), repeat=4)]
    brute = {FiniteEds(*t) for t in itertools.product(cells, repeat=4) if is_eds(FiniteEds(*t))}
    assert brute == set(all_two)


def test_every_enumerated_structure_passes_both_checkers(all_two):
    for e in all_two:
        assert check_eds(e).passed and check_eds(e, "map_form").passed


def test_output_is_sorted_and_duplicate_free(all_two):
    assert len(set(all_two)) == len(all_two)
    keys = [(flat_key(canonical_form(e)), flat_key(e)) for e in all_two]
    assert keys == sorted(keys)


def test_classes_match_catalog_one_to_one():
    reps = [r for r, _ in enumerate_eds(2, EnumFilter(up_to_iso=True))]
    for r in reps:
        hits = [c.label for c in CATALOG if are_isomorphic(r, c) is not None]
        assert len(hits) == 1
    assert sum(s for _, s in enumerate_eds(2, EnumFilter(up_to_iso=True))) == 45


@pytest.mark.parametrize("flt, pred", [
    (EnumFilter(nondegenerate_only=True), is_nondegenerate),
    (EnumFilter(commutative_only=True), is_commutative),
])
def test_filters_commute_with_enumeration(all_two, flt, pred):
    assert enumerate_eds(2, flt) == [e for e in all_two if pred(e)]


def test_reduce_up_to_iso_sizes_sum():
    items = enumerate_eds(2, EnumFilter(diassociative_only=True))
    classes = reduce_up_to_iso(items)
    assert sum(s for _, s in classes) == len(items) == 13
    (rep, size), = reduce_up_to_iso(items[:1])
    assert size == 1 and rep == canonical_form(items[0]).with_label("")


def test_reduce_up_to_iso_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        reduce_up_to_iso([matching(2), matching(3)])


def test_three_element_nondegenerate_classes():
    classes = enumerate_eds(3, EnumFilter(nondegenerate_only=True, up_to_iso=True))
    assert len(classes) == 4
    z3 = cyclic_group(3)
    named = [matching(3), family(z3), star(z3), star(z3, 1, (1,))]
    for e in named:
        assert sum(are_isomorphic(e, r) is not None for r, _ in classes) == 1


def test_three_element_diassociative_count_is_stable():
    assert len(enumerate_eds(3, EnumFilter(diassociative_only=True))) == 267


def test_size_guard():
    with pytest.raises(ValueError):
        enumerate_eds(4)
    with pytest.raises(ValueError):
        enumerate_eds(0)


def test_parallel_search_gives_same_result():
    assert enumerate_eds(2, jobs=2) == enumerate_eds(2)
