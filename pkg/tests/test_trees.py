from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from omegadend.dendriform import PREC, SUCC, check_omega_dendriform, graded_pairs, graded_triples, relation_sides
from omegadend.eds import EdsError, FiniteEds, check_eds
from omegadend.constructions import matching
from omegadend.trees import (COROLLA, LEAF, TreePoly, basis_by_degree, d_map, decompose, enumerate_basis,
                             format_tree, four_leaf_trees, graft, is_shuffle, left_comb, parse_tree, right_comb,
                             shuffle_product_trees, shuffle_side, shuffles, tree_mul, typed_product)

from .support import BY_LABEL, CATALOG, catalog_eds, trees

# ← and → constant, ◁ and ▷ both XOR: fails the axioms
CORRUPTED = FiniteEds(((0, 0), (0, 0)), ((0, 0), (0, 0)), ((0, 1), (1, 0)), ((0, 1), (1, 0)))


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("omega", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_basis_size(omega, n):
    basis = enumerate_basis(omega, n)
    assert len(basis) == catalan(n) * omega ** (n - 1)
    assert len(set(basis)) == len(basis)
    assert all(t.size == n and len(t.edge_types()) == n - 1 for t in basis)


@given(trees(3, 5))
def test_literal_roundtrip(t):
    assert parse_tree(format_tree(t)) == t


@pytest.mark.parametrize("text", ["(. 0 - .)", "(. - - .", "((. - - .) - - .)", "(. - x .)", ". ."])
def test_bad_literals(text):
    with pytest.raises(EdsError):
        parse_tree(text)


def test_graft_checks_types():
    assert graft(COROLLA, 1, None, LEAF) == left_comb(1)
    with pytest.raises(EdsError):
        graft(COROLLA, None, None, LEAF)
    with pytest.raises(EdsError):
        graft(LEAF, None, 0, LEAF)


def test_small_products_on_matching_two():
    e = matching(2)
    assert typed_product(e, PREC, 1, COROLLA, COROLLA) == TreePoly.of(right_comb(1))
    assert typed_product(e, SUCC, 0, COROLLA, COROLLA) == TreePoly.of(left_comb(0))
    q = four_leaf_trees(0, 1)
    assert typed_product(e, PREC, 0, COROLLA, left_comb(1)) == TreePoly.of(q[3])


def test_untyped_products_are_the_classical_ones():
    e = matching(1)
    q = four_leaf_trees(0, 0)
    lc, rc = left_comb(0), right_comb(0)
    assert typed_product(e, SUCC, 0, COROLLA, lc) == TreePoly.of(q[1]) + TreePoly.of(q[2])
    assert typed_product(e, PREC, 0, rc, COROLLA) == TreePoly.of(q[3]) + TreePoly.of(q[4])
    assert typed_product(e, SUCC, 0, rc, COROLLA) == TreePoly.of(q[2])


@given(catalog_eds, trees(2, 2), trees(2, 2), trees(2, 1), st.integers(0, 1), st.integers(0, 1))
def test_relations_hold_on_random_triples(e, x, y, z, a, b):
    mul = tree_mul(e)
    for rel, lhs, rhs in relation_sides(e, mul, x, y, z, a, b):
        assert lhs == rhs, (e.label, rel)


@given(catalog_eds, st.sampled_from([PREC, SUCC]), st.integers(0, 1), trees(2, 3), trees(2, 2))
def test_products_are_homogeneous_with_unit_coefficients(e, side, a, x, y):
    p = typed_product(e, side, a, x, y)
    assert p.degree_support() <= {x.size + y.size}
    assert all(c > 0 for _, c in p.items())


def test_relations_for_all_catalog_entries_up_to_four_vertices():
    for e in CATALOG:
        by = basis_by_degree(e.size, 2)
        assert not check_omega_dendriform(e, tree_mul(e), graded_triples(by, 4)), e.label


def test_corrupted_table_produces_a_witness():
    by = basis_by_degree(2, 2)
    out = check_omega_dendriform(CORRUPTED, tree_mul(CORRUPTED), graded_triples(by, 4))
    assert out and out[0].lhs != out[0].rhs
    assert not check_eds(CORRUPTED).passed


@pytest.mark.parametrize("label", ["A1", "C3", "F5", "H2"])
def test_shuffle_formula_matches_recursion(label):
    e = BY_LABEL[label]
    by = basis_by_degree(2, 3)
    for x, y in graded_pairs(by, 4):
        for side in (PREC, SUCC):
            for a in range(2):
                assert shuffle_product_trees(e, side, a, x, y) == typed_product(e, side, a, x, y)


@given(trees(2, 5), st.sampled_from(["right", "left"]))
def test_comb_decomposition_reassembles(t, side):
    d = decompose(t, side)
    assert d.reassemble() == t
    assert len(d.spine_types) == len(d.branches) - 1


@given(st.integers(1, 4), st.integers(1, 4))
def test_shuffle_count_and_split(k, l):
    sh = shuffles(k, l)
    assert len(sh) == math.comb(k + l, k)
    assert all(is_shuffle(k, l, s) for s in sh)
    assert sum(shuffle_side(k, s) == PREC for s in sh) == math.comb(k + l - 1, k - 1)


def test_d_map_identity_shuffle_keeps_types():
    e = BY_LABEL["F3"]
    assert d_map(e, 2, 1, (1, 2, 3), (0, 1)) == (0, 1)
