from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from omegadend.constructions import CATALOG2_CORANK
from omegadend.eds import (DERIVED_IDENTITY_TEXT, FiniteEds, PreconditionError, StructureError, are_isomorphic,
                           canonical_form, check_eds, corank, derived_identity_check, dump_eds, inverse_ops,
                           is_commutative, is_eds, is_nondegenerate, make_table, nondegeneracy, opposite, parse_eds,
                           parse_eds_many, relabel)

from .support import BY_LABEL, CATALOG, NONDEGENERATE, catalog_eds, larger_examples


def tables(n):
    row = st.tuples(*[st.integers(0, n - 1)] * n)
    return st.tuples(*[row] * n)


random_structures = st.tuples(tables(2), tables(2), tables(2), tables(2)).map(lambda t: FiniteEds(*t))


def test_every_catalog_entry_is_an_eds():
    for e in CATALOG:
        assert check_eds(e).passed, e.label
        assert check_eds(e, "map_form").passed, e.label


@given(random_structures)
def test_pointwise_and_map_form_checkers_agree(e):
    assert check_eds(e).passed == check_eds(e, "map_form").passed


def test_violation_carries_witness():
    bad = FiniteEds(((0, 1), (1, 0)), ((0, 0), (0, 0)), ((0, 1), (0, 1)), ((0, 0), (1, 1)))
    rep = check_eds(bad, stop_at_first=True)
    assert not rep.passed
    v = rep.violations[0]
    assert len(v.witness) == 3 and v.lhs != v.rhs


def test_make_table_validates():
    with pytest.raises(StructureError):
        make_table([[0, 2], [0, 0]], 2)
    with pytest.raises(StructureError):
        make_table([[0, 1]], 2)


def test_catalog_coranks():
    assert {e.label: corank(e) for e in CATALOG} == CATALOG2_CORANK


def test_nondegenerate_entries():
    assert sorted(e.label for e in CATALOG if is_nondegenerate(e)) == NONDEGENERATE


def test_corank_zero_for_nondegenerate_examples():
    for name, e in larger_examples().items():
        assert is_nondegenerate(e), name
        assert corank(e) == 0


@pytest.mark.parametrize("label", NONDEGENERATE)
def test_inverse_ops_invert_phi(label):
    e = BY_LABEL[label]
    ops = inverse_ops(e)
    for a, b in itertools.product(range(e.size), repeat=2):
        assert e.phi_left(ops.up_left[a][b], ops.tri_left[a][b]) == (a, b)
        assert e.phi_right(ops.tri_right[b][a], ops.up_right[b][a]) == (a, b)


def test_inverse_ops_require_nondegenerate():
    with pytest.raises(PreconditionError):
        inverse_ops(BY_LABEL["A1"])


def test_derived_identities_hold_on_nondegenerate_examples():
    assert len(DERIVED_IDENTITY_TEXT) == 15
    examples = [BY_LABEL[k] for k in NONDEGENERATE] + list(larger_examples().values())
    for e in examples:
        rep = derived_identity_check(e)
        assert rep.passed, (e.label, rep.violations[:1])


def test_nondegeneracy_report_fields():
    rep = nondegeneracy(BY_LABEL["A2"])
    assert not rep.nondegenerate and rep.corank == 1
    assert nondegeneracy(BY_LABEL["F3"]).left_bijective


@given(catalog_eds, st.permutations([0, 1]))
def test_canonical_form_is_relabel_invariant(e, perm):
    assert canonical_form(relabel(e, tuple(perm))) == canonical_form(e)


@given(catalog_eds, st.permutations([0, 1]))
def test_relabel_preserves_invariants(e, perm):
    f = relabel(e, tuple(perm))
    assert is_eds(f)
    assert corank(f) == corank(e)
    assert is_commutative(f) == is_commutative(e)
    assert are_isomorphic(e, f) is not None


def test_catalog_entries_pairwise_non_isomorphic():
    for e, f in itertools.combinations(CATALOG, 2):
        assert are_isomorphic(e, f) is None, (e.label, f.label)


def test_opposite_is_an_involution_on_valid_structures():
    for e in CATALOG:
        assert opposite(opposite(e)) == e


def test_commutativity_by_definition():
    # F2 is isomorphic to its opposite but not equal to it
    f2 = BY_LABEL["F2"]
    assert not is_commutative(f2)
    assert are_isomorphic(f2, opposite(f2)) is not None
    assert is_commutative(BY_LABEL["F3"]) and not is_commutative(BY_LABEL["F5"])


@given(catalog_eds)
def test_text_format_roundtrip(e):
    assert parse_eds(dump_eds(e)) == e
    assert parse_eds(dump_eds(e)).label == e.label


def test_parse_many_and_comments():
    text = "# two structures\n" + dump_eds(BY_LABEL["A1"]) + "\n" + dump_eds(BY_LABEL["H2"])
    assert [e.label for e in parse_eds_many(text)] == ["A1", "H2"]


@pytest.mark.parametrize("text, fragment", [
    ("eds x\n", "not an integer"),
    ("eds 2\nleft\n0 0\n", "unexpected end"),
    ("eds 2\nright\n", "expected block header"),
    ("eds 2\nleft\n0 0\n0 7\n", "column 2"),
    ("eds 2\nleft\n0 0 0\n", "expected 2 entries"),
])
def test_parse_errors_name_the_location(text, fragment):
    with pytest.raises(StructureError, match=fragment):
        parse_eds(text)
