from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from omegadend.bialgebra import (ExtendedElement, TensorPoly, admissible_cuts, check_bialgebra_compat,
                                 check_coassociative, coproduct_tree, coproduct_word, cuts_discrepancies,
                                 factorize, generator_collision, scalar_extension_product, tensor)
from omegadend.dendriform import PREC, SUCC
from omegadend.eds import EdsError, PreconditionError, inverse_ops
from omegadend.trees import COROLLA, LEAF, right_comb
from omegadend.words import parse_word, word

from .support import BY_LABEL, CATALOG, NONDEGENERATE, catalog_eds, larger_examples, trees

E = ExtendedElement.of


def gen(a):
    return E(a, COROLLA)


def test_scalar_extension_on_generators():
    f3 = BY_LABEL["F3"]
    assert scalar_extension_product(f3, PREC, gen(0), gen(1)) == E(0, right_comb(1))


def test_mixed_algebras_rejected():
    f3 = BY_LABEL["F3"]
    with pytest.raises(EdsError):
        scalar_extension_product(f3, PREC, gen(0), E(0, word("x")))
    with pytest.raises(EdsError):
        scalar_extension_product(f3, PREC, gen(0) + E(0, word("x")), gen(1))


@given(catalog_eds, st.data())
def test_scalar_extension_is_dendriform(e, data):
    elems = [E(data.draw(st.integers(0, e.size - 1)), data.draw(trees(e.size, 2))) for _ in range(3)]
    x, y, z = elems
    m = lambda s, u, v: scalar_extension_product(e, s, u, v)
    assert m(PREC, m(PREC, x, y), z) == m(PREC, x, m(PREC, y, z) + m(SUCC, y, z))
    assert m(PREC, m(SUCC, x, y), z) == m(SUCC, x, m(PREC, y, z))
    assert m(SUCC, m(PREC, x, y) + m(SUCC, x, y), z) == m(SUCC, x, m(SUCC, y, z))


@pytest.mark.parametrize("label", NONDEGENERATE)
def test_generators_are_primitive(label):
    e = BY_LABEL[label]
    for a in range(e.size):
        assert coproduct_tree(e, gen(a)) == TensorPoly()
        assert coproduct_tree(e, gen(a), "cuts") == TensorPoly()


def test_known_tree_coproducts():
    f4 = BY_LABEL["F4"]
    assert coproduct_tree(f4, E(1, right_comb(1))) == tensor(gen(1), gen(0))
    f3 = BY_LABEL["F3"]
    for a, b in itertools.product(range(2), repeat=2):
        assert coproduct_tree(f3, E(a, right_comb(b))) == tensor(gen(a), gen(b))


def test_primitive_products():
    # Δ(x≺y) = x⊗y and Δ(x≻y) = y⊗x for primitive x, y
    h2 = BY_LABEL["H2"]
    for a, b in itertools.product(range(2), repeat=2):
        x, y = gen(a), gen(b)
        assert coproduct_tree(h2, scalar_extension_product(h2, PREC, x, y)) == tensor(x, y)
        assert coproduct_tree(h2, scalar_extension_product(h2, SUCC, x, y)) == tensor(y, x)


@pytest.mark.parametrize("label", NONDEGENERATE)
@given(data=st.data())
def test_factorization_reproduces_the_element(label, data):
    e = BY_LABEL[label]
    t = data.draw(trees(2, 5))
    a = data.draw(st.integers(0, 1))
    assert factorize(e, a, t).evaluate(e) == E(a, t)


def test_leaf_cannot_be_factored():
    with pytest.raises(EdsError):
        factorize(BY_LABEL["F3"], 0, LEAF)


@pytest.mark.parametrize("label", NONDEGENERATE)
def test_tree_bialgebra_small(label):
    rep = check_bialgebra_compat(BY_LABEL[label], "trees", 3)
    assert rep.ok and rep.checked > 0


def test_coassociativity_on_a_larger_example():
    assert check_coassociative(larger_examples()["star_z3"], "trees", 3).ok


@given(catalog_eds.filter(lambda e: e.label in NONDEGENERATE), trees(2, 4))
def test_admissible_cuts_are_antichains(e, t):
    for cut, _, branches in admissible_cuts(e, 0, t):
        assert cut.edges
        for p, q in itertools.permutations(cut.edges, 2):
            assert p[:len(q)] != q
        assert len(branches) == len(cut.edges)


@pytest.mark.parametrize("label", ["F3", "F4", "F5"])
def test_cuts_agree_with_recursion(label):
    assert cuts_discrepancies(BY_LABEL[label], 3) == []


def test_cuts_disagree_on_h2():
    found = cuts_discrepancies(BY_LABEL["H2"], 3)
    assert found
    d = found[0]
    assert d.recursive_term != d.cuts_term
    assert d.record().startswith("(H2, ")


def test_coproducts_require_nondegeneracy():
    with pytest.raises(PreconditionError):
        coproduct_tree(BY_LABEL["A1"], gen(0))
    with pytest.raises(PreconditionError):
        coproduct_word(BY_LABEL["A1"], E(0, word("x")))


def test_word_coproduct_requires_commutativity():
    with pytest.raises(PreconditionError):
        coproduct_word(BY_LABEL["F5"], E(0, word("x")))
    coproduct_word(BY_LABEL["F5"], E(0, word("x")), check=False)


def test_unknown_modes():
    with pytest.raises(ValueError):
        coproduct_tree(BY_LABEL["F3"], gen(0), "bogus")
    with pytest.raises(ValueError):
        coproduct_word(BY_LABEL["F3"], E(0, word("x")), "bogus")


@pytest.mark.parametrize("label", ["F3", "F4", "H2"])
@pytest.mark.parametrize("mode", ["recursive", "formula"])
def test_two_letter_word_coproduct(label, mode):
    e = BY_LABEL[label]
    ops = inverse_ops(e)
    for a1, a2 in itertools.product(range(2), repeat=2):
        assert coproduct_word(e, E(a1, word("x")), mode) == TensorPoly()
        got = coproduct_word(e, E(a1, word("xy", (a2,))), mode)
        left = a1 if mode == "formula" else ops.up_left[a1][a2]
        assert got == tensor(E(left, word("x")), E(ops.tri_left[a1][a2], word("y")))


def test_word_modes_split_only_where_up_left_moves_the_type():
    for label in ("F3", "F4"):
        e = BY_LABEL[label]
        assert all(e_ == a for a, row in enumerate(inverse_ops(e).up_left) for e_ in row)
    h2 = BY_LABEL["H2"]
    x = E(1, word("xy", (1,)))
    assert coproduct_word(h2, x) == tensor(E(0, word("x")), E(1, word("y")))
    assert coproduct_word(h2, x, "formula") == tensor(E(1, word("x")), E(1, word("y")))


def test_three_letter_formula_on_h2():
    h2 = BY_LABEL["H2"]
    for a1, a2, a3 in itertools.product(range(2), repeat=3):
        got = coproduct_word(h2, E(a1, parse_word(f"x {a2} y {a3} z")), "formula")
        right_types = {k[1][0] for k in got.keys() if len(k[1][1]) == 1}
        # ◀ is the right projection on H2, so the chain collapses to α₃
        assert right_types == {a3}


@pytest.mark.parametrize("label", ["F3", "F4", "H2"])
def test_word_bialgebra(label):
    assert check_bialgebra_compat(BY_LABEL[label], "words", 3).ok


def test_closed_word_formula_fails_on_h2():
    rep = check_bialgebra_compat(BY_LABEL["H2"], "words", 2, mode="formula", stop_at_first=True)
    assert not rep.ok
    assert cuts_discrepancies(BY_LABEL["H2"], 3, "words")
    assert cuts_discrepancies(BY_LABEL["F3"], 3, "words") == []


def test_noncommutative_word_violation():
    rep = check_bialgebra_compat(BY_LABEL["F5"], "words", 2, stop_at_first=True)
    assert not rep.ok
    f = rep.failures[0]
    assert f.kind in (PREC, SUCC) and f.expected != f.actual


def test_generator_collision_on_a1():
    c = generator_collision(BY_LABEL["A1"])
    assert c is not None and c.first != c.second
    a1 = BY_LABEL["A1"]
    p1 = scalar_extension_product(a1, c.side, gen(c.first[0]), gen(c.first[1]))
    p2 = scalar_extension_product(a1, c.side, gen(c.second[0]), gen(c.second[1]))
    assert p1 == p2 == c.product


def test_no_collision_when_nondegenerate():
    for label in NONDEGENERATE:
        assert generator_collision(BY_LABEL[label]) is None
    assert all(generator_collision(e) is not None for e in CATALOG if e.label not in NONDEGENERATE)
