from __future__ import annotations

import pytest

from omegadend.constructions import (ConstructionError, build_standard, catalog_entry, cyclic_group,
                                     diassociative_pair, family, matching, morphism, star)
from omegadend.eds import EdsError, are_isomorphic, is_commutative, is_eds, is_nondegenerate

from .support import BY_LABEL


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matching_is_a_nondegenerate_eds(n):
    e = matching(n)
    assert is_eds(e) and is_nondegenerate(e) and is_commutative(e)


def test_matching_two_is_f3():
    assert matching(2) == BY_LABEL["F3"].with_label("")


def test_family_of_group_is_nondegenerate():
    for n in (2, 3, 4):
        e = family(cyclic_group(n))
        assert is_eds(e) and is_nondegenerate(e)
    assert are_isomorphic(family(cyclic_group(2)), BY_LABEL["H2"]) is not None


def test_family_of_non_group_is_degenerate():
    left_zero = ((0, 0), (1, 1))
    e = family(left_zero)
    assert is_eds(e) and not is_nondegenerate(e)


def test_family_rejects_non_associative_table():
    with pytest.raises(ConstructionError) as exc:
        family(((1, 0), (0, 0)))
    assert exc.value.witness is not None


def test_star_instances_match_catalog():
    z2 = cyclic_group(2)
    assert are_isomorphic(star(z2, 1, (1,)), BY_LABEL["F5"]) is not None
    assert are_isomorphic(star(z2, 1, (0,)), BY_LABEL["F4"]) is not None


def test_star_with_k_two():
    e = star(cyclic_group(2), 2, (0, 1))
    assert e.size == 4 and is_eds(e) and is_nondegenerate(e)


def test_star_rejects_non_group():
    with pytest.raises(EdsError):
        star(((0, 0), (0, 0)))


def test_diassociative_pair_checks_axioms():
    e = diassociative_pair(((0, 0), (1, 1)), ((0, 1), (0, 1)))
    assert is_eds(e)
    with pytest.raises(ConstructionError):
        diassociative_pair(((0, 1), (1, 0)), ((1, 0), (0, 1)))


def test_morphism_construction_covers_catalog_entry():
    f = catalog_entry("F1")
    e = morphism(f.left, f.right, [0, 0], [0, 0])
    assert is_eds(e)


def test_build_standard_dispatch():
    assert build_standard("matching", n=3) == matching(3)
    with pytest.raises(ValueError):
        build_standard("nope")


def test_catalog_entry_unknown_label():
    with pytest.raises(KeyError):
        catalog_entry("Z9")
