"""Shared data and strategies for the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from omegadend.constructions import catalog2, cyclic_group, family, matching, star
from omegadend.trees import LEAF, Tree


CATALOG = catalog2()
BY_LABEL = {e.label: e for e in CATALOG}
NONDEGENERATE = ["F3", "F4", "F5", "H2"]


def larger_examples():
    z3, z2 = cyclic_group(3), cyclic_group(2)
    return {
        "matching3": matching(3),
        "family_z3": family(z3),
        "star_z3": star(z3),
        "star_z3_1": star(z3, 1, (1,)),
        "star_z2_k2": star(z2, 2, (0, 1)),
    }


catalog_eds = st.sampled_from(CATALOG)


def trees(omega: int, max_size: int = 4) -> st.SearchStrategy[Tree]:
    """Typed trees with at most max_size internal vertices."""

    def build(size: int) -> st.SearchStrategy[Tree]:
        if size == 0:
            return st.just(LEAF)
        return st.integers(0, size - 1).flatmap(
            lambda i: st.tuples(build(i), st.integers(0, omega - 1), st.integers(0, omega - 1),
                                build(size - 1 - i)).map(
                lambda p: Tree(p[0], None if p[0].is_leaf else p[1], None if p[3].is_leaf else p[2], p[3])))

    return st.integers(1, max_size).flatmap(build)
