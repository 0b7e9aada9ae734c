"""Extended diassociative semigroups and the Ω-dendriform structures they type."""

from .dendriform import PREC, SUCC
from .eds import (EdsError, FiniteEds, PreconditionError, StructureError, are_isomorphic, canonical_form,
                  check_eds, corank, dump_eds, inverse_ops, is_commutative, is_eds, is_nondegenerate,
                  nondegeneracy, parse_eds)
from .constructions import build_standard, catalog2, catalog_entry, cyclic_group, family, matching, star
from .enumeration import EnumFilter, enumerate_eds, reduce_up_to_iso
from .trees import Tree, TreePoly, parse_tree, shuffle_product_trees, typed_product
from .words import TypedWord, WordPoly, parse_word, word_product, word_shuffle_product
from .operad import Arity2Element, check_associative, compose, koszul_dual_dim3, solve_associative_fp
from .bialgebra import (ExtendedElement, TensorPoly, check_bialgebra_compat, coproduct_tree, coproduct_word,
                        scalar_extension_product)

__all__ = [
    "PREC", "SUCC", "EdsError", "FiniteEds", "PreconditionError", "StructureError", "are_isomorphic",
    "canonical_form", "check_eds", "corank", "dump_eds", "inverse_ops", "is_commutative", "is_eds",
    "is_nondegenerate", "nondegeneracy", "parse_eds", "build_standard", "catalog2", "catalog_entry",
    "cyclic_group", "family", "matching", "star", "EnumFilter", "enumerate_eds", "reduce_up_to_iso",
    "Tree", "TreePoly", "parse_tree", "shuffle_product_trees", "typed_product", "TypedWord", "WordPoly",
    "parse_word", "word_product", "word_shuffle_product", "Arity2Element", "check_associative", "compose",
    "koszul_dual_dim3", "solve_associative_fp", "ExtendedElement", "TensorPoly", "check_bialgebra_compat",
    "coproduct_tree", "coproduct_word", "scalar_extension_product",
]
