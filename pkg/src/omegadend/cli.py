"""Command-line front end.  Exit status: 0 success, 1 mathematical failure, 2 usage error."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import bialgebra, operad
from .constructions import catalog2
from .dendriform import PREC, SUCC, check_omega_dendriform, graded_pairs, graded_triples
from .eds import (EdsError, FiniteEds, are_isomorphic, check_eds, corank, derived_identity_check,
                  dump_eds, is_commutative, nondegeneracy, parse_eds)
from .enumeration import EnumFilter, enumerate_eds
from .trees import TreePoly, basis_by_degree, parse_tree, shuffle_product_trees, tree_mul, typed_product
from .words import parse_word, word_mul, word_product, word_shuffle_product, words_by_length


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def _load(path: str) -> FiniteEds:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_eds(text)
    except EdsError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _require_valid(eds: FiniteEds, out) -> bool:
    rep = check_eds(eds, stop_at_first=True)
    if not rep.passed:
        v = rep.violations[0]
        print(f"FAIL axiom={v.axiom} witness={v.witness} lhs={v.lhs} rhs={v.rhs}", file=out)
    return rep.passed


def _symbol(eds: FiniteEds, a: int) -> int:
    if not 0 <= a < eds.size:
        raise UsageError(f"type {a} outside 0..{eds.size - 1}")
    return a


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args, out) -> int:
    eds = _load(args.file)
    if not _require_valid(eds, out):
        return 1
    rep = nondegeneracy(eds)
    status = "nondegenerate" if rep.nondegenerate else "degenerate"
    print(f"OK {status} corank={rep.corank}", file=out)
    return 0


def cmd_catalog(args, out) -> int:
    if args.size != 2:
        raise UsageError("only --size 2 has a catalog")
    entries = catalog2()
    print(f"total={len(entries)}", file=out)
    for e in entries:
        rep = nondegeneracy(e)
        print(f"label={e.label} corank={rep.corank} nondegenerate={'yes' if rep.nondegenerate else 'no'} "
              f"commutative={'yes' if is_commutative(e) else 'no'}", file=out)
        out.write(dump_eds(e))
    return 0


def cmd_enumerate(args, out) -> int:
    flt = EnumFilter(args.diassociative, args.nondegenerate, args.commutative, args.up_to_iso)
    try:
        res = enumerate_eds(args.size, flt, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.up_to_iso:
        print(f"total={sum(s for _, s in res)} classes={len(res)}", file=out)
        if not args.summary:
            for rep, size in res:
                print(f"# class size={size}", file=out)
                out.write(dump_eds(rep))
    else:
        print(f"total={len(res)}", file=out)
        if not args.summary:
            for e in res:
                out.write(dump_eds(e))
    return 0


def cmd_corank(args, out) -> int:
    print(f"corank={corank(_load(args.file))}", file=out)
    return 0


def cmd_iso(args, out) -> int:
    a, b = _load(args.first), _load(args.second)
    perm = are_isomorphic(a, b)
    if perm is None:
        print("isomorphic=no", file=out)
        return 1
    print(f"isomorphic=yes perm={','.join(map(str, perm))}", file=out)
    return 0


def cmd_mul(args, out) -> int:
    eds = _load(args.eds)
    a = _symbol(eds, args.type)
    try:
        if args.algebra == "trees":
            x, y = parse_tree(args.x), parse_tree(args.y)
            if args.method == "shuffle":
                res = shuffle_product_trees(eds, args.side, a, x, y)
            else:
                res = typed_product(eds, args.side, a, x, y)
        else:
            x, y = parse_word(args.x), parse_word(args.y)
            if args.method == "shuffle":
                res = word_shuffle_product(eds, args.side, a, x, y)
            else:
                res = word_product(eds, args.side, a, x, y)
    except EdsError as exc:
        raise UsageError(str(exc)) from None
    print(f"terms={len(res)}", file=out)
    print(res, file=out)
    return 0


def cmd_compose(args, out) -> int:
    eds = _load(args.eds)
    try:
        t = parse_tree(args.tree)
        subs = [parse_tree(s) for s in args.args]
        res = operad.compose(eds, operad.OperadElement(t.size, TreePoly.of(t)),
                             [operad.OperadElement(s.size, TreePoly.of(s)) for s in subs])
    except EdsError as exc:
        raise UsageError(str(exc)) from None
    print(f"arity={res.arity} terms={len(res.value)}", file=out)
    print(res.value, file=out)
    return 0


def cmd_assoc_verify(args, out) -> int:
    eds = _load(args.eds)
    try:
        m = operad.parse_arity2(args.element)
        if any(not 0 <= a < eds.size for _, a in m.coeffs):
            raise UsageError("arity-2 literal uses a type outside the carrier")
        res = operad.check_associative(eds, m, args.mode)
    except EdsError as exc:
        raise UsageError(str(exc)) from None
    print(f"associative={'yes' if res else 'no'} failures={len(res.witnesses)}", file=out)
    for w in res.witnesses[:10]:
        print(f"  {w}", file=out)
    return 0 if res else 1


def cmd_assoc_search(args, out) -> int:
    eds = _load(args.eds)
    try:
        sols = operad.solve_associative_fp(eds, args.mod)
    except EdsError as exc:
        raise UsageError(str(exc)) from None
    print(f"count={len(sols)}", file=out)
    for m in sorted(sols, key=lambda m: sorted((k, int(c)) for k, c in m.coeffs.items())):
        print(operad.format_arity2(m), file=out)
    return 0


def cmd_koszul(args, out) -> int:
    eds = _load(args.file)
    d, c, n = operad.koszul_dual_dim3(eds), corank(eds), eds.size
    print(f"dim3={d} omega={n} corank={c} formula={3 * n * n + 2 * c}", file=out)
    return 0


def cmd_coproduct(args, out) -> int:
    eds = _load(args.eds)
    a = _symbol(eds, args.symbol)
    try:
        if args.algebra == "trees":
            if args.mode not in ("recursive", "cuts"):
                raise UsageError("tree coproduct modes: recursive, cuts")
            x = bialgebra.ExtendedElement.of(a, parse_tree(args.literal))
            res = bialgebra.coproduct_tree(eds, x, args.mode)
        else:
            if args.mode not in bialgebra.WORD_MODES:
                raise UsageError("word coproduct modes: recursive, formula")
            x = bialgebra.ExtendedElement.of(a, parse_word(args.literal))
            res = bialgebra.coproduct_word(eds, x, args.mode, check=not args.force)
    except EdsError as exc:
        raise UsageError(str(exc)) from None
    print(f"terms={len(res)}", file=out)
    print(res, file=out)
    return 0


def verify_all(eds: FiniteEds, bound: int, out) -> int:
    """One report covering axioms, derived identities, products and coproducts."""
    ok = True

    def line(key: str, good: bool, extra: str = "") -> None:
        nonlocal ok
        ok = ok and good
        print(f"{key}={'pass' if good else 'FAIL'}{(' ' + extra) if extra else ''}", file=out)

    pw, mf = check_eds(eds), check_eds(eds, "map_form")
    line("axioms_pointwise", pw.passed, f"violations={len(pw.violations)}")
    line("axioms_map_form", mf.passed, f"violations={len(mf.violations)}")
    if not pw.passed:
        return 1
    rep = nondegeneracy(eds)
    print(f"nondegenerate={'yes' if rep.nondegenerate else 'no'} corank={rep.corank} "
          f"commutative={'yes' if is_commutative(eds) else 'no'}", file=out)
    if rep.nondegenerate:
        ids = derived_identity_check(eds)
        line("derived_identities", ids.passed, f"failures={len(ids.violations)}")
    trees = basis_by_degree(eds.size, bound)
    v = check_omega_dendriform(eds, tree_mul(eds), graded_triples(trees, bound))
    line("tree_relations", not v, f"bound={bound}")
    eq = all(typed_product(eds, s, a, x, y) == shuffle_product_trees(eds, s, a, x, y)
             for x, y in graded_pairs(trees, bound) for s in (PREC, SUCC) for a in range(eds.size))
    line("tree_shuffle_formula", eq)
    words = words_by_length("xy", eds.size, bound)
    v = check_omega_dendriform(eds, word_mul(eds), graded_triples(words, bound))
    line("word_relations", not v, f"bound={bound}")
    eq = all(word_product(eds, s, a, x, y) == word_shuffle_product(eds, s, a, x, y)
             for x, y in graded_pairs(words, bound) for s in (PREC, SUCC) for a in range(eds.size))
    line("word_shuffle_formula", eq)
    kd = operad.koszul_dual_dim3(eds)
    line("koszul_dim3", kd == 3 * eds.size ** 2 + 2 * rep.corank, f"dim3={kd}")
    if rep.nondegenerate:
        r = bialgebra.check_bialgebra_compat(eds, "trees", bound)
        line("tree_bialgebra", r.ok, f"checked={r.checked}")
        disc = bialgebra.cuts_discrepancies(eds, bound)
        print(f"cuts_formula_discrepancies={len(disc)}", file=out)
        for d in disc[:5]:
            print(f"  {d.record()}", file=out)
        r = bialgebra.check_bialgebra_compat(eds, "words", bound, stop_at_first=True)
        if is_commutative(eds):
            line("word_bialgebra", r.ok, f"checked={r.checked}")
        else:
            print(f"word_bialgebra_obstructed={'yes' if not r.ok else 'no'}", file=out)
    else:
        col = bialgebra.generator_collision(eds)
        if col is not None:
            print(f"generator_collision side={col.side} pairs={col.first},{col.second}", file=out)
    print(f"result={'pass' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def cmd_verify_all(args, out) -> int:
    return verify_all(_load(args.eds), args.bound, out)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="omegadend", description="Extended diassociative semigroups and Ω-dendriform structures.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="validate the axioms and report nondegeneracy")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("catalog", help="print the catalog of structures on two elements")
    s.add_argument("--size", type=int, required=True)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("enumerate", help="enumerate all structures on a small carrier")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--diassociative", action="store_true")
    s.add_argument("--nondegenerate", action="store_true")
    s.add_argument("--commutative", action="store_true")
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--summary", action="store_true", help="print only the count line")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("corank", help="print the corank")
    s.add_argument("file")
    s.set_defaults(func=cmd_corank)

    s = sub.add_parser("iso", help="decide isomorphism of two structures")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("mul", help="multiply two typed trees or words")
    s.add_argument("--eds", required=True)
    s.add_argument("--side", choices=(PREC, SUCC), required=True)
    s.add_argument("--type", type=int, required=True)
    s.add_argument("--algebra", choices=("trees", "words"), required=True)
    s.add_argument("--method", choices=("recursive", "shuffle"), default="recursive")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("compose", help="operadic composition of trees")
    s.add_argument("--eds", required=True)
    s.add_argument("tree")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("assoc-verify", help="test whether an arity-2 element is associative")
    s.add_argument("--eds", required=True)
    s.add_argument("--mode", choices=("equations", "composition"), default="equations")
    s.add_argument("element")
    s.set_defaults(func=cmd_assoc_verify)

    s = sub.add_parser("assoc-search", help="all associative arity-2 elements over F_p")
    s.add_argument("--eds", required=True)
    s.add_argument("--mod", type=int, required=True)
    s.set_defaults(func=cmd_assoc_search)

    s = sub.add_parser("koszul-dim3", help="arity-3 dimension of the Koszul dual")
    s.add_argument("file")
    s.set_defaults(func=cmd_koszul)

    s = sub.add_parser("coproduct", help="coproduct of α ⊗ (tree or word)")
    s.add_argument("--eds", required=True)
    s.add_argument("--algebra", choices=("trees", "words"), required=True)
    s.add_argument("--mode", default="recursive")
    s.add_argument("--symbol", type=int, default=0)
    s.add_argument("--force", action="store_true", help="skip the commutativity precondition for words")
    s.add_argument("literal")
    s.set_defaults(func=cmd_coproduct)

    s = sub.add_parser("verify-all", help="full conformance report for one structure")
    s.add_argument("--eds", required=True)
    s.add_argument("--bound", type=int, default=3)
    s.set_defaults(func=cmd_verify_all)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EdsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
