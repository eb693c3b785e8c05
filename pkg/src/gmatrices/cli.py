"""Command-line interface: build algebras, query modules, run verifications.

Exit codes: 0 when every requested verification passes, 1 when any identity
fails, 2 for malformed input.  All vertex and word indices on the command
line are 1-based; matrices read from files or arguments are row-major
integer arrays.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, suites
from .algebra import AlgebraError
from .builders import Quiver, Relation, bound_quiver_algebra
from .gmatrix import cartan_matrix, coxeter_matrix, g_matrix
from .ideals import SymmetricGroupSuite, WeylGroupSuite, nakayama_permutation, word_ideal
from .linalg import IntMatrix, LinAlgError
from .modules import (
    ModuleError,
    ar_translate,
    dim_vector,
    g_vector,
    injective_module,
    nakayama,
    radical_submodule,
    regular_module,
    simple_module,
)
from .mutation import mutate, s_matrix
from .reports import all_pass
from .silting import (
    g_matrix_of_complex,
    is_presilting,
    is_silting,
    pair_complex_checked,
)
from .suites import named_algebra
from .weyl import SymmetrizableCartan, WeylError


class InputError(ValueError):
    pass


def load_algebra(args):
    if getattr(args, "input", None):
        return algebra_from_json_file(args.input)
    if getattr(args, "type", None):
        return named_algebra(args.type)
    raise InputError("need --type or --input")


def algebra_from_json_file(path):
    """Bound quiver algebra from the JSON schema.

    Schema: {"vertices": n, "arrows": [{"label", "src", "tgt"}],
    "relations": [[{"coeff", "path": [labels]}, ...], ...],
    "caps": {"length": 64}} with 1-based vertices.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read algebra file {path}: {exc}") from exc
    try:
        n = int(data["vertices"])
        arrows = tuple(
            (a["label"], int(a["src"]) - 1, int(a["tgt"]) - 1)
            for a in data.get("arrows", [])
        )
        quiver = Quiver(n, arrows)
        relations = []
        for rel in data.get("relations", []):
            terms = []
            for term in rel:
                coeff = term.get("coeff", 1)
                if isinstance(coeff, list):
                    coeff = Fraction(coeff[0], coeff[1])
                path = tuple(quiver.arrow_index(lab) for lab in term["path"])
                terms.append((coeff, path))
            relations.append(Relation(quiver, terms))
        cap = int(data.get("caps", {}).get("length", 64))
    except (KeyError, TypeError, ValueError, AlgebraError) as exc:
        raise InputError(f"malformed algebra file {path}: {exc}") from exc
    return bound_quiver_algebra(quiver, relations, cap=cap, name=path)


def parse_module(algebra, spec):
    """Named modules: simple:1, proj:2, inj:1, radp:1 (1-based vertices)."""
    try:
        kind, _, arg = spec.partition(":")
        v = int(arg) - 1
    except ValueError as exc:
        raise InputError(f"bad module spec {spec!r}") from exc
    if not 0 <= v < algebra.n:
        raise InputError(f"vertex out of range in {spec!r}")
    if kind == "simple":
        return simple_module(algebra, v)
    if kind == "proj":
        return regular_module(algebra, v)
    if kind == "inj":
        return injective_module(algebra, v)
    if kind == "radp":
        return radical_submodule(regular_module(algebra, v))
    raise InputError(f"unknown module kind in {spec!r}")


def parse_matrix(args):
    if getattr(args, "matrix", None):
        text = args.matrix
    elif getattr(args, "input", None):
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
    else:
        raise InputError("need --matrix or --input")
    try:
        rows = json.loads(text)
        return IntMatrix(rows)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matrix: {exc}") from exc


def parse_cartan(args):
    name = getattr(args, "cartan", None) or getattr(args, "type", None)
    if name is None:
        raise InputError("need --cartan")
    sym = getattr(args, "symmetrizer", None)
    if sym:
        return SymmetrizableCartan(
            SymmetrizableCartan.named(name).rows,
            symmetrizer=tuple(int(x) for x in sym.split(",")),
            name=name,
        )
    return SymmetrizableCartan.named(name)


def parse_word(text):
    if not text:
        return ()
    return tuple(int(x) - 1 for x in text.replace("*", ",").split(","))


def emit_matrix(matrix, args, label=""):
    if args.json:
        print(json.dumps(matrix.tolist()))
    else:
        if label:
            print(label)
        for row in matrix.tolist():
            print(" ".join(str(x) for x in row))


# -- verify registry ---------------------------------------------------------


def _filter(reports, claim):
    picked = [r for r in reports if r.claim == claim]
    return picked if picked else reports


def _ns(args):
    return (args.n,) if args.n else (2, 3, 4)


def _weyl_types(args):
    if args.cartan_type:
        return (args.cartan_type,)
    return ("A2", "A3", "B2")


def run_claim(claim, args):
    seed = args.seed
    if claim in ("thm-3.1",):
        return suites.run_dim_transfer(
            ns=_ns(args), random_count=args.random, seed=seed
        )
    if claim in ("prop-3.3", "cor-3.4", "cor-3.5"):
        return _filter(suites.run_congruences(ns=_ns(args)), claim)
    if claim == "prop-3.6":
        return suites.run_tilting_congruence()
    if claim in ("prop-3.12", "cor-3.12"):
        return _filter(suites.run_tilted_transfer(), claim)
    if claim in ("thm-3.11", "gls-conj", "mut-involution", "mut-negation"):
        return _filter(
            suites.run_mutation(seed=seed, count=args.count), claim
        )
    if claim in ("prop-4.1", "prop-4.2", "prop-4.4"):
        return _filter(
            suites.run_functor_realizations(random_count=args.random, seed=seed),
            claim,
        )
    if claim in ("thm-5.4", "cor-5.6", "cor-5.7", "lem-5.1", "ideal-well-defined"):
        reports = []
        for n in _ns(args):
            suite = SymmetricGroupSuite(n)
            reports.extend(
                {
                    "thm-5.4": suite.records_transpose,
                    "cor-5.6": suite.records_pair_products,
                    "cor-5.7": suite.records_factorization,
                    "lem-5.1": suite.records_tilting,
                    "ideal-well-defined": suite.records_well_defined,
                }[claim]()
            )
        return reports
    if claim in (
        "thm-6.7",
        "cor-6.8",
        "cor-6.9",
        "cor-6.11.1",
        "cor-6.11.2",
        "thm-6.6",
        "eq-6.1",
    ):
        reports = []
        for name in _weyl_types(args):
            suite = WeylGroupSuite(SymmetrizableCartan.named(name))
            reports.extend(
                {
                    "thm-6.7": suite.records_main,
                    "cor-6.8": suite.records_factorization,
                    "cor-6.9": suite.records_pair_products,
                    "cor-6.11.1": suite.records_longest,
                    "cor-6.11.2": suite.records_pairing,
                    "thm-6.6": suite.records_support,
                    "eq-6.1": suite.records_decomposition,
                }[claim]()
            )
        return reports
    if claim in ("thm-7.3", "silting-predicate", "thm7.3-vs-thm3.1", "phi-g-identification"):
        return _filter(suites.run_silting(), claim)
    if claim in (
        "key-lemma",
        "eq-2.1",
        "g-shape",
        "g-injective",
        "radical-presentations",
    ):
        return _filter(suites.run_structural(seed=seed), claim)
    if claim in ("controls", "control-congruence", "control-nonreduced"):
        reports = suites.run_controls()
        return reports if claim == "controls" else _filter(reports, claim)
    raise InputError(f"unknown claim {claim!r}")


def canonical_claim(text):
    """Accept thm5.4, thm-5.4, THM5.4 etc."""
    t = text.lower().replace("_", "-")
    for prefix in ("thm", "prop", "cor", "lem", "eq"):
        if t.startswith(prefix) and not t.startswith(prefix + "-"):
            rest = t[len(prefix):]
            if rest and (rest[0].isdigit()):
                return f"{prefix}-{rest}"
    return t


def cmd_verify(args):
    if args.claim == "all":
        results = suites.run_all()
        ok = True
        for label, reports, elapsed, budget in results:
            good = all_pass(reports)
            ok = ok and good
            status = "PASS" if good else "FAIL"
            print(
                f"{status} {label}: {len(reports)} records in {elapsed:.1f}s "
                f"(budget {budget:.0f}s)"
            )
            if not good:
                for r in reports:
                    if not r.passed:
                        print("  " + r.summary_line())
        return 0 if ok else 1
    claim = canonical_claim(args.claim)
    reports = run_claim(claim, args)
    reports.sort(key=lambda r: (r.claim, r.algebra, sorted(map(str, r.inputs.items()))))
    for r in reports:
        if args.json:
            print(r.to_json(include_elapsed=args.timings))
        else:
            print(r.summary_line())
    return 0 if all_pass(reports) else 1


# -- other commands ----------------------------------------------------------


def cmd_algebra(args):
    algebra = load_algebra(args)
    if args.json:
        print(
            json.dumps(
                {
                    "name": algebra.name,
                    "dim": algebra.dim,
                    "vertices": algebra.n,
                    "labels": list(algebra.labels),
                    "cartan": cartan_matrix(algebra).tolist(),
                },
                sort_keys=True,
            )
        )
        return 0
    print(f"algebra {algebra.name}: dimension {algebra.dim}, {algebra.n} vertices")
    print("basis:", " ".join(algebra.labels))
    emit_matrix(cartan_matrix(algebra), args, label="Cartan matrix (columns dim P(i)):")
    if args.action == "info":
        c = cartan_matrix(algebra)
        print("det C =", c.det())
        if c.det() != 0:
            cox = coxeter_matrix(algebra)
            if cox.phi.is_integral():
                emit_matrix(cox.phi.to_int(), args, label="Coxeter matrix:")
    return 0


def cmd_module(args):
    algebra = load_algebra(args)
    module = parse_module(algebra, args.module)
    if args.action == "gvec":
        result = g_vector(module)
    elif args.action == "dimvec":
        result = dim_vector(module)
    elif args.action == "tau":
        result = dim_vector(ar_translate(module))
    elif args.action == "nu":
        result = dim_vector(nakayama(module))
    else:
        raise InputError(args.action)
    if args.json:
        print(json.dumps(list(result)))
    else:
        print(" ".join(str(x) for x in result))
    return 0


def cmd_gmatrix(args):
    algebra = load_algebra(args)
    summands = [parse_module(algebra, s) for s in args.modules.split(",") if s]
    coproj = (
        tuple(int(v) - 1 for v in args.coproj.split(",")) if args.coproj else ()
    )
    data = g_matrix(summands, coproj, algebra=algebra)
    if args.json:
        print(
            json.dumps(
                {
                    "g": data.matrix.tolist(),
                    "d": data.d_matrix.tolist(),
                    "det": data.det(),
                    "c": data.c_matrix().tolist() if data.det() else None,
                },
                sort_keys=True,
            )
        )
        return 0
    emit_matrix(data.matrix, args, label="G-matrix:")
    emit_matrix(data.d_matrix, args, label="D-matrix:")
    print("det G =", data.det())
    print("row sign-coherent:", data.row_sign_coherent())
    return 0


def cmd_mutate(args):
    matrix = parse_matrix(args)
    emit_matrix(mutate(matrix, args.k - 1), args)
    return 0


def cmd_smatrix(args):
    matrix = parse_matrix(args)
    emit_matrix(s_matrix(matrix, args.k - 1), args)
    return 0


def cmd_weyl(args):
    cartan = parse_cartan(args)
    word = parse_word(args.word or "")
    if args.action == "rw":
        emit_matrix(cartan.word_matrix(word), args)
    elif args.action == "sigma":
        emit_matrix(cartan.sigma_word(word), args)
    elif args.action == "reduce":
        reduced = cartan.reduce_word(word)
        out = ",".join(str(i + 1) for i in reduced)
        print(json.dumps([i + 1 for i in reduced]) if args.json else (out or "e"))
    elif args.action == "longest":
        w0 = cartan.longest_word()
        out = ",".join(str(i + 1) for i in w0)
        print(json.dumps([i + 1 for i in w0]) if args.json else out)
    elif args.action == "enumerate":
        elements = cartan.enumerate_elements()
        if args.json:
            print(json.dumps([[i + 1 for i in w] for _, w in elements]))
        else:
            print(len(elements), "elements")
            for _, w in elements:
                print(",".join(str(i + 1) for i in w) or "e")
    else:
        raise InputError(args.action)
    return 0


def cmd_ideal(args):
    algebra = load_algebra(args)
    cartan = parse_cartan(args)
    word = parse_word(args.word or "")
    ideal = word_ideal(algebra, word, cartan)
    sigma = None
    if any(m.is_zero() for m in ideal.summands):
        sigma = nakayama_permutation(algebra)
    g = ideal.g_matrix(nakayama_perm=sigma)
    if args.json:
        print(
            json.dumps(
                {
                    "word": [i + 1 for i in ideal.word],
                    "dim": ideal.subspace.dim,
                    "summand_dims": [list(m.dim_vector()) for m in ideal.summands],
                    "g": g.tolist(),
                },
                sort_keys=True,
            )
        )
        return 0
    print("reduced word:", ",".join(str(i + 1) for i in ideal.word) or "e")
    print("ideal dimension:", ideal.subspace.dim)
    for v, m in enumerate(ideal.summands):
        print(f"  e{v + 1}I: dim vector {m.dim_vector()}")
    emit_matrix(g, args, label="G-matrix:")
    return 0


def cmd_silting(args):
    algebra = load_algebra(args)
    summands = [
        parse_module(algebra, s) for s in (args.modules or "").split(",") if s
    ]
    coproj = (
        tuple(int(v) - 1 for v in args.coproj.split(",")) if args.coproj else ()
    )
    complex_ = pair_complex_checked(algebra, summands, coproj)
    g = g_matrix_of_complex(complex_)
    from .silting import check_silting_transfer

    reports = []
    for v in range(algebra.n):
        reports.append(check_silting_transfer(complex_, simple_module(algebra, v)))
    if args.json:
        print(
            json.dumps(
                {
                    "g": g.tolist(),
                    "presilting": is_presilting(complex_),
                    "silting": is_silting(complex_),
                    "transfer_pass": all_pass(reports),
                },
                sort_keys=True,
            )
        )
        return 0 if all_pass(reports) else 1
    emit_matrix(g, args, label="G-matrix of the complex:")
    print("presilting:", is_presilting(complex_))
    print("silting:", is_silting(complex_))
    for r in reports:
        print(r.summary_line())
    return 0 if all_pass(reports) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gmatrices",
        description="Exact g-vector/G-matrix computations and identity verification "
        "for finite-dimensional algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", help="built-in algebra, e.g. auslander:n=3, "
                       "hereditary:A3, preprojective:B2:d=2,1")
        p.add_argument("--input", help="algebra JSON file")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("algebra", help="build or inspect an algebra")
    p.add_argument("action", choices=["build", "info"])
    common(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("module", help="module invariants")
    p.add_argument("action", choices=["gvec", "dimvec", "tau", "nu"])
    common(p)
    p.add_argument("--module", required=True, help="simple:1 | proj:2 | inj:1 | radp:1")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("gmatrix", help="G-matrix of a list of summands")
    common(p)
    p.add_argument("--modules", required=True)
    p.add_argument("--coproj", help="comma-separated coprojective vertices")
    p.set_defaults(func=cmd_gmatrix)

    p = sub.add_parser("mutate", help="matrix mutation in one direction")
    p.add_argument("--k", type=int, required=True, help="direction (1-based)")
    p.add_argument("--matrix", help="row-major JSON array")
    p.add_argument("--input", help="file with a row-major JSON array")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("smatrix", help="elementary row-replacement matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--matrix")
    p.add_argument("--input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_smatrix)

    p = sub.add_parser("weyl", help="reflection representation utilities")
    p.add_argument("action", choices=["rw", "sigma", "reduce", "longest", "enumerate"])
    p.add_argument("--cartan", help="named type, e.g. A2, B2")
    p.add_argument("--type", help="alias for --cartan")
    p.add_argument("--symmetrizer", help="comma-separated symmetrizer entries")
    p.add_argument("--word", help="comma-separated 1-based letters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("ideal", help="ideal of a word with its G-matrix")
    common(p)
    p.add_argument("--cartan", required=True)
    p.add_argument("--symmetrizer")
    p.add_argument("--word")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("silting", help="two-term silting complex from a pair")
    common(p)
    p.add_argument("--modules", help="comma-separated module specs")
    p.add_argument("--coproj", help="comma-separated coprojective vertices")
    p.set_defaults(func=cmd_silting)

    p = sub.add_parser("verify", help="verify a claim or the whole desk-scale matrix")
    p.add_argument("claim", help="claim id (thm5.4, prop3.3, ...) or 'all'")
    p.add_argument("--scale", default="desk", choices=["desk"])
    p.add_argument("--n", type=int)
    p.add_argument("--cartan-type", dest="cartan_type")
    p.add_argument("--seed", type=int, default=1729)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--random", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, AlgebraError, ModuleError, LinAlgError, WeylError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
