"""Acceptance-scale verification runs, shared by the CLI and the test suite.

Each runner assembles the inputs for one family of identities (algebras,
tilting objects, seeded random modules), executes the checkers, and returns
the reports.  Every randomized batch takes an explicit seed so reruns are
reproducible.
"""

from __future__ import annotations

import random
import time

from . import checks
from .builders import (
    auslander_algebra,
    hereditary_algebra,
    named_hereditary_quiver,
    preprojective_algebra,
)
from .gmatrix import g_matrix, is_tau_tilting, is_tilting
from .ideals import (
    SymmetricGroupSuite,
    WeylGroupSuite,
    literal_ideal_chain,
    word_ideal,
)
from .linalg import IntMatrix
from .modules import (
    minimal_presentation,
    radical_submodule,
    random_module,
    regular_module,
    simple_module,
)
from .mutation import mutation_batch
from .reports import record
from .silting import (
    check_silting_transfer,
    cokernel_pair,
    g_matrix_of_complex,
    hom_to_module,
    is_silting,
    pair_complex_checked,
)
from .weyl import SymmetrizableCartan


def named_algebra(spec):
    """Built-in algebras: auslander:n=3, hereditary:A3, preprojective:B2:d=2,1."""
    parts = spec.split(":")
    kind = parts[0]
    if kind == "auslander":
        arg = parts[1] if len(parts) > 1 else "n=2"
        n = int(arg.split("=")[1]) if "=" in arg else int(arg)
        return auslander_algebra(n)
    if kind == "hereditary":
        return hereditary_algebra(
            named_hereditary_quiver(parts[1]), name=f"hereditary:{parts[1]}"
        )
    if kind == "preprojective":
        name = parts[1]
        if len(parts) > 2 and parts[2].startswith("d="):
            sym = tuple(int(x) for x in parts[2][2:].split(","))
            cartan = SymmetrizableCartan(
                SymmetrizableCartan.named(name).rows, symmetrizer=sym, name=name
            )
        else:
            cartan = SymmetrizableCartan.named(name)
        return preprojective_algebra(cartan)
    raise ValueError(f"unknown algebra spec {spec!r}")


def _simples(algebra):
    return [simple_module(algebra, v) for v in range(algebra.n)]


def _random_modules(algebra, count, seed):
    rng = random.Random(seed)
    return [random_module(algebra, rng) for _ in range(count)]


def _tilting_ideal_summands(n):
    """Summand lists of every tilting ideal of the Auslander algebra."""
    suite = SymmetricGroupSuite(n)
    out = []
    for m, w in suite.family.elements:
        ideal = suite.family.ideal(m)
        out.append((w, list(ideal.summands)))
    return suite, out


def run_dim_transfer(ns=(2, 3, 4), random_count=20, seed=1729):
    """Grothendieck transfer for every tilting ideal against simples and
    seeded random modules."""
    out = []
    for n in ns:
        suite, tiltings = _tilting_ideal_summands(n)
        algebra = suite.algebra
        tests = _simples(algebra) + _random_modules(algebra, random_count, seed + n)
        for w, summands in tiltings:
            for module in tests:
                out.append(
                    checks.check_dim_transfer(
                        summands,
                        module,
                        inputs={"w": _wname(w), "N": module.name},
                    )
                )
    return out


def _wname(word):
    return "e" if not word else "*".join(f"s{i + 1}" for i in word)


def a2_path_algebra():
    return hereditary_algebra(named_hereditary_quiver("A2"), name="hereditary:A2")


def a2_special_tilting(algebra=None):
    """The tilting module P(1) + S(1) over the linear two-vertex quiver."""
    algebra = algebra or a2_path_algebra()
    return [regular_module(algebra, 0), simple_module(algebra, 0)]


def run_congruences(ns=(2, 3, 4)):
    """Cartan congruence, Coxeter conjugacy and Euler preservation for every
    tilting module from the transfer run plus the special A2 tilting module."""
    out = []
    tilting_sets = []
    for n in ns:
        _, tiltings = _tilting_ideal_summands(n)
        tilting_sets.extend(summands for _, summands in tiltings)
    a2 = a2_path_algebra()
    tilting_sets.append(a2_special_tilting(a2))
    for summands in tilting_sets:
        out.append(checks.check_cartan_congruence(summands))
        out.append(checks.check_coxeter_conjugacy(summands))
        algebra = summands[0].algebra
        simples = _simples(algebra)
        for left in simples:
            for right in simples:
                out.append(checks.check_euler_preservation(summands, left, right))
    return out


def run_symmetric_group(ns=(2, 3, 4)):
    out = []
    for n in ns:
        suite = SymmetricGroupSuite(n)
        out.extend(suite.records_transpose())
        out.extend(suite.records_pair_products())
        out.extend(suite.records_factorization())
        out.extend(suite.records_tilting())
        out.extend(suite.records_well_defined())
        out.extend(suite.records_decomposition())
    return out


def run_weyl(type_names=("A2", "A3", "B2")):
    out = []
    for name in type_names:
        suite = WeylGroupSuite(SymmetrizableCartan.named(name))
        out.extend(suite.records_main())
        out.extend(suite.records_factorization())
        out.extend(suite.records_pair_products())
        out.extend(suite.records_pairing())
        out.extend(suite.records_longest())
        out.extend(suite.records_support())
        out.extend(suite.records_decomposition())
    return out


def run_mutation(seed=2024, count=1000, max_size=8, bound=4):
    return mutation_batch(seed=seed, count=count, max_size=max_size, bound=bound)


def run_functor_realizations(random_count=20, seed=4021):
    """Serre-dual / Nakayama / translate realizations on their stated algebras."""
    out = []
    for spec in ("hereditary:A2", "preprojective:A2", "auslander:n=2"):
        out.append(checks.check_one_gorenstein(named_algebra(spec)))
    for spec in ("preprojective:A2", "preprojective:A3"):
        algebra = named_algebra(spec)
        tests = _simples(algebra) + _random_modules(algebra, random_count, seed)
        for module in tests:
            out.append(checks.check_nakayama_transfer(algebra, module))
    for name in ("A2", "A3", "D4"):
        algebra = hereditary_algebra(
            named_hereditary_quiver(name), name=f"hereditary:{name}"
        )
        for module in _translate_test_modules(algebra):
            out.append(checks.check_translate_transfer(algebra, module))
    return out


def _translate_test_modules(algebra):
    """Indecomposables without projective summands: non-projective simples,
    plus any non-projective radical of a projective."""
    pool = []
    for v in range(algebra.n):
        s = simple_module(algebra, v)
        if minimal_presentation(s).omega.dim != 0 or minimal_presentation(s).p1.dim != 0:
            pool.append(s)
        rad = radical_submodule(regular_module(algebra, v))
        if rad.dim and minimal_presentation(rad).p1.dim != 0:
            pool.append(rad)
    return [m for m in pool if not _is_projective(m)]


def _is_projective(module):
    pres = minimal_presentation(module)
    return pres.omega.dim == 0 and pres.p1.dim == 0


def _tau_tilting_pairs_for_silting(algebra):
    """Built-in tau-tilting pairs: tilting lists, support pairs, the co-pair."""
    name = algebra.name
    pairs = []
    if name.startswith("hereditary:A2"):
        p1 = regular_module(algebra, 0)
        p2 = regular_module(algebra, 1)
        s1 = simple_module(algebra, 0)
        pairs.append(([p1, p2], []))
        pairs.append(([p1, s1], []))
        pairs.append(([s1], [1]))
        pairs.append(([p2], [0]))
    elif name.startswith("auslander"):
        n = algebra.n
        suite = SymmetricGroupSuite(n)
        for m, w in suite.family.elements:
            ideal = suite.family.ideal(m)
            pairs.append((list(ideal.summands), []))
    pairs.append(([], list(range(algebra.n))))
    return pairs


def run_silting(specs=("hereditary:A2", "auslander:n=2")):
    """Silting transfer on every built-in pair, on all simples, plus the
    agreement with the module-level transfer when the cokernel is tilting."""
    out = []
    for spec in specs:
        algebra = named_algebra(spec)
        for modules, coproj in _tau_tilting_pairs_for_silting(algebra):
            complex_ = pair_complex_checked(algebra, modules, coproj, name=_pair_name(modules, coproj))
            t0 = time.perf_counter()
            out.append(
                record(
                    "silting-predicate",
                    algebra.name,
                    {"P": complex_.name},
                    [[1]],
                    [[1 if is_silting(complex_) else 0]],
                    time.perf_counter() - t0,
                )
            )
            for module in _simples(algebra):
                out.append(check_silting_transfer(complex_, module))
            h0_modules, h0_verts = cokernel_pair(complex_)
            if not h0_verts and len(h0_modules) == algebra.n and is_tilting(h0_modules):
                for module in _simples(algebra):
                    rep_silt = check_silting_transfer(complex_, module)
                    rep_tilt = checks.check_dim_transfer(h0_modules, module)
                    out.append(
                        record(
                            "thm7.3-vs-thm3.1",
                            algebra.name,
                            {"P": complex_.name, "X": module.name},
                            rep_silt.rhs,
                            rep_tilt.rhs,
                        )
                    )
            # G-matrix identification through the bijection
            t0 = time.perf_counter()
            g_complex = g_matrix_of_complex(complex_)
            g_pair = g_matrix(h0_modules, tuple(h0_verts), algebra=algebra).matrix
            out.append(
                record(
                    "phi-g-identification",
                    algebra.name,
                    {"P": complex_.name},
                    g_complex,
                    g_pair,
                    time.perf_counter() - t0,
                )
            )
    return out


def _pair_name(modules, coproj):
    parts = [m.name for m in modules] + [f"P({v + 1})[1]" for v in coproj]
    return "+".join(parts) if parts else "0"


def run_structural(seed=90125, pair_count=200, module_pool=20):
    """Key lemma and presentation-dimension identity on seeded module pairs,
    plus unimodularity and row sign-coherence of every constructed G-matrix,
    plus the radical presentation shapes of the Auslander family."""
    out = []
    algebra_specs = (
        "hereditary:A2",
        "hereditary:A3",
        "auslander:n=2",
        "auslander:n=3",
        "preprojective:A2",
        "preprojective:B2:d=2,1",
    )
    for spec in algebra_specs:
        algebra = named_algebra(spec)
        pool = _simples(algebra) + _random_modules(
            algebra, module_pool, seed + algebra.dim
        )
        rng = random.Random(seed * 2 + algebra.dim)
        ok_key = True
        ok_pres = True
        t0 = time.perf_counter()
        for _ in range(pair_count):
            left = pool[rng.randrange(len(pool))]
            right = pool[rng.randrange(len(pool))]
            if not checks.check_key_lemma(left, right).passed:
                ok_key = False
            if not checks.check_presentation_dims(left).passed:
                ok_pres = False
        elapsed = time.perf_counter() - t0
        out.append(
            record(
                "key-lemma",
                algebra.name,
                {"pairs": pair_count, "seed": seed},
                [[1]],
                [[1 if ok_key else 0]],
                elapsed,
            )
        )
        out.append(
            record(
                "eq-2.1",
                algebra.name,
                {"pairs": pair_count, "seed": seed},
                [[1]],
                [[1 if ok_pres else 0]],
                elapsed,
            )
        )
    # G-matrix shape invariants over every ideal family in scope
    for n in (2, 3, 4):
        suite = SymmetricGroupSuite(n)
        gs = [suite.family.ideal(m).g_matrix() for m, _ in suite.family.elements]
        out.append(_g_shape_record(suite.algebra.name, gs))
        out.append(_g_injectivity_record(suite.algebra.name, gs))
    for name in ("A2", "A3", "B2"):
        suite = WeylGroupSuite(SymmetrizableCartan.named(name))
        gs = [suite.g_of(m) for m, _ in suite.family.elements]
        out.append(_g_shape_record(suite.algebra.name, gs))
        out.append(_g_injectivity_record(suite.algebra.name, gs))
    # radical presentations of the Auslander family, re-asserted exactly
    for n in (2, 3, 4):
        algebra = auslander_algebra(n)
        t0 = time.perf_counter()
        got = []
        want = []
        for i in range(n):
            pres = minimal_presentation(
                radical_submodule(regular_module(algebra, i))
            )
            got.append([list(pres.p0_mult), list(pres.p1_mult), pres.second_syzygy_dim()])
            if i < n - 1:
                want_p0 = [1 if v in (i - 1, i + 1) and v >= 0 else 0 for v in range(n)]
                want_p1 = [1 if v == i else 0 for v in range(n)]
            else:
                want_p0 = [1 if v == n - 2 else 0 for v in range(n)]
                want_p1 = [0] * n
            want.append([want_p0, want_p1, 0])
        out.append(
            record(
                "radical-presentations",
                algebra.name,
                {"n": n},
                got,
                want,
                time.perf_counter() - t0,
            )
        )
    return out


def _g_shape_record(name, gs, claim="g-shape"):
    t0 = time.perf_counter()
    ok = all(
        g.det() in (1, -1) and _row_sign_coherent(g) and _c_column_coherent(g)
        for g in gs
    )
    return record(
        claim,
        name,
        {"count": len(gs)},
        [[1]],
        [[1 if ok else 0]],
        time.perf_counter() - t0,
    )


def _row_sign_coherent(g):
    from .linalg import is_row_sign_coherent

    return is_row_sign_coherent(g)


def _c_column_coherent(g):
    from .linalg import is_column_sign_coherent

    return is_column_sign_coherent(g.transpose().unimodular_inverse())


def _g_injectivity_record(name, gs, claim="g-injective"):
    t0 = time.perf_counter()
    distinct = len({g.data for g in gs})
    return record(
        claim,
        name,
        {"count": len(gs)},
        [[len(gs)]],
        [[distinct]],
        time.perf_counter() - t0,
    )


def run_tilting_congruence():
    """The tilting-iff-congruence criterion on tilting and non-tilting
    tau-tilting inputs (the latter from the preprojective family)."""
    out = []
    _, tiltings = _tilting_ideal_summands(2)
    for _, summands in tiltings:
        out.append(checks.check_tilting_congruence(summands))
    out.append(checks.check_tilting_congruence(a2_special_tilting()))
    cartan = SymmetrizableCartan.named("A2")
    algebra = preprojective_algebra(cartan)
    witness = word_ideal(algebra, (0,), cartan).nonzero_summands()
    out.append(checks.check_tilting_congruence(witness))
    return out


def _linear_interval(algebra, i, j):
    """Interval module over a linearly oriented path algebra: the quotient of
    P(i) supported on vertices i..j."""
    from .modules import quotient_module

    p = regular_module(algebra, i)
    drop = []
    for pos, v in enumerate(p.grading):
        if v > j:
            vec = [0] * p.dim
            vec[pos] = 1
            drop.append(tuple(vec))
    if not drop:
        return p
    mod, _ = quotient_module(p, drop, name=f"M[{i + 1},{j + 1}]")
    return mod


def run_tilted_transfer():
    """g-vector transfer to the endomorphism side, across torsion cases."""
    from .endomorphism import EndomorphismData

    out = []
    a2 = a2_path_algebra()
    configs = [
        (a2, a2_special_tilting(a2),
         [regular_module(a2, 0), regular_module(a2, 1), simple_module(a2, 0)]),
    ]
    a3 = hereditary_algebra(named_hereditary_quiver("A3"), name="hereditary:A3")
    coray = [_linear_interval(a3, 0, j) for j in range(2, -1, -1)]
    tests = [
        _linear_interval(a3, i, j) for i in range(3) for j in range(i, 3)
    ]
    configs.append((a3, coray, tests))
    # a tilting module with a genuine torsion-free-part-of-a-projective case
    spread = [
        _linear_interval(a3, 0, 0),
        _linear_interval(a3, 0, 2),
        _linear_interval(a3, 2, 2),
    ]
    configs.append((a3, spread, tests))
    for algebra, tilting, tests in configs:
        assert is_tilting(tilting)
        end = EndomorphismData(tilting)
        for module in tests:
            try:
                out.append(checks.check_tilted_g_transfer(end, module))
            except ValueError:
                # module is neither torsion nor torsion-free: no case applies
                continue
        out.append(checks.check_g_inverse_assembly(end))
    return out


def run_controls():
    """Negative controls: a tau-tilting non-tilting module must fail the
    congruence, and non-reduced words must reach the reduced word's ideal."""
    out = []
    cartan = SymmetrizableCartan.named("A2")
    algebra = preprojective_algebra(cartan)
    ideal = word_ideal(algebra, (0,), cartan)
    summands = ideal.nonzero_summands()
    t0 = time.perf_counter()
    tau_tilting = is_tau_tilting(summands)
    tilting = is_tilting(summands)
    congruence = checks.check_tilting_congruence(summands)
    congruent = congruence.rhs == [[1]]
    out.append(
        record(
            "control-congruence",
            algebra.name,
            {"T": [m.name for m in summands]},
            [[1, 1, 1]],
            [
                [
                    1 if tau_tilting else 0,
                    0 if tilting else 1,
                    0 if congruent else 1,
                ]
            ],
            time.perf_counter() - t0,
        )
    )
    aus = auslander_algebra(3)
    a3 = SymmetrizableCartan.named("A3")
    t0 = time.perf_counter()
    bad_word = (0, 1, 0, 0)
    via_api = word_ideal(aus, bad_word, a3)
    reduced = a3.reduce_word(bad_word)
    direct = literal_ideal_chain(aus, reduced)
    out.append(
        record(
            "control-nonreduced",
            aus.name,
            {"word": _wname(bad_word), "reduced": _wname(reduced)},
            [list(r) for r in via_api.subspace.basis],
            [list(r) for r in direct.basis],
            time.perf_counter() - t0,
        )
    )
    return out


ACCEPTANCE = [
    ("criterion-1 transfer (thm-3.1)", run_dim_transfer, 60.0),
    ("criterion-2 congruences (prop-3.3/cor-3.4/cor-3.5)", run_congruences, 10.0),
    ("criterion-3 symmetric group (thm-5.4, cor-5.6/5.7)", run_symmetric_group, 120.0),
    ("criterion-4 Weyl groups (thm-6.7, cor-6.8/6.9/6.11)", run_weyl, 300.0),
    ("criterion-5 mutation (thm-3.11)", run_mutation, 10.0),
    ("criterion-6 functor realizations (prop-4.1/4.2/4.4)", run_functor_realizations, 30.0),
    ("criterion-7 silting transfer (thm-7.3)", run_silting, 30.0),
    ("criterion-8 structural invariants", run_structural, 60.0),
    ("criterion-9 negative controls", run_controls, 5.0),
]


def run_all():
    """The full acceptance matrix; returns (label, reports, elapsed, budget)."""
    results = []
    for label, runner, budget in ACCEPTANCE:
        t0 = time.perf_counter()
        reports = runner()
        results.append((label, reports, time.perf_counter() - t0, budget))
    return results
