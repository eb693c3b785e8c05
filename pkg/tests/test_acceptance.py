"""Acceptance suite: every criterion at its stated (exact) tolerance.

Each test runs one criterion end to end, prints a single PASS/FAIL line with
the record count and elapsed time, and asserts exact equality throughout (all
comparisons inside the reports are entrywise integer equality; there are no
tolerances to tune).  Runtime budgets are generous sanity bounds from the
criteria; they are asserted loosely (3x) so slow CI hardware does not flake.
"""

import time

import pytest

from gmatrices import suites
from gmatrices.reports import all_pass


def _run(label, runner, budget, **kwargs):
    t0 = time.perf_counter()
    reports = runner(**kwargs)
    elapsed = time.perf_counter() - t0
    good = all_pass(reports)
    status = "PASS" if good else "FAIL"
    print(
        f"{status} {label}: {len(reports)} records, {elapsed:.1f}s "
        f"(budget {budget:.0f}s)"
    )
    if not good:
        for rep in reports:
            if not rep.passed:
                print("   " + rep.summary_line())
    assert good, f"{label}: some records failed"
    assert elapsed < 3 * budget, f"{label}: exceeded even the relaxed budget"
    return reports


def test_criterion_1_grothendieck_transfer():
    """Transfer identity for all tilting ideals at n = 2, 3, 4 against all
    simples plus 20 fixed-seed random modules each; exact; < 60 s."""
    reports = _run(
        "criterion 1 (thm-3.1 transfer)", suites.run_dim_transfer, 60.0
    )
    # n = 4 contributes 24 tilting modules x 24 test modules
    assert len(reports) == (2 * 22) + (6 * 23) + (24 * 24)


def test_criterion_2_cartan_congruences():
    """Cartan congruence, determinant equality, Coxeter conjugacy and Euler
    preservation for every tilting module of criterion 1 plus the special
    two-vertex tilting module; exact; < 10 s."""
    _run("criterion 2 (prop-3.3/cor-3.4/cor-3.5)", suites.run_congruences, 10.0)


def test_criterion_3_symmetric_groups():
    """Transpose realization over the Auslander family for the whole
    symmetric group at n = 2, 3, 4, with composition and factorization
    corollaries on all pairs; exact; < 120 s."""
    reports = _run(
        "criterion 3 (thm-5.4, cor-5.6/5.7)", suites.run_symmetric_group, 120.0
    )
    mains = [r for r in reports if r.claim == "thm-5.4"]
    assert len(mains) == 2 + 6 + 24


def test_criterion_4_weyl_groups():
    """Reflection realization over the preprojective algebras of the two
    rank-2 types and the rank-3 symmetric type, all group elements, with the
    zero-column convention at the longest element and the corollaries;
    exact; < 300 s."""
    reports = _run(
        "criterion 4 (thm-6.7, cor-6.8/6.9/6.11)", suites.run_weyl, 300.0
    )
    mains = [r for r in reports if r.claim == "thm-6.7"]
    assert len(mains) == 6 + 24 + 8


def test_criterion_5_mutation():
    """Mutation layer on 1000 fixed-seed skew-symmetric matrices, every
    direction: involution, negation, conjugation both signs, G-realization;
    exact; < 10 s."""
    reports = _run("criterion 5 (thm-3.11 mutation)", suites.run_mutation, 10.0)
    assert {r.claim for r in reports} == {
        "mut-involution",
        "mut-negation",
        "gls-conj",
        "thm-3.11",
    }


def test_criterion_6_functor_realizations():
    """1-Gorenstein equivalences, Nakayama transfer on the self-injective
    preprojective algebras (simples plus 20 random modules), and translate
    transfer over the three hereditary types; exact; < 30 s."""
    _run(
        "criterion 6 (prop-4.1/4.2/4.4)", suites.run_functor_realizations, 30.0
    )


def test_criterion_7_silting_transfer():
    """Silting transfer for the complexes of all built-in pairs over the
    two-vertex path algebra and the two-layer Auslander algebra, on all
    simples, with agreement against the module-level transfer whenever the
    cokernel is tilting; exact; < 30 s."""
    _run("criterion 7 (thm-7.3 silting)", suites.run_silting, 30.0)


def test_criterion_8_structural_invariants():
    """Key inner-product lemma and presentation-dimension identity on 200
    fixed-seed module pairs per test algebra; unimodularity plus row
    sign-coherence for every constructed G-matrix; the radical presentations
    of the Auslander family reproduced exactly; exact; < 60 s."""
    _run("criterion 8 (structural invariants)", suites.run_structural, 60.0)


def test_criterion_9_negative_controls():
    """A tau-tilting non-tilting input fails the congruence, and a
    deliberately non-reduced word yields the reduced word's ideal;
    exact; < 5 s."""
    reports = _run("criterion 9 (negative controls)", suites.run_controls, 5.0)
    assert {r.claim for r in reports} == {
        "control-congruence",
        "control-nonreduced",
    }
