from gmatrices.algebra import verify_algebra
from gmatrices.builders import (
    auslander_algebra,
    hereditary_algebra,
    named_hereditary_quiver,
)
from gmatrices.checks import (
    check_g_inverse_assembly,
    check_tilted_g_transfer,
    classify_torsion,
)
from gmatrices.endomorphism import EndomorphismData
from gmatrices.gmatrix import endomorphism_cartan, cartan_matrix, is_tilting
from gmatrices.ideals import word_ideal
from gmatrices.modules import (
    dim_vector,
    ext1_dim,
    g_vector,
    hom_dim,
    regular_module,
    simple_module,
    validate_module,
)
from gmatrices.suites import _linear_interval, a2_path_algebra, a2_special_tilting
from gmatrices.weyl import SymmetrizableCartan


def test_endomorphism_algebra_is_valid_and_matches_hom_cartan():
    algebra = a2_path_algebra()
    tilting = a2_special_tilting(algebra)
    end = EndomorphismData(tilting)
    assert verify_algebra(end.algebra)
    assert cartan_matrix(end.algebra) == endomorphism_cartan(tilting)


def test_endomorphism_radical_matches_trace_criterion():
    from gmatrices.algebra import Subspace, trace_form_radical

    algebra = a2_path_algebra()
    end = EndomorphismData(a2_special_tilting(algebra))
    computed = Subspace(end.algebra, trace_form_radical(end.algebra))
    assert computed.dim == 1
    assert computed == end.algebra.radical()


def test_endomorphism_algebra_of_tilting_ideal():
    algebra = auslander_algebra(2)
    ideal = word_ideal(algebra, (0,), SymmetrizableCartan.named("A2"))
    summands = ideal.nonzero_summands()
    end = EndomorphismData(summands)
    assert verify_algebra(end.algebra)
    # End of a tilting ideal over this algebra is the algebra again
    assert end.algebra.dim == algebra.dim


def test_hom_module_transport():
    algebra = a2_path_algebra()
    tilting = a2_special_tilting(algebra)
    end = EndomorphismData(tilting)
    for j, t in enumerate(tilting):
        transported = end.hom_module(t)
        validate_module(transported)
        assert dim_vector(transported) == tuple(
            hom_dim(s, t) for s in tilting
        )
        # Hom(T, T_j) is the j-th projective over End(T)
        assert g_vector(transported) == tuple(
            1 if k == j else 0 for k in range(len(tilting))
        )


def test_ext_module_dimensions_match():
    algebra = a2_path_algebra()
    tilting = a2_special_tilting(algebra)
    end = EndomorphismData(tilting)
    s2 = simple_module(algebra, 1)
    ext = end.ext_module(s2)
    validate_module(ext)
    assert dim_vector(ext) == tuple(ext1_dim(t, s2) for t in tilting)


def test_transfer_cases_on_a3():
    a3 = hereditary_algebra(named_hereditary_quiver("A3"), name="hereditary:A3")
    tilting = [
        _linear_interval(a3, 0, 0),
        _linear_interval(a3, 0, 2),
        _linear_interval(a3, 2, 2),
    ]
    assert is_tilting(tilting)
    end = EndomorphismData(tilting)
    cases = set()
    for i in range(3):
        for j in range(i, 3):
            module = _linear_interval(a3, i, j)
            if classify_torsion(tilting, module) == "mixed":
                continue
            rep = check_tilted_g_transfer(end, module)
            assert rep.passed
            cases.add(rep.inputs["case"])
    assert "hom" in cases and "ext-at-projective" in cases
    assert check_g_inverse_assembly(end).passed
