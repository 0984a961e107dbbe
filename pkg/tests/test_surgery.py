"""Twisted surgery: gluing matrices, the two presentation paths, embeddings."""

import pytest

from dpsurgery.coset import coset_enumerate
from dpsurgery.knots import FIGURE_EIGHT, TREFOIL, UNKNOT, knot_group_from_braid
from dpsurgery.presentations import AbelianGroup, abelianization, \
    parse_presentation
from dpsurgery.scenarios import (nodal_configuration, rational_configuration,
                                 tori_configuration, trivial_complement_configuration)
from dpsurgery.surgery import (CaseParams, GluingMatrix, HypothesisError, SurgerySpec,
                               apply_surgery, case_presentation, check_case_hypothesis,
                               is_twist_matrix, surgered_presentation,
                               twist_gluing_matrix, validate_gluing_matrix,
                               verify_group_preserved)
from dpsurgery.verify import Status, certify_abelian, verify_abelian_isomorphism


TREFOIL_DATA = knot_group_from_braid(TREFOIL)
FIG8_DATA = knot_group_from_braid(FIGURE_EIGHT)
UNKNOT_DATA = knot_group_from_braid(UNKNOT)


# -- gluing matrices ----------------------------------------------------------

def test_twist_matrix_zero_is_identity():
    assert twist_gluing_matrix(0).entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_twist_matrix_pattern():
    for k in (-3, -1, 0, 1, 5):
        a = twist_gluing_matrix(k)
        ok, _ = validate_gluing_matrix(a)
        assert ok
        assert a.entries[0][1] == k
        assert is_twist_matrix(a)


def test_general_matrix_bezout():
    a = GluingMatrix(p=2, k=1, gamma=-1, beta=1)
    ok, _ = validate_gluing_matrix(a)
    assert ok
    assert not is_twist_matrix(a)
    bad, diagnostics = validate_gluing_matrix(GluingMatrix(p=2, k=2, gamma=1, beta=1))
    assert not bad
    assert any("must be 1" in d for d in diagnostics)


def test_twist_matrices_compose_additively():
    for j in (-2, 0, 3):
        for k in (-1, 2, 5):
            left = twist_gluing_matrix(j).entries
            right = twist_gluing_matrix(k).entries
            product = tuple(tuple(sum(left[i][t] * right[t][m] for t in range(3))
                                  for m in range(3)) for i in range(3))
            assert product == twist_gluing_matrix(j + k).entries


# -- hypotheses ----------------------------------------------------------------

def test_case_hypotheses():
    assert check_case_hypothesis(CaseParams.f1(5, 0))
    assert not check_case_hypothesis(CaseParams.f1(5, 2))
    assert not check_case_hypothesis(CaseParams.f2(1, 4, 1))
    assert check_case_hypothesis(CaseParams.f2(1, 3, 1))
    assert check_case_hypothesis(CaseParams.f3(3, 2, 1))
    assert not check_case_hypothesis(CaseParams.f3(2, 3, 2))
    # gcd(0, n) = n convention: k=0 makes F3 need gcd(m, 0) = m = 1
    assert check_case_hypothesis(CaseParams.f3(1, 5, 0))
    assert not check_case_hypothesis(CaseParams.f3(3, 5, 0))


def test_case_params_validation():
    with pytest.raises(ValueError):
        CaseParams.f2(1, 0, 1)
    with pytest.raises(ValueError):
        CaseParams.f3(0, 2, 1)
    with pytest.raises(ValueError):
        CaseParams("F9", 0)


def test_case_targets():
    assert CaseParams.f1(3, 0).target() == AbelianGroup.free(1)
    assert CaseParams.f2(1, 5, 1).target() == AbelianGroup.cyclic(5)
    assert CaseParams.f3(3, 2, 1).target() == AbelianGroup.cyclic(6)
    assert CaseParams.f3(2, 2, 1).target() == AbelianGroup(0, (2, 2))


# -- the two construction paths -------------------------------------------------

def test_surgered_trivial_base_unknot_trivializes():
    base = trivial_complement_configuration().pi1
    p = surgered_presentation(base, UNKNOT_DATA, 0)
    assert abelianization(p) == AbelianGroup.trivial()
    result = coset_enumerate(p, (), 1000)
    assert result.completed and result.index == 1


def test_surgered_rational_base_gives_zq():
    base = CaseParams.f2(1, 3, 1).base_presentation()
    p = surgered_presentation(base, TREFOIL_DATA, 1)
    verdict = verify_abelian_isomorphism(p, AbelianGroup.cyclic(3))
    assert verdict.status is Status.ISOMORPHIC


def test_surgered_missing_labels_rejected():
    with pytest.raises(ValueError):
        surgered_presentation(parse_presentation("gens: a ; rels: ;"), TREFOIL_DATA, 0)


def test_case_f1_unknot():
    p = case_presentation(CaseParams.f1(1, 0), UNKNOT_DATA)
    assert abelianization(p) == AbelianGroup.free(1)
    verdict = certify_abelian(p, 100)
    assert verdict.status is Status.ISOMORPHIC


def test_case_f3_unknot_abelianization():
    # cokernel of [[m, 0], [k*n, n]]
    for m, n, k in [(3, 2, 1), (4, 2, 1), (6, 4, 1)]:
        p = case_presentation(CaseParams.f3(m, n, k), UNKNOT_DATA)
        assert abelianization(p) == AbelianGroup.of_orders(m, n)
    p = case_presentation(CaseParams.f3(3, 2, 1), UNKNOT_DATA)
    assert abelianization(p) == AbelianGroup.cyclic(6)


def test_case_f2_trefoil_order_three():
    p = case_presentation(CaseParams.f2(1, 3, 1), TREFOIL_DATA)
    result = coset_enumerate(p, (), 100_000)
    assert result.completed and result.index == 3


CROSS_VALIDATION_CASES = [CaseParams.f1(1, 0), CaseParams.f1(2, 0),
                          CaseParams.f2(1, 3, 1), CaseParams.f2(1, 5, 1),
                          CaseParams.f3(3, 2, 1), CaseParams.f3(5, 2, 1),
                          CaseParams.f3(2, 3, 1)]


@pytest.mark.parametrize("case", CROSS_VALIDATION_CASES,
                         ids=[c.describe() for c in CROSS_VALIDATION_CASES])
@pytest.mark.parametrize("knot_data", [TREFOIL_DATA, FIG8_DATA], ids=["trefoil", "fig8"])
def test_paths_cross_validate(case, knot_data):
    amalgam = surgered_presentation(case.base_presentation(), knot_data, case.k)
    collapsed = case_presentation(case, knot_data)
    assert abelianization(amalgam) == abelianization(collapsed)
    if case.target().order() is not None:
        r1 = coset_enumerate(amalgam, (), 100_000)
        r2 = coset_enumerate(collapsed, (), 100_000)
        assert r1.completed and r2.completed
        assert r1.index == r2.index
    else:
        v1 = certify_abelian(amalgam, 500)
        v2 = certify_abelian(collapsed, 500)
        assert v1.status is Status.ISOMORPHIC
        assert v2.status is Status.ISOMORPHIC


# -- verify_group_preserved ------------------------------------------------------

def test_verified_cells():
    assert verify_group_preserved(CaseParams.f2(1, 3, 1), TREFOIL_DATA).status \
        is Status.ISOMORPHIC
    assert verify_group_preserved(CaseParams.f3(3, 2, 1), TREFOIL_DATA).status \
        is Status.ISOMORPHIC
    assert verify_group_preserved(CaseParams.f1(2, 0), TREFOIL_DATA).status \
        is Status.ISOMORPHIC


def test_refuses_outside_hypothesis():
    with pytest.raises(HypothesisError):
        verify_group_preserved(CaseParams.f2(1, 4, 1), TREFOIL_DATA)


def test_negative_control_never_certifies_z4():
    verdict = verify_group_preserved(CaseParams.f2(1, 4, 1), TREFOIL_DATA,
                                     require_hypothesis=False)
    assert verdict.status in (Status.NOT_ISOMORPHIC, Status.INCONCLUSIVE)
    # the enumerated order is 12, an honest refutation
    if verdict.status is Status.NOT_ISOMORPHIC:
        assert any("12" in fact for fact in verdict.evidence)


# -- apply_surgery ----------------------------------------------------------------

def test_zeeman_untwisting_for_plus_minus_one():
    config = tori_configuration(3, 2)
    for k in (1, -1):
        surgered = apply_surgery(SurgerySpec(config, 0, TREFOIL, k))
        assert surgered.components[0].embedding_tag.kind == "standard"
        assert surgered.components[1] == config.components[1]


def test_gluck_untwisting_for_zero_twist_on_a_line():
    config = nodal_configuration(1, 2)
    surgered = apply_surgery(SurgerySpec(config, 0, TREFOIL, 0))
    assert surgered.components[0].embedding_tag.kind == "standard"


def test_zero_twist_generic_component_keeps_tag():
    config = tori_configuration(3, 2)
    surgered = apply_surgery(SurgerySpec(config, 0, TREFOIL, 0))
    tag = surgered.components[0].embedding_tag
    assert tag.kind == "twist-spun"
    assert tag.knot == TREFOIL and tag.twist == 0


def test_surgery_preserves_homology_and_points():
    config = rational_configuration(1, 3)
    surgered = apply_surgery(SurgerySpec(config, 0, TREFOIL, 1))
    assert surgered.double_points == config.double_points
    for before, after in zip(config.components, surgered.components):
        assert before.homology_class == after.homology_class
        assert before.genus == after.genus
    assert surgered.components[1] == config.components[1]
    # the new complement presentation is the full amalgam
    verdict = verify_abelian_isomorphism(surgered.pi1, AbelianGroup.cyclic(3))
    assert verdict.status is Status.ISOMORPHIC


def test_general_matrix_surgery_records_no_claim():
    config = tori_configuration(3, 2)
    matrix = GluingMatrix(p=2, k=1, gamma=-1, beta=1)
    surgered = apply_surgery(SurgerySpec(config, 0, TREFOIL, matrix))
    assert surgered.pi1 is None
    tag = surgered.components[0].embedding_tag
    assert tag.kind == "twist-spun" and "no embedding claim" in tag.note


def test_invalid_point_index():
    config = tori_configuration(3, 2)
    with pytest.raises(ValueError):
        SurgerySpec(config, 99, TREFOIL, 1)
