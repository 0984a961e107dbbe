"""The composite isomorphism decision procedure."""

import pytest

from dpsurgery.presentations import AbelianGroup, parse_presentation
from dpsurgery.verify import (Bounds, Status, Verdict, nonabelian_quotient_witness,
                              verify_abelian_isomorphism)


def test_cyclic_five():
    verdict = verify_abelian_isomorphism(
        parse_presentation("gens: a ; rels: a^5 ;"), AbelianGroup.cyclic(5))
    assert verdict.status is Status.ISOMORPHIC
    assert any("order 5" in fact for fact in verdict.evidence)


def test_trefoil_vs_z_is_refuted():
    verdict = verify_abelian_isomorphism(
        parse_presentation("gens: a b ; rels: a b a B A B ;"),
        AbelianGroup.free(1), Bounds(2000, 150))
    # abelianization matches, so the refutation must come from an actual
    # nonabelianness witness, never from the abelianization alone
    assert verdict.status in (Status.NOT_ISOMORPHIC, Status.INCONCLUSIVE)
    if verdict.status is Status.NOT_ISOMORPHIC:
        assert any("nonabelian" in fact for fact in verdict.evidence)


def test_free_group_never_isomorphic_to_z2():
    verdict = verify_abelian_isomorphism(
        parse_presentation("gens: a b ; rels: ;"), AbelianGroup.free(2),
        Bounds(1000, 50))
    assert verdict.status is not Status.ISOMORPHIC


def test_wrong_abelianization_is_not_isomorphic():
    verdict = verify_abelian_isomorphism(
        parse_presentation("gens: a ; rels: a^5 ;"), AbelianGroup.cyclic(7))
    assert verdict.status is Status.NOT_ISOMORPHIC


def test_never_isomorphic_when_order_differs():
    # S3 has abelianization Z_2; comparing against Z_2 must fail on the order
    s3 = parse_presentation("gens: a b ; rels: a^3 , b^2 , a b a b ;")
    verdict = verify_abelian_isomorphism(s3, AbelianGroup.cyclic(2))
    assert verdict.status is Status.NOT_ISOMORPHIC
    assert any("6" in fact for fact in verdict.evidence)


def test_finite_target_isomorphic():
    p = parse_presentation("gens: a b ; rels: a^2 , b^3 , [a,b] ;")
    verdict = verify_abelian_isomorphism(p, AbelianGroup.of_orders(2, 3))
    assert verdict.status is Status.ISOMORPHIC


def test_nonabelian_quotient_witness():
    trefoil = parse_presentation("gens: a b ; rels: a b a B A B ;")
    witness = nonabelian_quotient_witness(trefoil, 5000)
    assert witness is not None and "order 6" in witness
    abelian = parse_presentation("gens: a b ; rels: [a,b] ;")
    assert nonabelian_quotient_witness(abelian, 5000) is None


def test_verdict_requires_evidence():
    with pytest.raises(ValueError):
        Verdict(Status.ISOMORPHIC, ())


def test_inconclusive_cites_bounds():
    # tiny bounds starve both engines; the verdict must say what ran out
    trefoil = parse_presentation("gens: a b ; rels: a b a B A B ;")
    verdict = verify_abelian_isomorphism(trefoil, AbelianGroup.free(1), Bounds(5, 5))
    if verdict.status is Status.INCONCLUSIVE:
        assert any("cap" in fact or "exhausted" in fact for fact in verdict.evidence)


def test_bounds_validation():
    with pytest.raises(ValueError):
        Bounds(0, 10)
