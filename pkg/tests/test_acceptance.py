"""Acceptance gate: one test per top-level criterion, with timing budgets.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Criterion 3 has one parameter cell whose stated target the
mathematics contradicts; that cell is kept as a faithful, intentionally
red test (see its docstring) rather than weakened.
"""

import random
import time

from dpsurgery.alexander import (alexander_of_braid, alexander_polynomial,
                                 coefficient_multiset, knot_family)
from dpsurgery.coset import coset_enumerate
from dpsurgery.configurations import spheres_presentation, tori_presentation
from dpsurgery.knots import (FIGURE_EIGHT, TREFOIL, UNKNOT,
                             braid_to_diagram, knot_group_from_braid)
from dpsurgery.laurent import LaurentPoly
from dpsurgery.presentations import AbelianGroup, abelianization, parse_presentation
from dpsurgery.scenarios import (nodal_configuration, rational_configuration,
                                 run_builtin, spheres_configuration,
                                 tori_configuration)
from dpsurgery.snf import mat_mul, smith_normal_form
from dpsurgery.surgery import (CaseParams, case_presentation, surgered_presentation,
                               verify_group_preserved)
from dpsurgery.sw import FormalSW, knot_surgery_transform
from dpsurgery.configurations import complement_h1
from dpsurgery.verify import Status, verify_abelian_isomorphism

from test_alexander import coloring_determinant, random_knot_braids
from test_snf import cofactor_det, minor_gcd


def _report(name, detail=""):
    print(f"\nACCEPTANCE {name}: PASS" + (f" ({detail})" if detail else ""))


def test_criterion_1_homology_reproduction():
    """Complement homology of all builtin families, exact, under a second."""
    start = time.monotonic()
    assert complement_h1(nodal_configuration(2, 3)) == AbelianGroup.free(1)
    assert complement_h1(nodal_configuration(2, 4)) == AbelianGroup(1, (2,))
    for p in range(1, 4):
        for q in range(1, 5):
            assert complement_h1(rational_configuration(p, q)) == AbelianGroup.cyclic(q)
    for m in range(1, 5):
        for n in range(1, 5):
            assert complement_h1(spheres_configuration(m, n)) == \
                AbelianGroup.of_orders(m, n)
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"homology sweep took {elapsed:.2f}s, budget 1s"
    _report("criterion-1 homology reproduction", f"{elapsed:.2f}s")


def test_criterion_2_presentation_collapse():
    """Sphere and torus configuration groups verify as Z_m + Z_n, m, n <= 3."""
    worst = 0.0
    for m in range(1, 4):
        for n in range(1, 4):
            target = AbelianGroup.of_orders(m, n)
            for build in (spheres_presentation, tori_presentation):
                start = time.monotonic()
                verdict = verify_abelian_isomorphism(build(m, n), target)
                elapsed = time.monotonic() - start
                worst = max(worst, elapsed)
                assert verdict.status is Status.ISOMORPHIC, \
                    (build.__name__, m, n, verdict.evidence)
                assert any(f"index {m * n}" in fact for fact in verdict.evidence)
                assert any("abelianization matches" in fact for fact in verdict.evidence)
                assert elapsed < 10.0
    _report("criterion-2 presentation collapse", f"worst run {worst:.2f}s")


KNOTS = {"trefoil": knot_group_from_braid(TREFOIL),
         "fig8": knot_group_from_braid(FIGURE_EIGHT)}


def test_criterion_3_case_verification_matrix():
    """The attainable verification matrix at default bounds, no inconclusives."""
    inconclusive = 0
    for name, knot in KNOTS.items():
        for d in (1, 2):
            verdict = verify_group_preserved(CaseParams.f1(d, 0), knot)
            assert verdict.status is Status.ISOMORPHIC, (name, d, verdict.evidence)
            assert any("commutators reduce" in fact for fact in verdict.evidence)
        for q in (3, 5):
            verdict = verify_group_preserved(CaseParams.f2(1, q, 1), knot)
            assert verdict.status is Status.ISOMORPHIC, (name, q, verdict.evidence)
            assert any(f"index {q}" in fact for fact in verdict.evidence)
        for m, n in ((3, 2), (5, 2), (2, 3)):
            verdict = verify_group_preserved(CaseParams.f3(m, n, 1), knot)
            assert verdict.status is Status.ISOMORPHIC, (name, m, n, verdict.evidence)
            inconclusive += verdict.status is Status.INCONCLUSIVE
    assert inconclusive == 0
    # negative control: the failed-hypothesis cell must never certify Z_4
    verdict = verify_group_preserved(CaseParams.f2(1, 4, 1), KNOTS["trefoil"],
                                     require_hypothesis=False)
    assert verdict.status is not Status.ISOMORPHIC
    _report("criterion-3 case verification matrix",
            "7 positive cells x 2 knots + negative control")


def test_criterion_3_f2_q2_cell_as_stated():
    """The q=2 cell as literally stated: F2(p=1, q=2, k=1) verifying as Z_2.

    This cell is unattainable: the case hypothesis needs p+k coprime to q,
    but gcd(1+1, 2) = 2, and the surgered group is provably not Z_2 (exact
    enumeration gives order 6 for the trefoil and 10 for the figure eight,
    on both independent construction paths).  The assertion below states
    the original target anyway and is expected to fail; it is kept red on
    purpose rather than weakened.  The README's "known red test" note
    carries the same analysis.
    """
    verdict = verify_group_preserved(CaseParams.f2(1, 2, 1), KNOTS["trefoil"],
                                     require_hypothesis=False)
    print(f"\nACCEPTANCE criterion-3 (q=2 cell): FAIL by design -- "
          f"actual verdict {verdict.status.value}: {verdict.evidence[-1]}")
    assert verdict.status is Status.ISOMORPHIC, \
        "unattainable as stated: gcd(p+k, q) = 2 and the true order is 6"


def test_criterion_4_cross_validation():
    """Both construction paths agree on every attainable matrix cell."""
    cases = [CaseParams.f1(1, 0), CaseParams.f1(2, 0),
             CaseParams.f2(1, 3, 1), CaseParams.f2(1, 5, 1),
             CaseParams.f3(3, 2, 1), CaseParams.f3(5, 2, 1), CaseParams.f3(2, 3, 1)]
    cells = 0
    for knot in KNOTS.values():
        for case in cases:
            amalgam = surgered_presentation(case.base_presentation(), knot, case.k)
            collapsed = case_presentation(case, knot)
            assert abelianization(amalgam) == abelianization(collapsed)
            if case.target().order() is not None:
                r1 = coset_enumerate(amalgam, (), 100_000)
                r2 = coset_enumerate(collapsed, (), 100_000)
                assert r1.completed and r2.completed and r1.index == r2.index
            cells += 1
    _report("criterion-4 cross-validation", f"{cells} cells")


def test_criterion_5_alexander_engine():
    """Named values, the random-braid property battery, and the torus family."""
    assert alexander_of_braid(UNKNOT) == LaurentPoly.one()
    assert alexander_of_braid(TREFOIL) == LaurentPoly.parse("t^-1 - 1 + t")
    assert alexander_of_braid(FIGURE_EIGHT) == LaurentPoly.parse("-t^-1 + 3 - t")
    for braid in random_knot_braids(50):
        diagram = braid_to_diagram(braid)
        delta = alexander_polynomial(diagram)
        assert delta.evaluate_unit(1) == 1
        assert delta.is_palindromic()
        assert abs(delta.evaluate_unit(-1)) == coloring_determinant(diagram)
    family = knot_family(10)
    multisets = [coefficient_multiset(delta) for _, delta in family]
    assert [len(m) for m in multisets] == list(range(3, 22, 2))
    assert len(set(multisets)) == 10
    _report("criterion-5 alexander engine", "50 random braids + family of 10")


def test_criterion_6_theorem_1_1_at_desk_scale():
    """All three knotted-family pipelines, count 10, under 60 seconds."""
    start = time.monotonic()
    runs = [("i", {"case": "i", "d2": 2, "count": 10}),
            ("ii", {"case": "ii", "p": 1, "q": 3, "k": 1, "count": 10}),
            ("iii", {"case": "iii", "m": 3, "n": 2, "k": 1, "count": 10})]
    for label, params in runs:
        report = run_builtin("theorem-1-1", params)
        assert report.exit_code() == 0, (label, report.render_text())
        pair_lines = [line for line in report.lines
                      if line.name.startswith("smoothly-distinct")]
        assert len(pair_lines) == 45
        assert all(line.verdict == "pass" for line in pair_lines)
        tag1 = [line for line in report.lines if "component-1-standard" in line.name]
        assert len(tag1) == 10 and all(line.verdict == "pass" for line in tag1)
        tag2 = [line for line in report.lines if "component-2-unchanged" in line.name]
        assert len(tag2) == 10 and all(line.verdict == "pass" for line in tag2)
        groups = [line for line in report.lines if line.name.startswith("group-preserved")]
        assert len(groups) == 10 and all(line.verdict == "pass" for line in groups)
        assert any(line.verdict == "cited" for line in report.lines)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"{elapsed:.1f}s exceeds the 60s budget"
    _report("criterion-6 knotted families at desk scale",
            f"3 x 45 pairs in {elapsed:.1f}s")


def test_criterion_7_exotic_actions():
    """Certificates pass on the stated quadruples and fail by the named check."""
    for m, n, k in ((3, 2, 1), (5, 2, 1), (2, 3, 1), (4, 3, 1)):
        report = run_builtin("theorem-7-2", {"m": m, "n": n, "k": k, "count": 5})
        assert report.exit_code() == 0, (m, n, k, report.render_text())
    report = run_builtin("theorem-7-2", {"m": 3, "n": 2, "k": 3, "count": 5})
    assert report.exit_code() != 0
    assert any(line.name == "plotnick-gcd" and line.verdict == "fail"
               for line in report.lines)
    report = run_builtin("theorem-7-2", {"m": 2, "n": 3, "k": 2, "count": 5})
    assert report.exit_code() != 0
    assert any(line.name == "group-preservation-gcd" and line.verdict == "fail"
               for line in report.lines)
    _report("criterion-7 exotic action certificates", "4 passing + 2 named failures")


def test_criterion_8_algebra_kernel_properties():
    """SNF oracle on 200 matrices, group-order oracles, transform multiplicativity."""
    rng = random.Random(808)
    for _ in range(200):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        matrix = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        d, u, v = smith_normal_form(matrix)
        assert mat_mul(mat_mul(u, matrix), v) == d
        assert abs(cofactor_det(u)) == 1 and abs(cofactor_det(v)) == 1
        product = 1
        for t in range(1, min(rows, cols) + 1):
            product *= d[t - 1][t - 1]
            assert abs(product) == minor_gcd(matrix, t)

    for order in range(2, 25):
        result = coset_enumerate(
            parse_presentation(f"gens: a ; rels: a^{order} ;"), (), 10_000)
        assert result.completed and result.index == order
    for half in range(2, 13):
        result = coset_enumerate(
            parse_presentation(f"gens: r s ; rels: r^{half} , s^2 , s r s r ;"),
            (), 10_000)
        assert result.completed and result.index == 2 * half

    for _ in range(100):
        def poly():
            return LaurentPoly.make(rng.randint(-3, 3),
                                    [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
        d1, d2 = poly(), poly()
        sw = FormalSW.canonical()
        chained = knot_surgery_transform(knot_surgery_transform(sw, d1), d2)
        assert chained.value == knot_surgery_transform(sw, d1 * d2).value
    _report("criterion-8 algebra kernel properties",
            "200 SNF + 35 group orders + 100 transforms")
