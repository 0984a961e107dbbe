"""Alexander polynomials, cross-checked against an independent coloring oracle."""

import random
from fractions import Fraction

import pytest

from dpsurgery.alexander import (alexander_of_braid, alexander_polynomial,
                                 coefficient_multiset, knot_family, substitute_square)
from dpsurgery.knots import (BraidWord, FIGURE_EIGHT, TREFOIL, UNKNOT,
                             braid_to_diagram, torus_knot)
from dpsurgery.laurent import LaurentPoly


def rational_det(matrix):
    """Independent exact determinant via fraction Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            if factor:
                a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    assert det.denominator == 1
    return int(det)


def coloring_determinant(diagram):
    """Knot determinant from the coloring relation 2*over = in + out.

    Building the crossing/arc incidence matrix directly from the coloring
    rule and deleting one row and one column is an independent route to
    |H_1| of the double branched cover.
    """
    n = diagram.arcs
    if not diagram.crossings:
        return 1
    rows = []
    for c in diagram.crossings:
        row = [0] * n
        row[c.over] += 2
        row[c.under_in] -= 1
        row[c.under_out] -= 1
        rows.append(row)
    minor = [row[1:] for row in rows[:-1]]
    return abs(rational_det(minor))


def random_knot_braids(count, max_letters=8, max_strands=3, seed=1234):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        strands = rng.randint(2, max_strands)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                        for _ in range(rng.randint(1, max_letters)))
        braid = BraidWord(strands, letters)
        if braid.is_knot_closure():
            found.append(braid)
    return found


def test_unknot():
    assert alexander_of_braid(UNKNOT) == LaurentPoly.one()
    assert alexander_of_braid(BraidWord(2, (1,))) == LaurentPoly.one()
    assert alexander_of_braid(BraidWord(2, (-1,))) == LaurentPoly.one()


def test_trefoil():
    assert alexander_of_braid(TREFOIL) == LaurentPoly.parse("t^-1 - 1 + t")


def test_figure_eight():
    assert alexander_of_braid(FIGURE_EIGHT) == LaurentPoly.parse("-t^-1 + 3 - t")


def test_coefficient_multisets():
    assert coefficient_multiset(LaurentPoly.one()) == (1,)
    assert coefficient_multiset(alexander_of_braid(TREFOIL)) == (-1, 1, 1)
    assert coefficient_multiset(alexander_of_braid(FIGURE_EIGHT)) == (-1, -1, 3)


def test_substitute_square_examples():
    assert substitute_square(LaurentPoly.one()) == LaurentPoly.one()
    assert substitute_square(LaurentPoly.parse("t^-1 - 1 + t")) == \
        LaurentPoly.parse("t^-2 - 1 + t^2")
    assert substitute_square(LaurentPoly.parse("-t^-1 + 3 - t")) == \
        LaurentPoly.parse("-t^-2 + 3 - t^2")


def test_random_braids_value_symmetry_determinant():
    for braid in random_knot_braids(50):
        diagram = braid_to_diagram(braid)
        delta = alexander_polynomial(diagram)
        assert delta.evaluate_unit(1) == 1
        assert delta.is_palindromic()
        assert delta.reverse() == delta
        assert abs(delta.evaluate_unit(-1)) == coloring_determinant(diagram)


def test_known_determinants():
    assert abs(alexander_of_braid(TREFOIL).evaluate_unit(-1)) == 3
    assert abs(alexander_of_braid(FIGURE_EIGHT).evaluate_unit(-1)) == 5
    assert abs(alexander_of_braid(torus_knot(2)).evaluate_unit(-1)) == 5


def test_torus_knot_3_4():
    # closure of (s1 s2)^4; the cyclotomic formula gives
    # (t^12 - 1)(t - 1) / ((t^3 - 1)(t^4 - 1)) = (t^8 + t^4 + 1)/(t^2 + t + 1)
    # = t^6 - t^5 + t^3 - t + 1, centered below; determinant |D(-1)| = 3
    braid = BraidWord(3, (1, 2) * 4)
    delta = alexander_of_braid(braid)
    assert delta == LaurentPoly(-3, (1, -1, 0, 1, 0, -1, 1))
    assert abs(delta.evaluate_unit(-1)) == 3


def test_torus_knot_2_5_exact():
    delta = alexander_of_braid(torus_knot(2))
    assert delta == LaurentPoly(-2, (1, -1, 1, -1, 1))


def test_invariance_under_conjugation_and_stabilization():
    rng = random.Random(77)
    for braid in random_knot_braids(20, max_letters=6, seed=4321):
        delta = alexander_of_braid(braid)
        # conjugation by a generator
        g = rng.randint(1, braid.strands - 1) if braid.strands > 1 else None
        if g is not None:
            conjugated = BraidWord(braid.strands, (g,) + braid.letters + (-g,))
            assert alexander_of_braid(conjugated) == delta
        # Markov stabilization: add a strand and a crossing with it
        for sign in (1, -1):
            stabilized = BraidWord(braid.strands + 1,
                                   braid.letters + (sign * braid.strands,))
            assert alexander_of_braid(stabilized) == delta


def test_torus_knot_family():
    family = knot_family(10)
    sizes = [len(coefficient_multiset(delta)) for _, delta in family]
    assert sizes == [3, 5, 7, 9, 11, 13, 15, 17, 19, 21]
    multisets = {coefficient_multiset(delta) for _, delta in family}
    assert len(multisets) == 10
    assert family[0][0] == TREFOIL
    assert family[0][1] == LaurentPoly.parse("t^-1 - 1 + t")
    # second entry: 5 nonzero coefficients
    assert len(coefficient_multiset(family[1][1])) == 5
    with pytest.raises(ValueError):
        knot_family(0)
