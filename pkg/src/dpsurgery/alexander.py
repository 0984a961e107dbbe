"""Alexander polynomials by Fox calculus on Wirtinger presentations.

The Alexander matrix has one row per relator and one column per generator;
entry (r, g) is the Fox derivative of relator r with respect to generator g,
abelianized so every generator maps to t.  Dropping the last (redundant)
relator and the meridian column leaves a square matrix whose determinant is
the polynomial up to a unit.  The stored normal form is symmetric about
degree zero with value +1 at t = 1; that choice makes coefficient multisets
comparable across knots.
"""

from __future__ import annotations

from .knots import BraidWord, KnotDiagram, braid_to_diagram, torus_knot, wirtinger_presentation
from .laurent import LaurentPoly
from .presentations import Presentation
from .words import Word


def fox_derivative_row(relator: Word, ngens: int) -> list[LaurentPoly]:
    """Abelianized Fox derivatives of one relator (every generator -> t)."""
    row = [LaurentPoly.zero() for _ in range(ngens)]
    exponent = 0
    for g, e in relator.letters:
        if e == 1:
            row[g] = row[g] + LaurentPoly.term(1, exponent)
            exponent += 1
        else:
            exponent -= 1
            row[g] = row[g] + LaurentPoly.term(-1, exponent)
    return row


def alexander_matrix(p: Presentation) -> list[list[LaurentPoly]]:
    return [fox_derivative_row(r, p.ngens) for r in p.relators]


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division in Z[t] on dense coefficient lists (low degree first)."""
    if not any(b):
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    bb = list(b)
    while bb and bb[-1] == 0:
        bb.pop()
    if not a:
        return [0]
    if len(a) < len(bb):
        raise ArithmeticError("inexact polynomial division")
    out = [0] * (len(a) - len(bb) + 1)
    for k in range(len(out) - 1, -1, -1):
        if a[k + len(bb) - 1] % bb[-1]:
            raise ArithmeticError("inexact polynomial division")
        q = a[k + len(bb) - 1] // bb[-1]
        out[k] = q
        for i, c in enumerate(bb):
            a[k + i] -= q * c
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


def laurent_determinant(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant over Z[t, t^-1], exact, up to no unit at all.

    Each row is first shifted to plain polynomials; the accumulated shift is
    restored at the end.  Elimination is fraction-free (Bareiss), with exact
    polynomial division at every step.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    shift_total = 0
    rows: list[list[list[int]]] = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
        degrees = [p.min_degree for p in row if p.coeffs]
        base = min(degrees) if degrees else 0
        shift_total += base
        dense = []
        for p in row:
            width = p.max_degree - base + 1 if p.coeffs else 1
            cell = [0] * width
            for d, c in p.terms():
                cell[d - base] = c
            dense.append(cell)
        rows.append(dense)

    def is_zero(c: list[int]) -> bool:
        return not any(c)

    def mul(a: list[int], b: list[int]) -> list[int]:
        if is_zero(a) or is_zero(b):
            return [0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    def sub(a: list[int], b: list[int]) -> list[int]:
        out = [0] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] += x
        for i, y in enumerate(b):
            out[i] -= y
        return out

    sign = 1
    prev: list[int] = [1]
    for k in range(n - 1):
        if is_zero(rows[k][k]):
            pivot_row = next((i for i in range(k + 1, n) if not is_zero(rows[i][k])), None)
            if pivot_row is None:
                return LaurentPoly.zero()
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(rows[i][j], rows[k][k]), mul(rows[i][k], rows[k][j]))
                rows[i][j] = _poly_divexact(num, prev)
            rows[i][k] = [0]
        prev = rows[k][k]

    final = rows[n - 1][n - 1]
    det = LaurentPoly.make(shift_total, final)
    return LaurentPoly.term(sign, 0) * det


def normalize_alexander(raw: LaurentPoly) -> LaurentPoly:
    """Fix the unit ambiguity: divide out content, center, make value 1 at 1."""
    if raw.is_zero():
        raise ValueError("Alexander determinant vanished; invalid knot input")
    content = raw.content()
    poly = LaurentPoly.make(raw.min_degree, [c // content for c in raw.coeffs])
    span = poly.max_degree - poly.min_degree
    if span % 2:
        raise ValueError("Alexander polynomial has odd span; invalid knot input")
    centered = poly.shift(-(poly.min_degree + span // 2))
    if not centered.is_palindromic():
        raise ValueError("Alexander polynomial is not symmetric; invalid knot input")
    at_one = centered.evaluate_unit(1)
    if at_one == -1:
        centered = -centered
    elif at_one != 1:
        raise ValueError(f"Alexander polynomial evaluates to {at_one} at 1")
    return centered


def alexander_polynomial(d: KnotDiagram) -> LaurentPoly:
    """Normalized Alexander polynomial of a knot diagram."""
    data = wirtinger_presentation(d)
    p = data.presentation
    meridian = data.meridian
    relators = p.relators[:-1] if p.relators else ()
    matrix = []
    for r in relators:
        row = fox_derivative_row(r, p.ngens)
        matrix.append([cell for g, cell in enumerate(row) if g != meridian])
    return normalize_alexander(laurent_determinant(matrix))


def alexander_of_braid(b: BraidWord) -> LaurentPoly:
    return alexander_polynomial(braid_to_diagram(b))


def substitute_square(p: LaurentPoly) -> LaurentPoly:
    """Double every exponent (the rim-torus square substitution)."""
    return p.substitute_square()


def coefficient_multiset(p: LaurentPoly) -> tuple[int, ...]:
    """All nonzero coefficients with multiplicity, as a sorted tuple."""
    return tuple(sorted(c for _, c in p.terms()))


def knot_family(count: int) -> list[tuple[BraidWord, LaurentPoly]]:
    """(2, 2r+1) torus knots r = 1..count with their Alexander polynomials.

    The coefficient multisets are pairwise distinct by construction (the
    r-th polynomial has exactly 2r+1 nonzero coefficients); the function
    still verifies that and refuses to return a colliding family.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    family = []
    seen: dict[tuple[int, ...], int] = {}
    for r in range(1, count + 1):
        braid = torus_knot(r)
        delta = alexander_of_braid(braid)
        multiset = coefficient_multiset(delta)
        if multiset in seen:
            raise RuntimeError(f"coefficient multiset collision between K_{seen[multiset]} "
                               f"and K_{r}")
        seen[multiset] = r
        family.append((braid, delta))
    return family
