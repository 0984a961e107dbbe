"""Knot input as braid words; diagrams and Wirtinger presentations.

Braid words use signed 1-based generator indices, so `B3: 1 -2 1 -2` is the
word s1 s2^-1 s1 s2^-1 on three strands.  Only braids whose closure is a
knot (single-cycle permutation) are accepted as knot input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import AbelianGroup, Presentation, abelianization, exponent_matrix
from .snf import cokernel_invariants
from .words import Word, free_reduce


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be >= 1")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"braid letter {x} out of range for {self.strands} strands")

    def permutation(self) -> tuple[int, ...]:
        perm = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def is_knot_closure(self) -> bool:
        perm = self.permutation()
        seen = 1
        at = perm[0]
        while at != 0:
            at = perm[at]
            seen += 1
        return seen == self.strands

    def format(self) -> str:
        return f"B{self.strands}: {' '.join(str(x) for x in self.letters)}".rstrip()

    @staticmethod
    def parse(text: str) -> "BraidWord":
        text = text.strip()
        if not text.startswith("B"):
            raise ValueError(f"braid word must start with 'B<strands>:', got {text!r}")
        head, _, rest = text.partition(":")
        try:
            strands = int(head[1:])
        except ValueError:
            raise ValueError(f"bad strand count in {text!r}") from None
        letters = tuple(int(tok) for tok in rest.split())
        return BraidWord(strands, letters)


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class KnotDiagram:
    arcs: int
    crossings: tuple[Crossing, ...]


def braid_to_diagram(b: BraidWord) -> KnotDiagram:
    """Diagram of the braid closure: one crossing per letter.

    Raises ValueError when the closure has more than one component.
    """
    if not b.is_knot_closure():
        raise ValueError("braid closure is not a knot (multiple components)")

    n = b.strands
    next_arc = n
    current = list(range(n))
    raw: list[tuple[int, int, int, int]] = []
    for x in b.letters:
        i = abs(x) - 1
        if x > 0:
            over, under_in = current[i], current[i + 1]
        else:
            over, under_in = current[i + 1], current[i]
        new_arc = next_arc
        next_arc += 1
        raw.append((over, under_in, new_arc, 1 if x > 0 else -1))
        if x > 0:
            current[i + 1], current[i] = over, new_arc
        else:
            current[i], current[i + 1] = over, new_arc

    # close the braid: bottom endpoints rejoin the top arcs
    parent = list(range(next_arc))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for pos in range(n):
        ra, rb = find(current[pos]), find(pos)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    reps = sorted({find(a) for a in range(next_arc)})
    rename = {rep: i for i, rep in enumerate(reps)}
    crossings = tuple(Crossing(rename[find(o)], rename[find(u)], rename[find(v)], s)
                      for o, u, v, s in raw)
    return KnotDiagram(len(reps), crossings)


@dataclass(frozen=True)
class KnotGroupData:
    """Knot group presentation with distinguished meridian and longitude.

    The presentation labels carry role "muK" (a generator) and "lambdaK"
    (a word of exponent sum zero).
    """

    presentation: Presentation

    def __post_init__(self):
        if self.presentation.label("muK") is None:
            raise ValueError("knot group data needs a muK label")
        if self.presentation.label("lambdaK") is None:
            raise ValueError("knot group data needs a lambdaK label")
        lam = self.presentation.label_word("lambdaK")
        total = sum(lam.exponent_sum(g) for g in range(self.presentation.ngens))
        if total != 0:
            raise ValueError("longitude must have exponent sum zero")
        # the meridian must generate the (infinite cyclic) abelianization:
        # killing it abelianly must kill everything
        p = self.presentation
        if abelianization(p) != AbelianGroup.free(1):
            raise ValueError("a knot group abelianizes to the infinite cyclic group")
        mu_row = [1 if g == self.meridian else 0 for g in range(p.ngens)]
        if cokernel_invariants(exponent_matrix(p) + [mu_row], p.ngens) != (0, ()):
            raise ValueError("meridian does not generate the abelianization")

    @property
    def meridian(self) -> int:
        target = self.presentation.label("muK")
        if not isinstance(target, int):
            raise ValueError("meridian label must be a generator")
        return target

    @property
    def longitude(self) -> Word:
        return self.presentation.label_word("lambdaK")

    def simplified(self) -> "KnotGroupData":
        """Tietze-reduced copy; the meridian generator is never eliminated."""
        from .presentations import simplify_presentation

        reduced = simplify_presentation(self.presentation, keep={self.meridian})
        target = reduced.label("muK")
        if not isinstance(target, int):
            raise AssertionError("meridian survived elimination but lost generator status")
        return KnotGroupData(reduced)


def wirtinger_presentation(d: KnotDiagram) -> KnotGroupData:
    """One generator per arc, one conjugation relator per crossing.

    The meridian is the generator of arc 0; the longitude is the product of
    over-arc letters read along the knot, corrected by a meridian power to
    exponent sum zero.
    """
    names = tuple(f"x{i}" for i in range(d.arcs))
    relators = []
    for c in d.crossings:
        over = Word.gen(c.over, c.sign)
        rel = over * Word.gen(c.under_in) * over.inverse() * Word.gen(c.under_out, -1)
        relators.append(free_reduce(rel))

    longitude = Word.identity()
    if d.crossings:
        by_under_in = {c.under_in: c for c in d.crossings}
        factors = []
        arc = 0
        while True:
            c = by_under_in[arc]
            factors.append(Word.gen(c.over, c.sign))
            arc = c.under_out
            if arc == 0:
                break
        # composing x_out = w x_in w^-1 around the knot conjugates the
        # meridian by the reversed product, which is the framed longitude
        for f in reversed(factors):
            longitude = longitude * f
        writhe = sum(c.sign for c in d.crossings)
        longitude = free_reduce(longitude * Word.gen(0, -writhe))

    pres = Presentation(names, tuple(relators),
                        (("lambdaK", longitude), ("muK", 0)))
    return KnotGroupData(pres)


def knot_group_from_braid(b: BraidWord) -> KnotGroupData:
    return wirtinger_presentation(braid_to_diagram(b))


UNKNOT = BraidWord(1, ())
TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))


def torus_knot(r: int) -> BraidWord:
    """The (2, 2r+1) torus knot as the closure of s1^(2r+1)."""
    if r < 1:
        raise ValueError("torus knot parameter must be >= 1")
    return BraidWord(2, (1,) * (2 * r + 1))
