"""Twisted surgery at a double point of a surface configuration.

The operation removes a neighborhood of the torus linking an intersection
point and glues in a knot exterior times a circle.  Two independent paths
to the fundamental group of the new complement are provided:

* `surgered_presentation` builds the full amalgam over the linking torus,
  keeping the base presentation intact;
* `case_presentation` emits the collapsed presentation available when the
  base group is abelian of one of three recognized shapes.

The two paths are cross-validated against each other by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .configurations import Configuration, tag_standard, tag_twist_spun
from .knots import BraidWord, KnotGroupData, knot_group_from_braid
from .presentations import AbelianGroup, Presentation
from .snf import determinant as snf_determinant
from .verify import Bounds, DEFAULT_BOUNDS, Verdict, verify_abelian_isomorphism
from .words import Word, commutator, free_reduce


@dataclass(frozen=True)
class GluingMatrix:
    """3x3 unimodular matrix in the shape admitting a local gluing.

    Rows follow the pattern ((p, k, 0), (-gamma, beta, 0),
    (-alpha*gamma + b*p, alpha*beta + b*k, 1)) with p*beta + k*gamma = 1.
    """

    p: int
    k: int
    gamma: int
    beta: int
    alpha: int = 0
    b: int = 0

    @property
    def entries(self) -> tuple[tuple[int, int, int], ...]:
        return ((self.p, self.k, 0),
                (-self.gamma, self.beta, 0),
                (-self.alpha * self.gamma + self.b * self.p,
                 self.alpha * self.beta + self.b * self.k, 1))

    def determinant(self) -> int:
        return snf_determinant([list(row) for row in self.entries])


def validate_gluing_matrix(a: GluingMatrix) -> tuple[bool, list[str]]:
    """Check the pattern, the Bezout condition and unimodularity."""
    diagnostics: list[str] = []
    bezout = a.p * a.beta + a.k * a.gamma
    if bezout != 1:
        diagnostics.append(f"p*beta + k*gamma = {bezout}, must be 1")
    det = a.determinant()
    if det != 1:
        diagnostics.append(f"determinant = {det}, must be 1")
    if not diagnostics:
        diagnostics.append("pattern, Bezout condition and unimodularity all hold")
        return True, diagnostics
    return False, diagnostics


def twist_gluing_matrix(k: int) -> GluingMatrix:
    """The k-twist matrix: upper unitriangular with (1,2) entry k."""
    return GluingMatrix(p=1, k=k, gamma=0, beta=1, alpha=0, b=0)


def is_twist_matrix(a: GluingMatrix) -> bool:
    return a == twist_gluing_matrix(a.k)


@dataclass(frozen=True)
class CaseParams:
    """Parameters of one of the three recognized abelian base groups.

    F1: infinite cyclic base with relation mu1 * mu2^d = 1 (requires k = 0).
    F2: cyclic base of order q with relation mu1^p * mu2 = 1 ((p+k, q) = 1).
    F3: base Z_m + Z_n with mu1, mu2 generating the summands ((m, k*n) = 1).
    """

    tag: str
    k: int
    d: int = 0
    p: int = 0
    q: int = 0
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.tag not in ("F1", "F2", "F3"):
            raise ValueError(f"unknown case tag {self.tag!r}")
        if self.tag == "F2" and self.q < 1:
            raise ValueError("F2 needs q >= 1")
        if self.tag == "F3" and (self.m < 1 or self.n < 1):
            raise ValueError("F3 needs m, n >= 1")

    @staticmethod
    def f1(d: int, k: int) -> "CaseParams":
        return CaseParams("F1", k, d=d)

    @staticmethod
    def f2(p: int, q: int, k: int) -> "CaseParams":
        return CaseParams("F2", k, p=p, q=q)

    @staticmethod
    def f3(m: int, n: int, k: int) -> "CaseParams":
        return CaseParams("F3", k, m=m, n=n)

    def target(self) -> AbelianGroup:
        if self.tag == "F1":
            return AbelianGroup.free(1)
        if self.tag == "F2":
            return AbelianGroup.cyclic(self.q)
        return AbelianGroup.of_orders(self.m, self.n)

    def describe(self) -> str:
        if self.tag == "F1":
            return f"F1(d={self.d}, k={self.k})"
        if self.tag == "F2":
            return f"F2(p={self.p}, q={self.q}, k={self.k})"
        return f"F3(m={self.m}, n={self.n}, k={self.k})"

    def base_presentation(self) -> Presentation:
        """The matching two-meridian presentation of the base group."""
        mu1, mu2 = Word.gen(0), Word.gen(1)
        if self.tag == "F1":
            relators = (free_reduce(mu1 * mu2 ** self.d),)
        elif self.tag == "F2":
            relators = (mu1 ** self.q, free_reduce(mu1 ** self.p * mu2))
        else:
            relators = (mu1 ** self.m, mu2 ** self.n, commutator(mu1, mu2))
        return Presentation(("mu1", "mu2"), relators, (("mu1", 0), ("mu2", 1)))


def check_case_hypothesis(c: CaseParams) -> bool:
    """The arithmetic condition under which the group claim is made."""
    if c.tag == "F1":
        return c.k == 0
    if c.tag == "F2":
        return gcd(c.p + c.k, c.q) == 1
    return gcd(c.m, c.k * c.n) == 1


class HypothesisError(ValueError):
    """Raised when a verification is requested outside its hypothesis."""


def _unique_name(base: str, taken: set[str]) -> str:
    name = base
    suffix = 0
    while name in taken:
        suffix += 1
        name = f"{base}_{suffix}"
    taken.add(name)
    return name


def surgered_presentation(base: Presentation, knot: KnotGroupData, k: int) -> Presentation:
    """Full amalgam over the linking torus: base and knot-exterior-times-circle.

    The base must label both meridians mu1 and mu2.  The circle factor adds
    one central generator s; the torus identifications are mu1 = muK and
    mu2 = muK^k * s.
    """
    mu1 = base.label_word("mu1")
    mu2 = base.label_word("mu2")
    if mu1 is None or mu2 is None:
        raise ValueError("base presentation must label mu1 and mu2")

    kp = knot.presentation
    taken = set(base.generators)
    knot_names = [_unique_name(name, taken) for name in kp.generators]
    s_name = _unique_name("s", taken)
    generators = base.generators + tuple(knot_names) + (s_name,)
    offset = base.ngens
    s_index = len(generators) - 1

    relators = list(base.relators)
    shift = {i: offset + i for i in range(kp.ngens)}
    for r in kp.relators:
        relators.append(r.reindex(shift))
    s = Word.gen(s_index)
    for i in range(kp.ngens):
        relators.append(commutator(Word.gen(offset + i), s))
    mu_k = Word.gen(offset + knot.meridian)
    relators.append(free_reduce(mu1 * mu_k.inverse()))
    relators.append(free_reduce(mu2 * (mu_k ** k * s).inverse()))

    labels: dict[str, int | Word] = {
        "mu1": mu_k,
        "mu2": free_reduce(mu_k ** k * s),
        "muK": offset + knot.meridian,
        "s1": s_index,
        "lambdaK": knot.longitude.reindex(shift),
    }
    return Presentation(generators, tuple(free_reduce(r) for r in relators),
                        tuple(sorted(labels.items())))


def case_presentation(c: CaseParams, knot: KnotGroupData) -> Presentation:
    """The collapsed presentation over the knot group with one circle generator.

    Relators: the knot relators, centrality of the circle generator, and the
    case relation(s): F1 adds muK^(1+k*d) * s^d; F2 adds muK^q and
    muK^(p+k) * s; F3 adds muK^m and (muK^k * s)^n.
    """
    kp = knot.presentation
    taken = set(kp.generators)
    s_name = _unique_name("s", taken)
    generators = kp.generators + (s_name,)
    s_index = len(generators) - 1
    s = Word.gen(s_index)
    mu = Word.gen(knot.meridian)

    relators = list(kp.relators)
    for i in range(kp.ngens):
        relators.append(commutator(Word.gen(i), s))
    if c.tag == "F1":
        relators.append(free_reduce(mu ** (1 + c.k * c.d) * s ** c.d))
    elif c.tag == "F2":
        relators.append(mu ** c.q)
        relators.append(free_reduce(mu ** (c.p + c.k) * s))
    else:
        relators.append(mu ** c.m)
        relators.append(free_reduce((mu ** c.k * s) ** c.n))

    labels: dict[str, int | Word] = {
        "mu1": mu,
        "mu2": free_reduce(mu ** c.k * s),
        "muK": knot.meridian,
        "s1": s_index,
        "lambdaK": knot.longitude,
    }
    return Presentation(generators, tuple(free_reduce(r) for r in relators),
                        tuple(sorted(labels.items())))


def verify_group_preserved(c: CaseParams, knot: KnotGroupData,
                           bounds: Bounds = DEFAULT_BOUNDS,
                           require_hypothesis: bool = True) -> Verdict:
    """Verify that the surgered group matches the case's abelian target.

    Refuses to run when the arithmetic hypothesis fails (no claim is made
    there) unless `require_hypothesis` is disabled for negative controls.
    """
    if not check_case_hypothesis(c):
        if require_hypothesis:
            raise HypothesisError(f"hypothesis of {c.describe()} fails; no claim is made")
        prefix = (f"{c.describe()}: hypothesis FAILS; running anyway (negative control)",)
    else:
        prefix = (f"{c.describe()}: hypothesis holds",)
    presentation = case_presentation(c, knot.simplified())
    verdict = verify_abelian_isomorphism(presentation, c.target(), bounds)
    return Verdict(verdict.status, prefix + verdict.evidence)


@dataclass(frozen=True)
class SurgerySpec:
    configuration: Configuration
    point: int
    knot: BraidWord
    twist: int | GluingMatrix

    def __post_init__(self):
        if not (0 <= self.point < len(self.configuration.double_points)):
            raise ValueError(f"double point index {self.point} out of range")
        if not self.knot.is_knot_closure():
            raise ValueError("surgery knot must be a knot closure")


def _is_line_in_projective_plane(config: Configuration, component: int) -> bool:
    surface = config.components[component]
    return (surface.genus == 0
            and config.ambient.form == ((1,),)
            and tuple(surface.homology_class) == (1,))


def apply_surgery(spec: SurgerySpec) -> Configuration:
    """Surger the configuration at one double point.

    Homology classes, genus and double point data never change.  The first
    component at the point acquires a twist-spun connected-sum tag unless a
    recognized untwisting applies: twist +-1 always untwists, and twist 0
    untwists a degree-one sphere in the projective plane.  The second
    component is untouched.  The complement presentation, when present, is
    replaced by the full amalgam.
    """
    config = spec.configuration
    comp_a, comp_b, _ = config.double_points[spec.point]

    if isinstance(spec.twist, GluingMatrix):
        matrix = spec.twist
        ok, diagnostics = validate_gluing_matrix(matrix)
        if not ok:
            raise ValueError("invalid gluing matrix: " + "; ".join(diagnostics))
        if not is_twist_matrix(matrix):
            # recorded, but no embedding or group claim is available
            components = list(config.components)
            components[comp_a] = components[comp_a].with_tag(
                tag_twist_spun(spec.knot, matrix.k, general=True))
            return config.replace(components=tuple(components), pi1=None,
                                  symplectic_positive=False)
        k = matrix.k
    else:
        k = spec.twist

    if k in (1, -1):
        tag = tag_standard()
    elif k == 0 and _is_line_in_projective_plane(config, comp_a):
        tag = tag_standard()
    else:
        tag = tag_twist_spun(spec.knot, k)

    components = list(config.components)
    components[comp_a] = components[comp_a].with_tag(tag)

    pi1 = None
    if config.pi1 is not None:
        base = config.pi1
        role_a, role_b = f"mu{comp_a + 1}", f"mu{comp_b + 1}"
        target_a, target_b = base.label(role_a), base.label(role_b)
        if target_a is None or target_b is None:
            raise ValueError(f"complement presentation lacks {role_a}/{role_b} labels")
        relabeled = base.with_labels({"mu1": target_a, "mu2": target_b})
        pi1 = surgered_presentation(relabeled, knot_group_from_braid(spec.knot), k)

    return config.replace(components=tuple(components), pi1=pi1,
                          symplectic_positive=False)
