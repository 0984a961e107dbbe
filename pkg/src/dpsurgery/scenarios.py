"""Builtin example pipelines and JSON scenario files.

Builtins reproduce the library's reference configurations end to end:

* ``nodal d1= d2= [k= knot=]``      two plane curves; surgery needs d1=1
* ``rational p= q= [k= knot=]``     a (p,q) curve and a ruling sphere
* ``spheres m= n=``                 two sphere families (no invariant here)
* ``tori m= n= [k= knot=]``         the symplectic two-torus configuration
* ``theorem-1-1 case=i|ii|iii ...`` the full knotted-family pipeline
* ``theorem-7-2 m= n= k= count=``   the branched-cover action certificate

A scenario file is a JSON object `{"bounds": {...}, "checks": [entry, ...]}`
where each entry either names a builtin (`{"builtin": ..., "params": {...}}`)
or describes a configuration inline; see the README for the schema.
"""

from __future__ import annotations

import json
from math import gcd

from .actions import CoverPlanError, build_cover_plan, exotic_action_certificate
from .configurations import (AmbientManifold, Configuration, SurfaceComponent,
                             complement_h1, spheres_presentation, tori_presentation)
from .knots import BraidWord, TREFOIL, knot_group_from_braid
from .presentations import AbelianGroup, Presentation, abelianization
from .reports import CITED, FAIL, PASS, CheckLine, Report, line_from_verdict
from .surgery import CaseParams, SurgerySpec, apply_surgery, case_presentation, \
    check_case_hypothesis, surgered_presentation, verify_group_preserved
from .sw import family_report
from .verify import Bounds, DEFAULT_BOUNDS, verify_abelian_isomorphism
from .words import Word, commutator


class ParamError(ValueError):
    """Bad builtin parameters; reported before any computation."""


class ScenarioError(ValueError):
    """Bad scenario file; message carries position or field diagnostics."""


# -- builtin configurations --------------------------------------------------

def nodal_configuration(d1: int, d2: int) -> Configuration:
    """Two smooth plane curves of degrees d1, d2 in general position."""
    ambient = AmbientManifold("CP2", True, ((1,),), ("h",))
    comps = (SurfaceComponent("C1", (d1 - 1) * (d1 - 2) // 2, (d1,)),
             SurfaceComponent("C2", (d2 - 1) * (d2 - 2) // 2, (d2,)))
    points = tuple((0, 1, 1) for _ in range(d1 * d2))
    mu1, mu2 = Word.gen(0), Word.gen(1)
    # abelian by the nodal-curve theorem; the one relation is d1*mu1 + d2*mu2 = 0
    pi1 = Presentation(("mu1", "mu2"),
                       (mu1 ** d1 * mu2 ** d2, commutator(mu1, mu2)),
                       (("mu1", 0), ("mu2", 1)))
    return Configuration(ambient, comps, points, pi1, symplectic_positive=True)


def rational_configuration(p: int, q: int) -> Configuration:
    """A (p,q) curve and a (1,0) ruling sphere in the quadric surface."""
    ambient = AmbientManifold("P1xP1", True, ((0, 1), (1, 0)), ("A", "B"))
    comps = (SurfaceComponent("C1", (p - 1) * (q - 1), (p, q)),
             SurfaceComponent("C2", 0, (1, 0)))
    points = tuple((0, 1, 1) for _ in range(q))
    mu1, mu2 = Word.gen(0), Word.gen(1)
    # abelian by the generalized nodal-curve theorem; relations q*mu1 = 0,
    # p*mu1 + mu2 = 0
    pi1 = Presentation(("mu1", "mu2"),
                       (mu1 ** q, mu1 ** p * mu2, commutator(mu1, mu2)),
                       (("mu1", 0), ("mu2", 1)))
    return Configuration(ambient, comps, points, pi1, symplectic_positive=True)


def spheres_configuration(m: int, n: int) -> Configuration:
    """Connected surfaces of classes (m,0) and (0,n) built from sphere families.

    Not symplectic: the classes cannot be represented by connected symplectic
    surfaces, so no canonical nonvanishing invariant is available.
    """
    ambient = AmbientManifold("S2xS2", True, ((0, 1), (1, 0)), ("A", "B"))
    comps = (SurfaceComponent("S_m", 0, (m, 0)),
             SurfaceComponent("S_n", 0, (0, n)))
    points = tuple((0, 1, 1) for _ in range(m * n))
    return Configuration(ambient, comps, points, spheres_presentation(m, n),
                         symplectic_positive=False)


def tori_configuration(m: int, n: int) -> Configuration:
    """The symplectic configuration of two braided tori meeting in m*n points.

    The ambient record models the relevant rank-two sublattice of the fiber
    sum; the complement presentation is the full displayed one.
    """
    ambient = AmbientManifold("X(fiber-sum)", True, ((0, 1), (1, 0)), ("F1", "F2"))
    comps = (SurfaceComponent("T_m", 1, (m, 0)),
             SurfaceComponent("T_n", 1, (0, n)))
    points = tuple((0, 1, 1) for _ in range(m * n))
    return Configuration(ambient, comps, points, tori_presentation(m, n),
                         symplectic_positive=True)


def trivial_complement_configuration() -> Configuration:
    """Two transverse spheres whose complement is simply connected."""
    ambient = AmbientManifold("S2xS2", True, ((0, 1), (1, 0)), ("A", "B"))
    comps = (SurfaceComponent("S1", 0, (1, 0)), SurfaceComponent("S2", 0, (0, 1)))
    pi1 = Presentation(("mu1", "mu2"), (Word.gen(0), Word.gen(1)),
                       (("mu1", 0), ("mu2", 1)))
    return Configuration(ambient, comps, ((0, 1, 1),), pi1, symplectic_positive=False)


BUILTIN_CONFIGURATIONS = {
    "nodal": nodal_configuration,
    "rational": rational_configuration,
    "spheres": spheres_configuration,
    "tori": tori_configuration,
}


# -- parameter handling -------------------------------------------------------

def _take_params(params: dict, spec: dict[str, tuple]) -> dict:
    """Validate params against {name: (kind, default, predicate, description)}."""
    problems = []
    for key in params:
        if key not in spec:
            problems.append(f"unknown parameter {key!r}")
    out = {}
    for name, (kind, default, predicate, description) in spec.items():
        if name in params:
            value = params[name]
            if kind is int:
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    problems.append(f"{name} must be an integer")
                    continue
            elif kind is str:
                value = str(value)
        else:
            if default is None:
                problems.append(f"missing required parameter {name!r}")
                continue
            value = default
        if predicate is not None and not predicate(value):
            problems.append(f"{name}={value!r} out of range: {description}")
            continue
        out[name] = value
    if problems:
        raise ParamError("; ".join(problems))
    return out


def _parse_knot(text) -> BraidWord:
    if isinstance(text, BraidWord):
        return text
    braid = BraidWord.parse(str(text))
    if not braid.is_knot_closure():
        raise ParamError(f"braid {braid.format()} does not close to a knot")
    return braid


def _title(name: str, ordered: list[tuple[str, object]]) -> str:
    if not ordered:
        return name
    return name + " " + " ".join(f"{k}={v}" for k, v in ordered)


# -- builtin pipelines --------------------------------------------------------

def _surgery_lines(config: Configuration, case: CaseParams, knot: BraidWord,
                   bounds: Bounds) -> list[CheckLine]:
    lines = []
    hypothesis = check_case_hypothesis(case)
    lines.append(CheckLine("hypothesis", PASS if hypothesis else FAIL,
                           (f"{case.describe()}: arithmetic condition "
                            f"{'holds' if hypothesis else 'fails'}",)))
    if not hypothesis:
        lines.append(CheckLine("group-preserved", FAIL,
                               ("refused: no claim is made when the hypothesis fails",)))
        return lines
    knot_data = knot_group_from_braid(knot)
    verdict = verify_group_preserved(case, knot_data, bounds)
    lines.append(line_from_verdict("group-preserved", verdict))

    # cross-validation of the two construction paths
    amalgam = surgered_presentation(case.base_presentation(), knot_data, case.k)
    collapsed = case_presentation(case, knot_data)
    ab1, ab2 = abelianization(amalgam), abelianization(collapsed)
    facts = [f"amalgam abelianization {ab1}, collapsed abelianization {ab2}"]
    agree = ab1 == ab2
    if case.target().order() is not None:
        from .coset import coset_enumerate
        r1 = coset_enumerate(amalgam, (), bounds.max_cosets)
        r2 = coset_enumerate(collapsed, (), bounds.max_cosets)
        if r1.completed and r2.completed:
            facts.append(f"enumerated orders {r1.index} and {r2.index}")
            agree = agree and r1.index == r2.index
        else:
            facts.append("order comparison skipped: an enumeration hit its cap")
    lines.append(CheckLine("cross-validation", PASS if agree else FAIL, tuple(facts)))

    surgered = apply_surgery(SurgerySpec(config, 0, knot, case.k))
    tags = [c.embedding_tag.describe() for c in surgered.components]
    lines.append(CheckLine("embedding-tags", PASS,
                           tuple(f"component {i + 1}: {tag}" for i, tag in enumerate(tags))))
    return lines


def _expected_homology(name: str, p: dict) -> AbelianGroup:
    if name == "nodal":
        return AbelianGroup.of_orders(0, gcd(p["d1"], p["d2"]))
    if name == "rational":
        return AbelianGroup.cyclic(p["q"])
    return AbelianGroup.of_orders(p["m"], p["n"])


def _run_example(name: str, params: dict, bounds: Bounds) -> Report:
    specs = {
        "nodal": {"d1": (int, None, lambda v: v >= 1, "degree >= 1"),
                  "d2": (int, None, lambda v: v >= 1, "degree >= 1"),
                  "k": (int, 0, None, ""),
                  "knot": (str, "", None, ""),
                  "surgery": (int, 0, lambda v: v in (0, 1), "0 or 1")},
        "rational": {"p": (int, None, lambda v: v >= 1, "p >= 1"),
                     "q": (int, None, lambda v: v >= 1, "q >= 1"),
                     "k": (int, 0, None, ""),
                     "knot": (str, "", None, ""),
                     "surgery": (int, 0, lambda v: v in (0, 1), "0 or 1")},
        "spheres": {"m": (int, None, lambda v: v >= 1, "m >= 1"),
                    "n": (int, None, lambda v: v >= 1, "n >= 1")},
        "tori": {"m": (int, None, lambda v: v >= 1, "m >= 1"),
                 "n": (int, None, lambda v: v >= 1, "n >= 1"),
                 "k": (int, 0, None, ""),
                 "knot": (str, "", None, ""),
                 "surgery": (int, 0, lambda v: v in (0, 1), "0 or 1")},
    }[name]
    if "knot" in params or "k" in params:
        params = dict(params)
        params.setdefault("surgery", 1)
    p = _take_params(params, specs)
    do_surgery = bool(p.pop("surgery", 0))
    knot_text = str(p.pop("knot", ""))
    k = int(p.pop("k", 0))

    config = BUILTIN_CONFIGURATIONS[name](**{key: p[key] for key in sorted(p)})
    ordered = sorted(p.items())
    if do_surgery:
        ordered += [("k", k)] + ([("knot", knot_text)] if knot_text else [])
    title = _title(name, ordered)

    lines = []
    homology = complement_h1(config)
    expected = _expected_homology(name, p)
    lines.append(CheckLine("homology", PASS if homology == expected else FAIL,
                           (f"complement H1 = {homology}, expected {expected}",)))
    verdict = verify_abelian_isomorphism(config.pi1, expected, bounds)
    lines.append(line_from_verdict("group", verdict))
    ab = abelianization(config.pi1)
    lines.append(CheckLine("h1-matches-abelianization", PASS if ab == homology else FAIL,
                           (f"presentation abelianization {ab}, homology {homology}",)))

    if do_surgery:
        knot = _parse_knot(knot_text) if knot_text else TREFOIL
        if name == "nodal":
            if p["d1"] != 1:
                raise ParamError("surgery on the nodal configuration needs d1=1")
            case = CaseParams.f1(p["d2"], k)
        elif name == "rational":
            case = CaseParams.f2(p["p"], p["q"], k)
        elif name == "tori":
            case = CaseParams.f3(p["m"], p["n"], k)
        else:
            raise ParamError("the spheres configuration carries no invariant: "
                             "no surgery pipeline is defined for it")
        lines.extend(_surgery_lines(config, case, knot, bounds))
    return Report(title, tuple(lines))


_THEOREM11_CASES = {
    "i": "nodal curves, 0-twist",
    "ii": "rational configuration, 1-twist",
    "iii": "tori configuration, 1-twist",
}


def _run_theorem_1_1(params: dict, bounds: Bounds) -> Report:
    params = dict(params)
    k_given = params.pop("k", None)
    p = _take_params(params, {
        "case": (str, None, lambda v: v in _THEOREM11_CASES, "one of i, ii, iii"),
        "count": (int, 10, lambda v: v >= 1, "count >= 1"),
        "d2": (int, 2, lambda v: v >= 2, "d2 >= 2 (need at least two points)"),
        "p": (int, 1, lambda v: v >= 1, "p >= 1"),
        "q": (int, 3, lambda v: v >= 2, "q >= 2"),
        "m": (int, 3, lambda v: v >= 1, "m >= 1"),
        "n": (int, 2, lambda v: v >= 1, "n >= 1"),
    })
    case_name = p["case"]
    count = p["count"]
    if k_given is not None:
        try:
            k_given = int(k_given)
        except (TypeError, ValueError):
            raise ParamError("k must be an integer") from None
    if case_name == "i":
        k = 0 if k_given is None else k_given
        if k != 0:
            raise ParamError("case i requires k=0")
        config = nodal_configuration(1, p["d2"])
        case = CaseParams.f1(p["d2"], 0)
        ordered = [("case", "i"), ("d2", p["d2"]), ("k", 0), ("count", count)]
    elif case_name == "ii":
        k = 1 if k_given is None else k_given
        case = CaseParams.f2(p["p"], p["q"], k)
        if not check_case_hypothesis(case):
            raise ParamError(f"(p+k, q) = ({p['p']}+{k}, {p['q']}) is not coprime")
        config = rational_configuration(p["p"], p["q"])
        ordered = [("case", "ii"), ("p", p["p"]), ("q", p["q"]), ("k", k), ("count", count)]
    else:
        k = 1 if k_given is None else k_given
        case = CaseParams.f3(p["m"], p["n"], k)
        if not check_case_hypothesis(case):
            raise ParamError(f"(m, k*n) = ({p['m']}, {k}*{p['n']}) is not coprime")
        config = tori_configuration(p["m"], p["n"])
        ordered = [("case", "iii"), ("m", p["m"]), ("n", p["n"]), ("k", k), ("count", count)]

    report = family_report(config, count, case, bounds)
    lines = []
    audit_ok = report.applicability.ok
    lines.append(CheckLine("applicability", PASS if audit_ok else FAIL,
                           tuple(report.applicability.lines())))
    original = config.components
    for member in report.members:
        prefix = f"r={member.index} {member.knot.format()}"
        lines.append(line_from_verdict(f"group-preserved {prefix}", member.group_verdict))
        tag1 = member.component_tags[0]
        lines.append(CheckLine(f"component-1-standard {prefix}",
                               PASS if tag1 == "Standard" else FAIL,
                               (f"component 1 embedding tag: {tag1}",)))
        tag2 = member.component_tags[1]
        lines.append(CheckLine(f"component-2-unchanged {prefix}",
                               PASS if tag2 == original[1].embedding_tag.describe() else FAIL,
                               (f"component 2 embedding tag: {tag2}",)))
    for pair in report.pairs:
        ok = pair.verdict == "SmoothlyInequivalent"
        lines.append(CheckLine(f"smoothly-distinct {pair.pair[0]} vs {pair.pair[1]}",
                               PASS if ok else FAIL,
                               (f"verdict {pair.verdict}", pair.audit[-1])))
    lines.append(CheckLine("topological-equivalence", CITED,
                           ("all family members are topologically equivalent to the "
                            "unsurgered configuration (surgery-theoretic result, cited)",)))
    return Report(_title("theorem-1-1", ordered), tuple(lines))


def _run_theorem_7_2(params: dict, bounds: Bounds) -> Report:
    p = _take_params(params, {
        "m": (int, None, lambda v: v >= 1, "m >= 1"),
        "n": (int, None, lambda v: v >= 1, "n >= 1"),
        "k": (int, 1, None, ""),
        "count": (int, 5, lambda v: v >= 2, "count >= 2"),
    })
    ordered = [("m", p["m"]), ("n", p["n"]), ("k", p["k"]), ("count", p["count"])]
    title = _title("theorem-7-2", ordered)
    config = tori_configuration(p["m"], p["n"])
    try:
        plan = build_cover_plan(config, p["m"], p["n"], bounds)
    except CoverPlanError as err:
        return Report(title, (CheckLine("cover-plan", FAIL, (str(err),)),))
    lines = [CheckLine("cover-plan", PASS, tuple(plan.describe()))]
    certificate = exotic_action_certificate(plan, p["k"], p["count"], bounds)
    for check in certificate.checks:
        verdict = CITED if check.kind == "cited" else (PASS if check.passed else FAIL)
        lines.append(CheckLine(check.name, verdict, (check.detail,)))
    lines.append(CheckLine("conclusion", PASS if certificate.passed else FAIL,
                           (certificate.conclusion,)))
    return Report(title, tuple(lines))


BUILTIN_NAMES = ("nodal", "rational", "spheres", "tori", "theorem-1-1", "theorem-7-2")


def run_builtin(name: str, params: dict, bounds: Bounds = DEFAULT_BOUNDS) -> Report:
    """Execute one builtin pipeline; raises ParamError before any computation."""
    if name not in BUILTIN_NAMES:
        raise ParamError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    if name == "theorem-1-1":
        return _run_theorem_1_1(params, bounds)
    if name == "theorem-7-2":
        return _run_theorem_7_2(params, bounds)
    return _run_example(name, params, bounds)


# -- scenario files -----------------------------------------------------------

def _configuration_from_json(data: dict, where: str) -> Configuration:
    try:
        ambient_data = data["ambient"]
        ambient = AmbientManifold(
            str(ambient_data.get("name", "ambient")),
            bool(ambient_data.get("simply_connected", True)),
            tuple(tuple(int(x) for x in row) for row in ambient_data["form"]),
            tuple(str(x) for x in ambient_data.get(
                "basis", [f"A{i + 1}" for i in range(len(ambient_data["form"]))])))
        comps = tuple(
            SurfaceComponent(str(c.get("label", f"C{i + 1}")), int(c.get("genus", 0)),
                             tuple(int(x) for x in c["class"]))
            for i, c in enumerate(data["components"]))
        points = tuple((int(a), int(b), int(s)) for a, b, s in data.get("double_points", []))
        pi1 = None
        if "pi1" in data:
            pi1 = Presentation.parse(str(data["pi1"]))
        return Configuration(ambient, comps, points, pi1,
                             bool(data.get("symplectic_positive", False)))
    except KeyError as err:
        raise ScenarioError(f"{where}: missing field {err}") from None
    except (TypeError, ValueError) as err:
        raise ScenarioError(f"{where}: {err}") from None


def _case_from_json(data: dict, where: str) -> CaseParams:
    try:
        tag = str(data["tag"]).upper()
        if tag == "F1":
            return CaseParams.f1(int(data["d"]), int(data["k"]))
        if tag == "F2":
            return CaseParams.f2(int(data["p"]), int(data["q"]), int(data["k"]))
        if tag == "F3":
            return CaseParams.f3(int(data["m"]), int(data["n"]), int(data["k"]))
    except KeyError as err:
        raise ScenarioError(f"{where}: case needs field {err}") from None
    raise ScenarioError(f"{where}: unknown case tag {data.get('tag')!r}")


def _run_configuration_entry(entry: dict, index: int, bounds: Bounds) -> list[CheckLine]:
    where = f"checks[{index}]"
    config = _configuration_from_json(entry["configuration"], where)
    lines: list[CheckLine] = []
    wanted = entry.get("verify", {})
    if not isinstance(wanted, dict):
        raise ScenarioError(f"{where}: 'verify' must be an object")
    for key in wanted:
        if key not in ("homology", "group"):
            raise ScenarioError(f"{where}: unknown verification {key!r}")
    if "homology" in wanted:
        computed = complement_h1(config)
        expected = AbelianGroup.parse(str(wanted["homology"]))
        lines.append(CheckLine(f"{where} homology",
                               PASS if computed == expected else FAIL,
                               (f"complement H1 = {computed}, expected {expected}",)))
    if "group" in wanted:
        if config.pi1 is None:
            raise ScenarioError(f"{where}: group check needs a pi1 presentation")
        expected = AbelianGroup.parse(str(wanted["group"]))
        verdict = verify_abelian_isomorphism(config.pi1, expected, bounds)
        lines.append(line_from_verdict(f"{where} group", verdict))
    if "surgery" in entry:
        s = entry["surgery"]
        if not isinstance(s, dict):
            raise ScenarioError(f"{where}: 'surgery' must be an object")
        try:
            point = int(s["point"])
            knot = _parse_knot(s["knot"])
            twist = int(s["twist"])
        except KeyError as err:
            raise ScenarioError(f"{where}: surgery needs field {err}") from None
        except ParamError as err:
            raise ScenarioError(f"{where}: {err}") from None
        surgered = apply_surgery(SurgerySpec(config, point, knot, twist))
        tags = tuple(f"component {i + 1}: {c.embedding_tag.describe()}"
                     for i, c in enumerate(surgered.components))
        lines.append(CheckLine(f"{where} surgery", PASS, tags))
        if "case" in s:
            case = _case_from_json(s["case"], where)
            if check_case_hypothesis(case):
                verdict = verify_group_preserved(case, knot_group_from_braid(knot), bounds)
                lines.append(line_from_verdict(f"{where} group-preserved", verdict))
            else:
                lines.append(CheckLine(f"{where} group-preserved", FAIL,
                                       (f"{case.describe()}: hypothesis fails; no claim",)))
    return lines


def run_scenario_text(text: str, bounds: Bounds | None = None,
                      source: str = "scenario") -> Report:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ScenarioError(f"{source}: line {err.lineno} column {err.colno}: {err.msg}") from None
    if not isinstance(data, dict):
        raise ScenarioError(f"{source}: top level must be an object")
    for key in data:
        if key not in ("bounds", "checks"):
            raise ScenarioError(f"{source}: unknown top-level field {key!r}")
    if bounds is None:
        bounds_data = data.get("bounds", {})
        if not isinstance(bounds_data, dict):
            raise ScenarioError(f"{source}: 'bounds' must be an object")
        for key in bounds_data:
            if key not in ("cosets", "rules"):
                raise ScenarioError(f"{source}: unknown bounds field {key!r}")
        bounds = Bounds(int(bounds_data.get("cosets", DEFAULT_BOUNDS.max_cosets)),
                        int(bounds_data.get("rules", DEFAULT_BOUNDS.max_rules)))
    checks = data.get("checks", [])
    if not isinstance(checks, list):
        raise ScenarioError(f"{source}: 'checks' must be a list")

    reports: list[Report] = []
    extra_lines: list[CheckLine] = []
    for index, entry in enumerate(checks):
        if not isinstance(entry, dict):
            raise ScenarioError(f"checks[{index}]: must be an object")
        if "builtin" in entry:
            for key in entry:
                if key not in ("builtin", "params"):
                    raise ScenarioError(f"checks[{index}]: unknown field {key!r}")
            try:
                reports.append(run_builtin(str(entry["builtin"]),
                                           dict(entry.get("params", {})), bounds))
            except ParamError as err:
                raise ScenarioError(f"checks[{index}]: {err}") from None
        elif "configuration" in entry:
            for key in entry:
                if key not in ("configuration", "verify", "surgery"):
                    raise ScenarioError(f"checks[{index}]: unknown field {key!r}")
            extra_lines.extend(_run_configuration_entry(entry, index, bounds))
        else:
            raise ScenarioError(f"checks[{index}]: needs 'builtin' or 'configuration'")

    if len(reports) == 1 and not extra_lines:
        return reports[0]
    lines: list[CheckLine] = []
    for rep in reports:
        lines.extend(CheckLine(f"{rep.title} :: {line.name}", line.verdict, line.evidence)
                     for line in rep.lines)
    lines.extend(extra_lines)
    return Report(f"scenario ({len(checks)} entries)", tuple(lines))


def run_scenario(path: str, bounds: Bounds | None = None) -> Report:
    """Run a scenario file; identical parameters give byte-identical reports."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise ScenarioError(f"cannot read scenario {path!r}: {err}") from None
    return run_scenario_text(text, bounds, source=path)
