"""Finitely presented groups: presentations, abelianization, serialization.

The text form of a presentation is

    gens: a b s ; rels: a b a B A B , [a,s] ; labels: mu1=a mu2=b ;

* generator names are identifiers; within relator words a token is either a
  generator name, the UPPERCASED name of a single-letter lowercase generator
  (meaning its inverse), `name^k` for a power (k may be negative), or the
  commutator shorthand `[x,y]` where x and y are single tokens;
* relators are comma-separated, the `labels:` section is optional and maps
  role names to either a generator or a word in the same token syntax.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .snf import cokernel_invariants, smith_normal_form, diagonal
from .words import Word, commutator, free_reduce


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        for t in self.torsion:
            if t < 2:
                raise ValueError("torsion factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion factors must form a divisibility chain")

    @staticmethod
    def trivial() -> "AbelianGroup":
        return AbelianGroup(0, ())

    @staticmethod
    def free(rank: int) -> "AbelianGroup":
        return AbelianGroup(rank, ())

    @staticmethod
    def cyclic(q: int) -> "AbelianGroup":
        if q < 0:
            raise ValueError("cyclic order must be >= 0")
        if q == 0:
            return AbelianGroup(1, ())
        if q == 1:
            return AbelianGroup(0, ())
        return AbelianGroup(0, (q,))

    @staticmethod
    def of_orders(*orders: int) -> "AbelianGroup":
        """Canonical form of Z_{orders[0]} + Z_{orders[1]} + ... (0 means Z)."""
        rank = sum(1 for q in orders if q == 0)
        finite = [q for q in orders if q >= 2]
        if any(q < 0 for q in orders):
            raise ValueError("orders must be non-negative")
        if not finite:
            return AbelianGroup(rank, ())
        diag_matrix = [[finite[i] if i == j else 0 for j in range(len(finite))]
                       for i in range(len(finite))]
        d, _, _ = smith_normal_form(diag_matrix)
        torsion = tuple(x for x in diagonal(d) if x >= 2)
        return AbelianGroup(rank, torsion)

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @staticmethod
    def parse(text: str) -> "AbelianGroup":
        """Inverse of __str__; also accepts '1' for the trivial group."""
        text = text.strip()
        if text in ("0", "1"):
            return AbelianGroup.trivial()
        rank = 0
        orders: list[int] = []
        for part in text.replace("+", " ").split():
            if part == "Z":
                rank += 1
            elif part.startswith("Z^"):
                rank += int(part[2:])
            elif part.startswith("Z_"):
                orders.append(int(part[2:]))
            else:
                raise ValueError(f"cannot parse abelian group term {part!r}")
        return AbelianGroup.of_orders(*([0] * rank + orders))


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    labels: tuple[tuple[str, int | Word], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        canonical = []
        for role, target in self.labels:
            if isinstance(target, Word) and len(target.letters) == 1 \
                    and target.letters[0][1] == 1:
                target = target.letters[0][0]
            canonical.append((role, target))
        object.__setattr__(self, "labels", tuple(canonical))
        seen = set()
        for name in self.generators:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        n = len(self.generators)
        for r in self.relators:
            if r.max_index() >= n:
                raise ValueError("relator references unknown generator")
        roles = set()
        for role, target in self.labels:
            if role in roles:
                raise ValueError(f"duplicate label role {role!r}")
            roles.add(role)
            if isinstance(target, Word):
                if target.max_index() >= n:
                    raise ValueError(f"label {role!r} references unknown generator")
            elif not (0 <= target < n):
                raise ValueError(f"label {role!r} index out of range")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def label(self, role: str) -> int | Word | None:
        for name, target in self.labels:
            if name == role:
                return target
        return None

    def label_word(self, role: str) -> Word | None:
        target = self.label(role)
        if target is None:
            return None
        if isinstance(target, Word):
            return target
        return Word.gen(target)

    def with_labels(self, labels: dict[str, int | Word]) -> "Presentation":
        merged = dict(self.labels)
        merged.update(labels)
        return Presentation(self.generators, self.relators,
                            tuple(sorted(merged.items())))

    def gen_index(self, name: str) -> int:
        return self.generators.index(name)

    # -- text form ---------------------------------------------------------

    def format(self) -> str:
        words = " , ".join(format_word(r, self.generators) for r in self.relators)
        out = f"gens: {' '.join(self.generators)} ; rels: {words} ;"
        if self.labels:
            items = []
            for role, target in self.labels:
                if isinstance(target, Word):
                    # label words join their tokens with '.' to stay one item
                    body = ".".join(format_word(target, self.generators).split())
                    items.append(f"{role}={body}")
                else:
                    items.append(f"{role}={self.generators[target]}")
            out += f" labels: {' '.join(items)} ;"
        return out

    @staticmethod
    def parse(text: str) -> "Presentation":
        return parse_presentation(text)


def format_word(w: Word, names: tuple[str, ...]) -> str:
    if not w.letters:
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        g, e = letters[i]
        j = i
        while j < len(letters) and letters[j] == (g, e):
            j += 1
        count = (j - i) * e
        name = names[g]
        if count == 1:
            parts.append(name)
        elif count == -1 and len(name) == 1 and name.islower():
            parts.append(name.upper())
        else:
            parts.append(f"{name}^{count}")
        i = j
    return " ".join(parts)


def _parse_token(token: str, index: dict[str, int]) -> Word:
    if token == "1":
        return Word.identity()
    power = 1
    m = re.match(r"^(.*)\^(-?\d+)$", token)
    if m:
        token, power = m.group(1), int(m.group(2))
    m = re.match(r"^\[([^,\[\]]+),([^,\[\]]+)\]$", token)
    if m:
        base = commutator(_parse_token(m.group(1).strip(), index),
                          _parse_token(m.group(2).strip(), index))
        return free_reduce(base ** power)
    if token in index:
        return Word.gen(index[token], power)
    lower = token.lower()
    if token != lower and lower in index and len(token) == 1:
        return Word.gen(index[lower], -power)
    raise ValueError(f"unknown generator token {token!r}")


def parse_word(text: str, names: tuple[str, ...]) -> Word:
    index = {name: i for i, name in enumerate(names)}
    word = Word.identity()
    for token in text.split():
        word = word * _parse_token(token, index)
    return free_reduce(word)


def _split_outside_brackets(text: str) -> list[str]:
    """Split on commas that are not enclosed in [...] commutator brackets."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def parse_presentation(text: str) -> Presentation:
    sections: dict[str, str] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, body = chunk.partition(":")
        key = key.strip()
        if key not in ("gens", "rels", "labels"):
            raise ValueError(f"unknown presentation section {key!r}")
        if key in sections:
            raise ValueError(f"duplicate section {key!r}")
        sections[key] = body.strip()
    if "gens" not in sections:
        raise ValueError("missing 'gens:' section")
    names = tuple(sections["gens"].split())
    relators = []
    body = sections.get("rels", "")
    if body:
        for rel_text in _split_outside_brackets(body):
            rel_text = rel_text.strip()
            if rel_text:
                relators.append(parse_word(rel_text, names))
    labels: list[tuple[str, int | Word]] = []
    for item in sections.get("labels", "").split():
        role, _, value = item.partition("=")
        if not value:
            raise ValueError(f"bad label item {item!r}")
        if value in names:
            labels.append((role, names.index(value)))
        else:
            labels.append((role, parse_word(value.replace(".", " "), names)))
    return Presentation(names, tuple(relators), tuple(labels))


# -- abelianization ---------------------------------------------------------

def exponent_matrix(p: Presentation) -> list[list[int]]:
    """One row per relator: exponent sums over each generator."""
    return [[r.exponent_sum(g) for g in range(p.ngens)] for r in p.relators]


def abelianization(p: Presentation) -> AbelianGroup:
    free_rank, torsion = cokernel_invariants(exponent_matrix(p), p.ngens)
    return AbelianGroup(free_rank, torsion)


# -- Tietze simplification ---------------------------------------------------

def simplify_presentation(p: Presentation, keep: frozenset[int] | set[int] = frozenset()) -> Presentation:
    """Eliminate generators that some relator defines in terms of the others.

    A generator g (not in `keep`, not a label-by-index target we cannot move)
    is eliminable when a relator contains it exactly once; the relator then
    solves for g and the solution is substituted everywhere, including label
    words.  Deterministic: always eliminates via the shortest usable relator.
    The group is unchanged up to isomorphism.
    """
    generators = list(p.generators)
    relators = [free_reduce(r) for r in p.relators]
    labels: dict[str, Word] = {}
    for role, target in p.labels:
        labels[role] = target if isinstance(target, Word) else Word.gen(target)
    keep_names = {p.generators[i] for i in keep}

    while True:
        candidate = None
        for ri, rel in enumerate(relators):
            counts: dict[int, int] = {}
            for g, _ in rel.letters:
                counts[g] = counts.get(g, 0) + 1
            for pos, (g, _) in enumerate(rel.letters):
                if counts[g] == 1 and generators[g] not in keep_names:
                    key = (len(rel), ri, pos)
                    if candidate is None or key < candidate[0]:
                        candidate = (key, ri, pos, g)
        if candidate is None:
            break
        _, ri, pos, g = candidate
        rel = relators[ri]
        before = Word(rel.letters[:pos])
        sign = rel.letters[pos][1]
        after = Word(rel.letters[pos + 1:])
        solved = free_reduce(before.inverse() * after.inverse())
        if sign == -1:
            solved = solved.inverse()
        images = {g: solved}
        relators = [free_reduce(r.substitute(images)) for i, r in enumerate(relators) if i != ri]
        labels = {role: w.substitute(images) for role, w in labels.items()}
        mapping = {old: (old if old < g else old - 1) for old in range(len(generators)) if old != g}
        generators.pop(g)
        relators = [r.reindex(mapping) for r in relators]
        labels = {role: w.reindex(mapping) for role, w in labels.items()}

    relators = [r for r in relators if r.letters]
    label_items: list[tuple[str, int | Word]] = []
    for role, w in sorted(labels.items()):
        if len(w.letters) == 1 and w.letters[0][1] == 1:
            label_items.append((role, w.letters[0][0]))
        else:
            label_items.append((role, w))
    return Presentation(tuple(generators), tuple(relators), tuple(label_items))
