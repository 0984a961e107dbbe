"""Bounded Todd-Coxeter coset enumeration, deduction-first (Felsch) strategy.

The table is over the alphabet of generators and their inverses (column 2i
is generator i, column 2i+1 its inverse).  New cosets are only introduced
at the first undefined table entry once all pending deductions have been
processed, which makes runs deterministic for a fixed presentation, subgroup
and cap.  The cap bounds the number of table rows ever allocated; hitting it
is reported as an inconclusive outcome, never as a result.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .presentations import Presentation
from .words import Word, cyclically_reduce


@dataclass(frozen=True)
class CosetResult:
    completed: bool
    index: int | None
    allocated: int
    max_cosets: int

    def evidence(self) -> list[str]:
        if self.completed:
            return [f"coset enumeration completed: index {self.index} "
                    f"({self.allocated} cosets allocated, cap {self.max_cosets})"]
        return [f"coset enumeration inconclusive: table cap {self.max_cosets} "
                f"exhausted ({self.allocated} cosets allocated)"]


class _CapExceeded(Exception):
    pass


def _letters(word: Word) -> tuple[int, ...]:
    return tuple(2 * g if e == 1 else 2 * g + 1 for g, e in word.letters)


def _inv(x: int) -> int:
    return x ^ 1


class _Table:
    def __init__(self, ncols: int, cap: int):
        self.ncols = ncols
        self.cap = cap
        self.rows: list[list[int | None]] = [[None] * ncols]
        self.parent = [0]
        self.live = 1
        self.deductions: deque[tuple[int, int]] = deque()

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, x: int) -> int:
        if len(self.rows) >= self.cap:
            raise _CapExceeded
        d = len(self.rows)
        self.rows.append([None] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.set_entry(c, x, d)
        return d

    def set_entry(self, c: int, x: int, d: int):
        self.rows[c][x] = d
        self.rows[d][_inv(x)] = c
        self.deductions.append((c, x))
        self.deductions.append((d, _inv(x)))

    def lookup(self, c: int, x: int) -> int | None:
        d = self.rows[c][x]
        if d is None:
            return None
        d = self.rep(d)
        self.rows[c][x] = d
        return d

    def coincidence(self, a: int, b: int):
        queue: list[int] = []

        def merge(x: int, y: int):
            x, y = self.rep(x), self.rep(y)
            if x == y:
                return
            if x > y:
                x, y = y, x
            self.parent[y] = x
            self.live -= 1
            queue.append(y)

        merge(a, b)
        while queue:
            dead = queue.pop(0)
            row = self.rows[dead]
            for x in range(self.ncols):
                delta = row[x]
                if delta is None:
                    continue
                # detach the reverse edge before transplanting
                self.rows[delta][_inv(x)] = None
                mu, nu = self.rep(dead), self.rep(delta)
                entry = self.rows[mu][x]
                if entry is not None:
                    merge(nu, entry)
                else:
                    entry_back = self.rows[nu][_inv(x)]
                    if entry_back is not None:
                        merge(mu, entry_back)
                    else:
                        self.rows[mu][x] = nu
                        self.rows[nu][_inv(x)] = mu
                        self.deductions.append((mu, x))


def _scan(table: _Table, alpha: int, word: tuple[int, ...]):
    """Check the cyclic relation word(alpha) = alpha, deducing or merging."""
    f = table.rep(alpha)
    i = 0
    n = len(word)
    while i < n:
        nxt = table.lookup(f, word[i])
        if nxt is None:
            break
        f = nxt
        i += 1
    if i == n:
        if f != table.rep(alpha):
            table.coincidence(f, table.rep(alpha))
        return
    b = table.rep(alpha)
    j = n - 1
    while j >= i:
        prv = table.lookup(b, _inv(word[j]))
        if prv is None:
            break
        b = prv
        j -= 1
    if j < i:
        table.coincidence(f, b)
    elif j == i:
        table.set_entry(f, word[i], b)
    # gap longer than one entry: nothing to deduce yet


def _scan_and_fill(table: _Table, alpha: int, word: tuple[int, ...]):
    """Like _scan but defines cosets until the relation closes (HLT fill)."""
    while True:
        f = table.rep(alpha)
        i = 0
        n = len(word)
        while i < n:
            nxt = table.lookup(f, word[i])
            if nxt is None:
                break
            f = nxt
            i += 1
        if i == n:
            if f != table.rep(alpha):
                table.coincidence(f, table.rep(alpha))
            return
        b = table.rep(alpha)
        j = n - 1
        while j >= i:
            prv = table.lookup(b, _inv(word[j]))
            if prv is None:
                break
            b = prv
            j -= 1
        if j < i:
            table.coincidence(f, b)
            return
        if j == i:
            table.set_entry(f, word[i], b)
            return
        table.define(f, word[i])


def coset_enumerate(p: Presentation, subgroup: list[Word] | tuple[Word, ...] = (),
                    max_cosets: int = 100_000) -> CosetResult:
    """Index of the subgroup generated by `subgroup` words, if it completes.

    For the empty subgroup this is the group order.  Within the row cap the
    result is exact; otherwise the outcome is inconclusive.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    for w in subgroup:
        if w.max_index() >= p.ngens:
            raise ValueError("subgroup word references unknown generator")

    ncols = 2 * p.ngens
    relator_words = []
    for r in p.relators:
        w = _letters(cyclically_reduce(r))
        if w:
            relator_words.append(w)

    # deduction table: every rotation of each relator and its inverse,
    # bucketed by first letter
    edp: list[list[tuple[int, ...]]] = [[] for _ in range(ncols)]
    seen = set()
    for w in relator_words:
        inverse = tuple(_inv(x) for x in reversed(w))
        for base in (w, inverse):
            for k in range(len(base)):
                rot = base[k:] + base[:k]
                if rot not in seen:
                    seen.add(rot)
                    edp[rot[0]].append(rot)

    table = _Table(ncols, max_cosets)

    def process_deductions():
        while table.deductions:
            c, x = table.deductions.popleft()
            c = table.rep(c)
            for w in edp[x]:
                _scan(table, c, w)

    try:
        for w in subgroup:
            _scan_and_fill(table, 0, _letters(w))
            process_deductions()
        alpha = 0
        while alpha < len(table.rows):
            if table.rep(alpha) != alpha:
                alpha += 1
                continue
            x = 0
            while x < ncols:
                if table.rep(alpha) != alpha:
                    break  # alpha died during processing
                if table.rows[alpha][x] is None:
                    table.define(alpha, x)
                    process_deductions()
                x += 1
            alpha += 1
    except _CapExceeded:
        return CosetResult(False, None, len(table.rows), max_cosets)

    return CosetResult(True, table.live, len(table.rows), max_cosets)
