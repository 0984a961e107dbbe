"""Words in a finitely generated free group.

A letter is a pair (generator index, sign) with sign +1 or -1; a word is a
tuple of letters.  The empty word is the identity.  Words are immutable and
all operations return fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass


Letter = tuple[int, int]


def _check_letters(letters) -> tuple[Letter, ...]:
    out = []
    for g, e in letters:
        if g < 0:
            raise ValueError(f"negative generator index {g}")
        if e not in (1, -1):
            raise ValueError(f"exponent sign must be +-1, got {e}")
        out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _check_letters(self.letters))

    @staticmethod
    def gen(index: int, power: int = 1) -> "Word":
        if power >= 0:
            return Word(((index, 1),) * power)
        return Word(((index, -1),) * (-power))

    @staticmethod
    def identity() -> "Word":
        return Word(())

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def exponent_sum(self, index: int) -> int:
        return sum(e for g, e in self.letters if g == index)

    def max_index(self) -> int:
        """Largest generator index appearing, or -1 for the identity."""
        return max((g for g, _ in self.letters), default=-1)

    def substitute(self, images: dict[int, "Word"]) -> "Word":
        """Replace each generator by its image word (others untouched)."""
        parts: list[Letter] = []
        for g, e in self.letters:
            image = images.get(g)
            if image is None:
                parts.append((g, e))
            elif e == 1:
                parts.extend(image.letters)
            else:
                parts.extend(image.inverse().letters)
        return free_reduce(Word(tuple(parts)))

    def reindex(self, mapping: dict[int, int]) -> "Word":
        return Word(tuple((mapping[g], e) for g, e in self.letters))


def free_reduce(w: Word) -> Word:
    """The unique freely reduced word equal to w in the free group."""
    stack: list[Letter] = []
    for g, e in w.letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return Word(tuple(stack))


def cyclically_reduce(w: Word) -> Word:
    """Conjugacy representative: freely reduce, then cancel across the ends."""
    r = free_reduce(w)
    letters = list(r.letters)
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return Word(tuple(letters))


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1."""
    return free_reduce(x * y * x.inverse() * y.inverse())
