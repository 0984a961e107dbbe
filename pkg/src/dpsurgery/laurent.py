"""Integer Laurent polynomials in one variable, exact and immutable.

The canonical text form lists terms in ascending degree, e.g.
`t^-1 - 1 + t`; the zero polynomial prints as `0`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class LaurentPoly:
    min_degree: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.coeffs and (self.coeffs[0] == 0 or self.coeffs[-1] == 0):
            raise ValueError("stored coefficients must be trimmed; use LaurentPoly.make")
        if not self.coeffs:
            object.__setattr__(self, "min_degree", 0)

    @staticmethod
    def make(min_degree: int, coeffs) -> "LaurentPoly":
        coeffs = [int(c) for c in coeffs]
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return LaurentPoly(0, ())
        return LaurentPoly(min_degree + lo, tuple(coeffs[lo:hi]))

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def term(coeff: int, degree: int = 0) -> "LaurentPoly":
        if coeff == 0:
            return LaurentPoly.zero()
        return LaurentPoly(degree, (coeff,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def max_degree(self) -> int:
        if not self.coeffs:
            return 0
        return self.min_degree + len(self.coeffs) - 1

    def coefficient(self, degree: int) -> int:
        i = degree - self.min_degree
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        """(degree, coefficient) pairs for nonzero coefficients, ascending."""
        return [(self.min_degree + i, c) for i, c in enumerate(self.coeffs) if c]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_degree + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_degree + i - lo] += c
        return LaurentPoly.make(lo, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_degree, tuple(-c for c in self.coeffs)) if self.coeffs else self

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly.make(self.min_degree + other.min_degree, out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.min_degree + k, self.coeffs)

    def reverse(self) -> "LaurentPoly":
        """Substitute t -> t^-1."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.max_degree, tuple(reversed(self.coeffs)))

    def evaluate_unit(self, u: int) -> int:
        """Exact value at t = 1 or t = -1."""
        if u not in (1, -1):
            raise ValueError("only t = +-1 is supported")
        total = 0
        for degree, c in self.terms():
            total += c if (u == 1 or degree % 2 == 0) else -c
        return total

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def substitute_square(self) -> "LaurentPoly":
        """Substitute t -> t^2: doubles every exponent."""
        if not self.coeffs:
            return self
        out = [0] * (2 * len(self.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return LaurentPoly(2 * self.min_degree, tuple(out))

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for degree, c in self.terms():
            if degree == 0:
                body = str(abs(c))
            else:
                power = var if degree == 1 else f"{var}^{degree}"
                body = power if abs(c) == 1 else f"{abs(c)} {power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    @staticmethod
    def parse(text: str, var: str = "t") -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return LaurentPoly.zero()
        protected = text.replace("^-", "^~")  # keep exponent signs out of term splitting
        result = LaurentPoly.zero()
        term_re = re.compile(rf"^(\d+)?\s*({re.escape(var)}(?:\^(-?\d+))?)?$")
        for raw in re.findall(r"[+-]?[^+-]+", protected):
            term = raw.strip()
            sign = 1
            if term.startswith("+"):
                term = term[1:].strip()
            elif term.startswith("-"):
                sign = -1
                term = term[1:].strip()
            term = term.replace("^~", "^-")
            m = term_re.match(term)
            if not m or not term or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse polynomial term {raw.strip()!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            degree = 0
            if m.group(2):
                degree = int(m.group(3)) if m.group(3) else 1
            result = result + LaurentPoly.term(sign * coeff, degree)
        return result
