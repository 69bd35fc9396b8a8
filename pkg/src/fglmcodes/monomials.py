"""Monomials of the free commutative monoid on ``x1..xn`` and term orderings.

Variable precedence is fixed as ``xn > ... > x2 > x1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .gf2 import BitVector, DimensionError

MAX_EXPONENT = 255


class ExponentOverflow(OverflowError):
    pass


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        for e in self.exponents:
            if e < 0:
                raise ValueError(f"negative exponent in {self.exponents}")
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> "Monomial":
        """The variable ``x_i`` (1-based index) in ``n`` variables."""
        return cls.one(n).multiply(i)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        """Squarefree monomial over the 1-based variable indices in ``support``."""
        exps = [0] * n
        for i in support:
            exps[i - 1] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> list[int]:
        return [i + 1 for i, e in enumerate(self.exponents) if e]

    def support_size(self) -> int:
        return sum(1 for e in self.exponents if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def multiply(self, i: int) -> "Monomial":
        if not 1 <= i <= self.n:
            raise IndexError(f"variable x{i} out of range 1..{self.n}")
        exps = list(self.exponents)
        exps[i - 1] += 1
        return Monomial(tuple(exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        _check_same_n(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, divisor: "Monomial") -> "Monomial":
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, divisor.exponents)))

    def predecessors(self) -> set["Monomial"]:
        out = set()
        for i, e in enumerate(self.exponents):
            if e:
                exps = list(self.exponents)
                exps[i] -= 1
                out.add(Monomial(tuple(exps)))
        return out

    def psi(self) -> BitVector:
        return psi(self)

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r}, n={self.n})"


def _check_same_n(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise DimensionError(f"monomials in {a.n} and {b.n} variables")


def predecessors(w: Monomial) -> set[Monomial]:
    return w.predecessors()


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def psi(m: Monomial) -> BitVector:
    """Exponent vector reduced mod 2."""
    bits = 0
    for i, e in enumerate(m.exponents):
        if e & 1:
            bits |= 1 << i
    return BitVector(m.n, bits)


def format_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of :func:`format_monomial`; factors may repeat or come in any order."""
    text = text.strip()
    if text == "1":
        return Monomial.one(n)
    exps = [0] * n
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} out of range 1..{n}")
        exps[i - 1] += int(m.group(2) or 1)
    return Monomial(tuple(exps))


class TermOrdering(Enum):
    DEGREVLEX = "degrevlex"
    DEGLEX = "deglex"
    LEX = "lex"

    @property
    def degree_compatible(self) -> bool:
        return self is not TermOrdering.LEX

    def key(self, m: Monomial) -> tuple[int, ...]:
        """Sort key: ``a < b`` in this ordering iff ``key(a) < key(b)``."""
        return _KEYS[self](m.exponents)

    def compare(self, a: Monomial, b: Monomial) -> int:
        _check_same_n(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @classmethod
    def parse(cls, name: "str | TermOrdering") -> "TermOrdering":
        if isinstance(name, TermOrdering):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown ordering {name!r}; choose from "
                             + ", ".join(o.value for o in cls)) from None


def _degrevlex_key(e: tuple[int, ...]) -> tuple[int, ...]:
    # Ties in degree: the smaller exponent on the first differing variable
    # counting up from x1 is the larger monomial.
    return (sum(e),) + tuple(-x for x in e)


def _deglex_key(e: tuple[int, ...]) -> tuple[int, ...]:
    return (sum(e),) + e[::-1]


def _lex_key(e: tuple[int, ...]) -> tuple[int, ...]:
    return e[::-1]


_KEYS: dict[TermOrdering, Callable[[tuple[int, ...]], tuple[int, ...]]] = {
    TermOrdering.DEGREVLEX: _degrevlex_key,
    TermOrdering.DEGLEX: _deglex_key,
    TermOrdering.LEX: _lex_key,
}

LT, EQ, GT = -1, 0, 1


def compare(ordering: TermOrdering | str, a: Monomial, b: Monomial) -> int:
    """Return ``LT``, ``EQ`` or ``GT`` comparing ``a`` against ``b``."""
    return TermOrdering.parse(ordering).compare(a, b)
