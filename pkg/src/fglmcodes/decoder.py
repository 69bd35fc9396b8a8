"""Canonical forms modulo I(C) and complete decoding up to t errors."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .fglm import Binomial, FglmResult, MatphiSet, NormalSet
from .gf2 import BitVector, DimensionError
from .monomials import Monomial, psi


class OrderingNotDegreeCompatible(ValueError):
    pass


class Outcome(Enum):
    DECODED = "Decoded"
    TOO_MANY_ERRORS = "TooManyErrors"


@dataclass(frozen=True)
class DecodeResult:
    outcome: Outcome
    syndrome: BitVector
    canonical_weight: int
    error: BitVector | None = None
    codeword: BitVector | None = None

    @property
    def decoded(self) -> bool:
        return self.outcome is Outcome.DECODED


def vector_to_monomial(y: BitVector) -> Monomial:
    return Monomial(tuple(y))


def canonical_form_gb(w: Monomial, gb: Sequence[Binomial], max_steps: int = 1_000_000) -> Monomial:
    """Rewrite ``lead*u -> tail*u`` until no leading term divides ``w``."""
    for _ in range(max_steps):
        for b in gb:
            if b.lead.divides(w):
                w = w.quotient(b.lead) * b.tail
                break
        else:
            return w
    raise RuntimeError(f"rewriting did not terminate within {max_steps} steps")


def canonical_form_matphi(w: Monomial, normal: NormalSet, matphi: MatphiSet) -> Monomial:
    idx = normal.index(Monomial.one(w.n))
    for k, e in enumerate(w.exponents, start=1):
        # every table is an involution, so only the parity of e matters
        if e & 1:
            idx = matphi.apply(k, idx)
    return normal[idx]


def canonical_form(w: Monomial, result: FglmResult, engine: str = "matphi") -> Monomial:
    if engine == "matphi" and result.matphi is not None:
        return canonical_form_matphi(w, result.normal_set, result.matphi)
    if engine in ("matphi", "gb"):
        return canonical_form_gb(w, result.gb)
    raise ValueError(f"unknown canonical-form engine {engine!r}")


def effective_t(result: FglmResult, t: int | None = None) -> int:
    if t is not None:
        return t
    if result.t_detected is not None:
        return result.t_detected
    # No squarefree collision: every coset leader is unique, decode everything.
    return result.code.n


def decode(y: BitVector, result: FglmResult, t: int | None = None,
           engine: str = "matphi") -> DecodeResult:
    """Decode ``y`` with the canonical form of its squarefree monomial.

    ``t`` defaults to the capability detected during the run.  If the
    canonical form has weight above ``t`` the result is ``TooManyErrors``
    and no codeword is proposed.
    """
    code = result.code
    if not result.ordering.degree_compatible:
        raise OrderingNotDegreeCompatible(
            f"decoding needs a degree-compatible ordering, got {result.ordering.value}")
    if y.n != code.n:
        raise DimensionError(f"received vector has length {y.n}, code length is {code.n}")
    t = effective_t(result, t)
    syndrome = code.syndrome_vec(y)
    e = psi(canonical_form(vector_to_monomial(y), result, engine))
    w = e.bits.bit_count()
    if w > t:
        return DecodeResult(Outcome.TOO_MANY_ERRORS, syndrome, w)
    return DecodeResult(Outcome.DECODED, syndrome, w, error=e, codeword=y + e)
