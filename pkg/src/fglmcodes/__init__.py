"""Groebner bases of binary-code ideals via FGLM, and decoding with them."""

from .code import BinaryCode, parse_code, read_code
from .decoder import DecodeResult, Outcome, canonical_form_gb, canonical_form_matphi, decode
from .fglm import Binomial, FglmResult, MatphiSet, NormalSet, run_fglm
from .gf2 import BitMatrix, BitVector
from .monomials import Monomial, TermOrdering

__all__ = [
    "BinaryCode", "BitMatrix", "BitVector", "Binomial", "DecodeResult", "FglmResult",
    "MatphiSet", "Monomial", "NormalSet", "Outcome", "TermOrdering",
    "canonical_form_gb", "canonical_form_matphi", "decode", "parse_code", "read_code",
    "run_fglm",
]

__version__ = "0.1.0"
