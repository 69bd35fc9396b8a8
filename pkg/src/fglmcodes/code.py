"""Binary linear codes given by an n x r parity-check matrix (syndrome = y*H)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gf2 import BitMatrix, BitVector, DimensionError, left_nullspace, rank, vec_mat_mul
from .monomials import Monomial, psi

MAX_ENUM_DIMENSION = 24


class CodeFormatError(ValueError):
    """Base class for problems reading a code file."""


class MalformedHeaderError(CodeFormatError):
    pass


class NonBinaryEntryError(CodeFormatError):
    pass


class RowCountError(CodeFormatError):
    pass


class RankDeficientError(CodeFormatError):
    pass


class GuardExceeded(ValueError):
    """A brute-force routine was asked to enumerate beyond its size guard."""


class UndefinedDistanceError(ValueError):
    pass


# A syndrome is just a length-r bit vector obtained as y*H.
Syndrome = BitVector


@dataclass(frozen=True)
class BinaryCode:
    n: int
    r: int
    H: BitMatrix

    def __post_init__(self) -> None:
        if not 1 <= self.r <= self.n:
            raise CodeFormatError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")
        if self.H.nrows != self.n or self.H.ncols != self.r:
            raise DimensionError(
                f"H is {self.H.nrows}x{self.H.ncols}, expected {self.n}x{self.r}")
        rk = rank(self.H)
        if rk != self.r:
            raise RankDeficientError(f"parity-check matrix has rank {rk} < r={self.r}")

    @classmethod
    def from_rows(cls, rows, transposed: bool = False) -> "BinaryCode":
        H = BitMatrix.from_rows(rows)
        if transposed:
            H = H.transpose()
        return cls(H.nrows, H.ncols, H)

    @property
    def k(self) -> int:
        return self.n - self.r

    @property
    def rows(self) -> tuple[int, ...]:
        """Packed rows of H; row i is the syndrome of x_{i+1}."""
        return self.H.packed_rows

    def syndrome_vec(self, y: BitVector) -> Syndrome:
        if y.n != self.n:
            raise DimensionError(f"vector of length {y.n} for a code of length {self.n}")
        return vec_mat_mul(y, self.H)

    def syndrome_word(self, w: Monomial) -> Syndrome:
        if w.n != self.n:
            raise DimensionError(f"monomial in {w.n} variables for a code of length {self.n}")
        return vec_mat_mul(psi(w), self.H)

    def contains(self, c: BitVector) -> bool:
        return self.syndrome_vec(c).bits == 0

    @cached_property
    def codeword_basis(self) -> tuple[int, ...]:
        return tuple(left_nullspace(self.H))

    def enumerate_codewords(self) -> list[BitVector]:
        if self.k > MAX_ENUM_DIMENSION:
            raise GuardExceeded(f"k={self.k} exceeds enumeration guard {MAX_ENUM_DIMENSION}")
        words = [0]
        for b in self.codeword_basis:
            words += [w ^ b for w in words]
        return [BitVector(self.n, w) for w in sorted(words)]

    @cached_property
    def _min_distance(self) -> int:
        if self.k == 0:
            raise UndefinedDistanceError("the trivial code {0} has no minimum distance")
        return min(c.bits.bit_count() for c in self.enumerate_codewords() if c.bits)

    def min_distance(self) -> int:
        return self._min_distance

    def error_capability(self) -> int:
        return (self.min_distance() - 1) // 2

    def to_text(self) -> str:
        lines = [f"{self.n} {self.r}"]
        lines += [" ".join(str(b) for b in self.H.row(i)) for i in range(self.n)]
        return "\n".join(lines) + "\n"


def parse_code(text: str | bytes, transposed: bool = False) -> BinaryCode:
    """Read a code file: a header ``n r`` followed by the rows of H.

    With ``transposed=True`` the header is still ``n r`` but the body holds
    the r x n matrix (r rows of n bits), which is transposed on ingest.
    Blank lines and ``#`` comments are ignored.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedHeaderError("empty code file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MalformedHeaderError(f"expected header 'n r', got {lines[0]!r}")
    n, r = int(header[0]), int(header[1])
    if not 1 <= r <= n:
        raise MalformedHeaderError(f"need 1 <= r <= n, got n={n}, r={r}")

    nrows, ncols = (r, n) if transposed else (n, r)
    body = lines[1:]
    if len(body) != nrows:
        raise RowCountError(f"expected {nrows} matrix rows, got {len(body)}")
    rows = []
    for lineno, line in enumerate(body, start=2):
        entries = line.split()
        if len(entries) != ncols:
            raise RowCountError(f"line {lineno}: expected {ncols} entries, got {len(entries)}")
        bad = [e for e in entries if e not in ("0", "1")]
        if bad:
            raise NonBinaryEntryError(f"line {lineno}: non-binary entry {bad[0]!r}")
        rows.append([int(e) for e in entries])
    return BinaryCode.from_rows(rows, transposed=transposed)


def read_code(path, transposed: bool = False) -> BinaryCode:
    with open(path, "rb") as fh:
        return parse_code(fh.read(), transposed=transposed)
