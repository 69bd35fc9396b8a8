"""Bit vectors and bit matrices over GF(2), packed into Python ints.

Coordinate ``i`` (0-based) of a vector lives in bit ``i`` of the packed
integer, so coordinate 1 in the usual 1-based notation is the least
significant bit.  Text rendering lists coordinates from first to last,
e.g. ``(1,1,1,0,1,0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when operand shapes do not agree."""


@dataclass(frozen=True)
class BitVector:
    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionError(f"negative length {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise DimensionError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for i, b in enumerate(values):
            if b not in (0, 1):
                raise ValueError(f"non-binary entry {b!r} at position {i}")
            bits |= b << i
            n = i + 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a contiguous bit string such as ``111010``."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls.from_list(int(ch) for ch in text)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self):
        return (((self.bits >> i) & 1) for i in range(self.n))

    def __add__(self, other: "BitVector") -> "BitVector":
        return vec_add(self, other)

    def support(self) -> list[int]:
        return [i for i in range(self.n) if (self.bits >> i) & 1]

    def to_list(self) -> list[int]:
        return list(self)

    def to_string(self) -> str:
        return "".join(str(b) for b in self)

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self) + ")"


@dataclass(frozen=True)
class BitMatrix:
    """A rows x cols matrix; each row is packed like a :class:`BitVector`."""

    nrows: int
    ncols: int
    packed_rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.packed_rows) != self.nrows:
            raise DimensionError(f"expected {self.nrows} rows, got {len(self.packed_rows)}")
        for r in self.packed_rows:
            if r < 0 or r >> self.ncols:
                raise DimensionError(f"row {r:#x} does not fit in {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionError(f"ragged row of length {len(row)}, expected {ncols}")
            packed.append(BitVector.from_list(row).bits)
        return cls(len(rows), ncols, tuple(packed))

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.packed_rows[i])

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not 0 <= j < self.ncols:
            raise IndexError(idx)
        return (self.packed_rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            c = 0
            for i, r in enumerate(self.packed_rows):
                c |= ((r >> j) & 1) << i
            cols.append(c)
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_list() for i in range(self.nrows)]


def vec_add(a: BitVector, b: BitVector) -> BitVector:
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.n} vs {b.n}")
    return BitVector(a.n, a.bits ^ b.bits)


def weight(v: BitVector) -> int:
    return v.bits.bit_count()


def mul_packed(bits: int, rows: Sequence[int]) -> int:
    """XOR of the rows selected by the set bits of ``bits``."""
    acc = 0
    i = 0
    while bits:
        if bits & 1:
            acc ^= rows[i]
        bits >>= 1
        i += 1
    return acc


def vec_mat_mul(v: BitVector, m: BitMatrix) -> BitVector:
    if v.n != m.nrows:
        raise DimensionError(f"vector of length {v.n} times {m.nrows}x{m.ncols} matrix")
    return BitVector(m.ncols, mul_packed(v.bits, m.packed_rows))


def rank(m: BitMatrix) -> int:
    work = list(m.packed_rows)
    r = 0
    for col in range(m.ncols):
        pivot = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


def left_nullspace(m: BitMatrix) -> list[int]:
    """Basis (packed, length ``m.nrows``) of ``{v : v*m = 0}``."""
    # Reduce [m | I]; rows whose m-part vanishes carry the kernel.
    width = m.ncols
    aug = [row | (1 << (width + i)) for i, row in enumerate(m.packed_rows)]
    mask = (1 << width) - 1
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(aug)) if (aug[i] >> col) & 1), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        for i in range(len(aug)):
            if i != r and (aug[i] >> col) & 1:
                aug[i] ^= aug[r]
        r += 1
    return [row >> width for row in aug[r:] if row & mask == 0]
