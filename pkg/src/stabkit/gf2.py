"""Bit-packed linear algebra over GF(2).

Vectors and matrices store 64 columns per uint64 word: bit j of word w
holds column 64*w + j. Padding bits beyond the declared length are kept
zero so whole-word XOR and popcount are safe.
"""
from __future__ import annotations

import numpy as np

_WORD = 64


def _n_words(bits: int) -> int:
    return max(1, (bits + _WORD - 1) // _WORD)


def _pad_mask(bits: int) -> np.ndarray:
    """Per-word mask clearing bits at positions >= `bits`."""
    words = _n_words(bits)
    mask = np.full(words, ~np.uint64(0), dtype=np.uint64)
    tail = bits % _WORD
    if bits > 0 and tail:
        mask[-1] = np.uint64((1 << tail) - 1)
    elif bits == 0:
        mask[0] = np.uint64(0)
    return mask


class BitVector:
    """Fixed-length vector over GF(2), bit-packed into uint64 words."""

    __slots__ = ("len", "data")

    def __init__(self, length: int, data: np.ndarray | None = None):
        if length < 0:
            raise ValueError("length must be nonnegative")
        self.len = length
        if data is None:
            self.data = np.zeros(_n_words(length), dtype=np.uint64)
        else:
            data = np.asarray(data, dtype=np.uint64)
            if data.shape != (_n_words(length),):
                raise ValueError("word count does not match length")
            self.data = data & _pad_mask(length)

    @classmethod
    def from_bits(cls, bits) -> "BitVector":
        bits = list(bits)
        v = cls(len(bits))
        for i, b in enumerate(bits):
            if b & 1:
                v.data[i // _WORD] |= np.uint64(1) << np.uint64(i % _WORD)
        return v

    def copy(self) -> "BitVector":
        return BitVector(self.len, self.data.copy())

    def get(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(f"bit index {i} out of range for length {self.len}")
        return int((self.data[i // _WORD] >> np.uint64(i % _WORD)) & np.uint64(1))

    def set(self, i: int, value: int) -> None:
        if not 0 <= i < self.len:
            raise IndexError(f"bit index {i} out of range for length {self.len}")
        bit = np.uint64(1) << np.uint64(i % _WORD)
        if value & 1:
            self.data[i // _WORD] |= bit
        else:
            self.data[i // _WORD] &= ~bit

    def to_bits(self) -> list[int]:
        return [self.get(i) for i in range(self.len)]

    def popcount(self) -> int:
        return int(np.bitwise_count(self.data).sum())

    def is_zero(self) -> bool:
        return not self.data.any()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.len != other.len:
            raise ValueError("length mismatch")
        return BitVector(self.len, self.data ^ other.data)

    def __ixor__(self, other: "BitVector") -> "BitVector":
        if self.len != other.len:
            raise ValueError("length mismatch")
        self.data ^= other.data
        return self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.len == other.len
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.len, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({''.join(str(b) for b in self.to_bits())})"


class BitMatrix:
    """rows x cols matrix over GF(2), each row bit-packed like a BitVector."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        words = _n_words(cols)
        if data is None:
            self.data = np.zeros((rows, words), dtype=np.uint64)
        else:
            data = np.asarray(data, dtype=np.uint64)
            if data.shape != (rows, words):
                raise ValueError("word shape does not match dimensions")
            self.data = data & _pad_mask(cols)[None, :]

    @classmethod
    def from_rows(cls, rows_bits, cols: int | None = None) -> "BitMatrix":
        rows_bits = [list(r) for r in rows_bits]
        if cols is None:
            cols = len(rows_bits[0]) if rows_bits else 0
        m = cls(len(rows_bits), cols)
        for i, row in enumerate(rows_bits):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, b in enumerate(row):
                if b & 1:
                    m.data[i, j // _WORD] |= np.uint64(1) << np.uint64(j % _WORD)
        return m

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        for i in range(n):
            m.data[i, i // _WORD] |= np.uint64(1) << np.uint64(i % _WORD)
        return m

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.data.copy())

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return int((self.data[i, j // _WORD] >> np.uint64(j % _WORD)) & np.uint64(1))

    def set(self, i: int, j: int, value: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        bit = np.uint64(1) << np.uint64(j % _WORD)
        if value & 1:
            self.data[i, j // _WORD] |= bit
        else:
            self.data[i, j // _WORD] &= ~bit

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i].copy())

    def to_lists(self) -> list[list[int]]:
        return [[self.get(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def mat_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product over GF(2)."""
        if v.len != self.cols:
            raise ValueError("dimension mismatch")
        prod = np.bitwise_count(self.data & v.data[None, :]).sum(axis=1) & 1
        return BitVector.from_bits(prod.tolist())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        body = "\n".join("".join(str(b) for b in row) for row in self.to_lists())
        return f"BitMatrix({self.rows}x{self.cols})\n{body}"


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form over GF(2) plus the pivot column list.

    Pivot search scans each column top-down for the first set bit
    (deterministic output regardless of input row order).
    """
    r = m.copy()
    pivots: list[int] = []
    rank = 0
    for col in range(r.cols):
        w, b = col // _WORD, np.uint64(col % _WORD)
        colbits = (r.data[:, w] >> b) & np.uint64(1)
        hits = np.nonzero(colbits[rank:])[0]
        if hits.size == 0:
            continue
        pivot = rank + int(hits[0])
        if pivot != rank:
            r.data[[rank, pivot]] = r.data[[pivot, rank]]
            colbits = (r.data[:, w] >> b) & np.uint64(1)
        elim = np.nonzero(colbits)[0]
        elim = elim[elim != rank]
        if elim.size:
            r.data[elim] ^= r.data[rank]
        pivots.append(col)
        rank += 1
        if rank == r.rows:
            break
    return r, pivots


def rank(m: BitMatrix) -> int:
    """GF(2) row rank."""
    return len(row_reduce(m)[1])


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of {v : M v = 0 over GF(2)}; size is cols - rank(M)."""
    rref, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        v = BitVector(m.cols)
        v.set(free, 1)
        for prow, pcol in enumerate(pivots):
            if rref.get(prow, free):
                v.set(pcol, 1)
        basis.append(v)
    return basis


def in_rowspace(m: BitMatrix, v: BitVector) -> bool:
    """True iff v is a GF(2) combination of the rows of m."""
    if v.len != m.cols:
        raise ValueError(f"vector length {v.len} != matrix cols {m.cols}")
    rref, pivots = row_reduce(m)
    return _reduce_against(rref, pivots, v).is_zero()


def _reduce_against(rref: BitMatrix, pivots: list[int], v: BitVector) -> BitVector:
    """Reduce v against rows of an RREF matrix; zero result means membership."""
    r = v.copy()
    for prow, pcol in enumerate(pivots):
        if r.get(pcol):
            r.data ^= rref.data[prow]
    return r


class RowSpace:
    """Precomputed RREF wrapper for repeated membership tests."""

    def __init__(self, m: BitMatrix):
        self.cols = m.cols
        self.rref, self.pivots = row_reduce(m)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, v: BitVector) -> bool:
        if v.len != self.cols:
            raise ValueError("dimension mismatch")
        return _reduce_against(self.rref, self.pivots, v).is_zero()
