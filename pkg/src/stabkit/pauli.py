"""n-qubit Pauli group arithmetic with phase tracking.

A word is i^phase * L_0 ... L_{n-1} with letters L determined per qubit by
an (x, z) bit pair: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). The product rule
follows the convention X*Z = -i*Y (equivalently Y = i*X*Z), so all phase
bookkeeping reduces to one per-qubit table.
"""
from __future__ import annotations

import re

import numpy as np

from .gf2 import BitVector

_LETTERS = "IXYZ"
_XZ_OF_LETTER = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_LETTER_OF_XZ = {v: k for k, v in _XZ_OF_LETTER.items()}

# Phase exponent (power of i) contributed by a single-qubit product a*b,
# indexed by (xa, za, xb, zb). Cyclic products XY, YZ, ZX pick up +i, the
# reversed ones -i (exponent 3), matching XZ = -iY.
_PHASE_TABLE: dict[tuple[int, int, int, int], int] = {}
for _a in _LETTERS:
    for _b in _LETTERS:
        if _a == "I" or _b == "I" or _a == _b:
            _t = 0
        elif (_a, _b) in (("X", "Y"), ("Y", "Z"), ("Z", "X")):
            _t = 1
        else:
            _t = 3
        _PHASE_TABLE[_XZ_OF_LETTER[_a] + _XZ_OF_LETTER[_b]] = _t

_PHASE_PREFIXES = {"": 0, "i": 1, "-": 2, "-i": 3}
_PREFIX_OF_PHASE = {0: "", 1: "i", 2: "-", 3: "-i"}

_PRODUCT_TERM = re.compile(r"([XYZ])(\d+)")


class PauliWord:
    """A phased Pauli operator on n qubits: i^phase * (letter string)."""

    __slots__ = ("n", "x_bits", "z_bits", "phase")

    def __init__(self, n: int, x_bits: BitVector, z_bits: BitVector, phase: int = 0):
        if x_bits.len != n or z_bits.len != n:
            raise ValueError("bit vector length must equal qubit count")
        self.n = n
        self.x_bits = x_bits
        self.z_bits = z_bits
        self.phase = phase % 4

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(n, BitVector(n), BitVector(n), 0)

    @classmethod
    def from_letters(cls, letters: str, phase: int = 0) -> "PauliWord":
        n = len(letters)
        x = BitVector(n)
        z = BitVector(n)
        for i, ch in enumerate(letters):
            try:
                xb, zb = _XZ_OF_LETTER[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r}") from None
            x.set(i, xb)
            z.set(i, zb)
        return cls(n, x, z, phase)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliWord":
        """One non-identity letter at `qubit` (0-based), identity elsewhere."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        word = cls.identity(n)
        xb, zb = _XZ_OF_LETTER[letter]
        word.x_bits.set(qubit, xb)
        word.z_bits.set(qubit, zb)
        return word

    def letter(self, qubit: int) -> str:
        return _LETTER_OF_XZ[(self.x_bits.get(qubit), self.z_bits.get(qubit))]

    def letters(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))

    def support(self) -> list[int]:
        """Qubits carrying a non-identity letter."""
        return [q for q in range(self.n) if self.x_bits.get(q) or self.z_bits.get(q)]

    def symplectic(self) -> BitVector:
        """Image (x_1..x_n, z_1..z_n) in Z2^{2n}; independent of phase."""
        v = BitVector(2 * self.n)
        for i in range(self.n):
            if self.x_bits.get(i):
                v.set(i, 1)
            if self.z_bits.get(i):
                v.set(self.n + i, 1)
        return v

    def copy(self) -> "PauliWord":
        return PauliWord(self.n, self.x_bits.copy(), self.z_bits.copy(), self.phase)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliWord)
            and self.n == other.n
            and self.phase == other.phase
            and self.x_bits == other.x_bits
            and self.z_bits == other.z_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.phase, self.x_bits, self.z_bits))

    def __repr__(self) -> str:
        return f"PauliWord({format_word(self)!r})"


def multiply(a: PauliWord, b: PauliWord) -> PauliWord:
    """Exact group product a*b, including the accumulated phase."""
    if a.n != b.n:
        raise ValueError(f"qubit count mismatch: {a.n} != {b.n}")
    phase = a.phase + b.phase
    for q in range(a.n):
        key = (a.x_bits.get(q), a.z_bits.get(q), b.x_bits.get(q), b.z_bits.get(q))
        phase += _PHASE_TABLE[key]
    return PauliWord(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits, phase % 4)


def inverse(a: PauliWord) -> PauliWord:
    """Group inverse: the letter part squares to +1 (Y is stored phase-free),
    so only the prefactor i^phase conjugates."""
    return PauliWord(a.n, a.x_bits.copy(), a.z_bits.copy(), (-a.phase) % 4)


def symplectic_product(a: PauliWord, b: PauliWord) -> int:
    """GF(2) form x_a.z_b + z_a.x_b; 1 iff a and b anticommute."""
    if a.n != b.n:
        raise ValueError(f"qubit count mismatch: {a.n} != {b.n}")
    acc = np.bitwise_count(a.x_bits.data & b.z_bits.data).sum()
    acc += np.bitwise_count(a.z_bits.data & b.x_bits.data).sum()
    return int(acc) & 1


def commutes(a: PauliWord, b: PauliWord) -> bool:
    """True iff the operators commute (vanishing symplectic product)."""
    return symplectic_product(a, b) == 0


def weight(a: PauliWord) -> int:
    """Number of qubits carrying a non-identity letter."""
    return int(np.bitwise_count(a.x_bits.data | a.z_bits.data).sum())


def parse(text: str, n: int) -> PauliWord:
    """Parse a letter string ("XZZXI", optional +/-/i/-i prefix) or a
    1-based product form ("X1Z3") into an n-qubit word."""
    s = text.strip()
    phase = 0
    # A leading sign or i is a phase prefix only when followed by a letter.
    for cand in ("-i", "+i", "-", "+", "i"):
        if s.startswith(cand):
            rest = s[len(cand):]
            if rest and (rest[0] in _LETTERS):
                phase = _PHASE_PREFIXES[cand.lstrip("+") or ""]
                s = rest
            break
    if re.fullmatch(r"[IXYZ]+", s):
        if len(s) != n:
            raise ValueError(f"letter string length {len(s)} != n={n}")
        return PauliWord.from_letters(s, phase)
    if re.fullmatch(r"(?:[XYZ]\d+)+", s):
        word = PauliWord.identity(n)
        word.phase = phase
        for letter, idx in _PRODUCT_TERM.findall(s):
            q = int(idx)
            if not 1 <= q <= n:
                raise ValueError(f"qubit index {q} out of range 1..{n}")
            word = multiply(word, PauliWord.single(n, q - 1, letter))
        return word
    raise ValueError(f"cannot parse Pauli word {text!r}")


def format_word(a: PauliWord) -> str:
    """Canonical text form: optional phase prefix plus the letter string."""
    return _PREFIX_OF_PHASE[a.phase] + a.letters()


def format_product(a: PauliWord) -> str:
    """1-based product form like "X1Z3"; identity renders as "I"."""
    terms = []
    for q in range(a.n):
        ch = a.letter(q)
        if ch != "I":
            terms.append(f"{ch}{q + 1}")
    body = "".join(terms) if terms else "I"
    return _PREFIX_OF_PHASE[a.phase] + body
