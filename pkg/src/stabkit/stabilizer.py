"""Stabilizer-code engine: validation, syndromes, logical operators,
distance search, and lookup-table decoding.

Membership in the stabilizer group is tested over GF(2) on the parity
check rowspace, ignoring phases: all catalog codes have +1-phase
generators, and residual classification only needs membership up to phase.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import gf2, pauli
from .gf2 import BitMatrix, BitVector
from .pauli import PauliWord


class Residual(Enum):
    STABILIZER = "Stabilizer"
    LOGICAL = "Logical"
    DETECTABLE = "Detectable"


@dataclass(frozen=True)
class Syndrome:
    """Anticommutation pattern against the generator list; bit i belongs to
    generator i and is printed leftmost-first."""

    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def is_zero(self) -> bool:
        return not any(self.bits)

    @classmethod
    def from_string(cls, text: str) -> "Syndrome":
        if not all(c in "01" for c in text):
            raise ValueError(f"bad syndrome string {text!r}")
        return cls(tuple(int(c) for c in text))


@dataclass(frozen=True)
class LogicalOperators:
    """One (X-like, Z-like) pair per logical qubit."""

    pairs: tuple[tuple[PauliWord, PauliWord], ...]

    def violations(self, code: "StabilizerCode") -> list[str]:
        out = []
        rs = code.rowspace()
        flat = [(f"X{i}", x) for i, (x, _) in enumerate(self.pairs)]
        flat += [(f"Z{i}", z) for i, (_, z) in enumerate(self.pairs)]
        for name, w in flat:
            for gi, g in enumerate(code.generators):
                if not pauli.commutes(w, g):
                    out.append(f"{name} anticommutes with generator {gi}")
            if rs.contains(w.symplectic()):
                out.append(f"{name} is a stabilizer element")
        for i, (xi, zi) in enumerate(self.pairs):
            if pauli.commutes(xi, zi):
                out.append(f"pair {i}: X{i} and Z{i} commute")
            for j, (xj, zj) in enumerate(self.pairs):
                if i == j:
                    continue
                if not pauli.commutes(xi, zj):
                    out.append(f"X{i} anticommutes with Z{j}")
                if not pauli.commutes(xi, xj):
                    out.append(f"X{i} anticommutes with X{j}")
                if not pauli.commutes(zi, zj):
                    out.append(f"Z{i} anticommutes with Z{j}")
        return out


class StabilizerCode:
    """n physical qubits with an ordered, independent, commuting generator
    list; the parity check matrix is the (X|Z) image of the generators."""

    def __init__(self, name: str, generators: list[PauliWord]):
        if not generators:
            raise ValueError("need at least one generator")
        n = generators[0].n
        if any(g.n != n for g in generators):
            raise ValueError("generators act on different qubit counts")
        self.name = name
        self.n = n
        self.generators = [g.copy() for g in generators]
        self.parity_check = BitMatrix(len(generators), 2 * n)
        for i, g in enumerate(generators):
            v = g.symplectic()
            self.parity_check.data[i] = v.data
        self._rowspace: gf2.RowSpace | None = None

    @classmethod
    def from_strings(cls, name: str, strings: list[str]) -> "StabilizerCode":
        n = len(strings[0].lstrip("+-i"))
        words = [pauli.parse(s, n) for s in strings]
        return cls(name, words)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def num_logical_qubits(self) -> int:
        return self.n - self.num_generators

    def rowspace(self) -> gf2.RowSpace:
        if self._rowspace is None:
            self._rowspace = gf2.RowSpace(self.parity_check)
        return self._rowspace

    def generator_strings(self) -> list[str]:
        return [pauli.format_word(g) for g in self.generators]

    def __repr__(self) -> str:
        return f"StabilizerCode({self.name!r}, n={self.n}, l={self.num_generators})"


def validate(code: StabilizerCode) -> list[str]:
    """Empty list iff the code satisfies all structural invariants."""
    violations = []
    gens = code.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not pauli.commutes(gens[i], gens[j]):
                violations.append(f"pair ({i},{j}) anticommutes")
    r = gf2.rank(code.parity_check)
    if r < len(gens):
        violations.append(f"rank {r} < {len(gens)}: generators dependent")
    for i, g in enumerate(gens):
        if g.phase != 0:
            violations.append(f"generator {i} has phase i^{g.phase} != +1")
    if code.n < len(gens):
        violations.append(f"more generators ({len(gens)}) than qubits ({code.n})")
    return violations


def syndrome(code: StabilizerCode, error: PauliWord) -> Syndrome:
    """Bit i = symplectic product of generator i with the error."""
    if error.n != code.n:
        raise ValueError(f"error acts on {error.n} qubits, code has {code.n}")
    return Syndrome(tuple(pauli.symplectic_product(g, error) for g in code.generators))


def normalizer_kernel(code: StabilizerCode) -> list[BitVector]:
    """Basis (size 2n - l) of the symplectic-orthogonal complement: the
    images of all Pauli words commuting with every generator.

    A word g is in the normalizer iff C * Omega * phi(g)^T = 0, and
    multiplying by the block form Omega swaps the X and Z halves of each
    parity check row.
    """
    n = code.n
    swapped = BitMatrix(code.num_generators, 2 * n)
    for i, g in enumerate(code.generators):
        v = BitVector(2 * n)
        for q in range(n):
            if g.z_bits.get(q):
                v.set(q, 1)
            if g.x_bits.get(q):
                v.set(n + q, 1)
        swapped.data[i] = v.data
    return gf2.kernel_basis(swapped)


def word_from_symplectic(v: BitVector) -> PauliWord:
    """Phase-free word whose (X|Z) image is v."""
    if v.len % 2:
        raise ValueError("symplectic vector must have even length")
    n = v.len // 2
    x = BitVector(n)
    z = BitVector(n)
    for q in range(n):
        x.set(q, v.get(q))
        z.set(q, v.get(n + q))
    return PauliWord(n, x, z, 0)


def _symplectic_pairs(code: StabilizerCode, candidates: list[BitVector]) -> list[tuple[PauliWord, PauliWord]]:
    """Symplectic Gram-Schmidt: extract k hyperbolic pairs from normalizer
    vectors reduced modulo the stabilizer rowspace."""
    rs = code.rowspace()
    pool = []
    for v in candidates:
        r = gf2._reduce_against(rs.rref, rs.pivots, v)
        if not r.is_zero():
            pool.append(r)
    # deduplicate to an independent set
    if pool:
        m = BitMatrix(len(pool), 2 * code.n)
        for i, v in enumerate(pool):
            m.data[i] = v.data
        rref, pivots = gf2.row_reduce(m)
        pool = [rref.row(i) for i in range(len(pivots))]
    pairs = []
    vectors = pool
    while vectors:
        a = vectors[0]
        rest = vectors[1:]
        b = None
        for v in rest:
            if _sym_form(a, v):
                b = v
                break
        if b is None:
            raise AssertionError("normalizer quotient is not symplectic")
        new_rest = []
        for v in rest:
            if v is b:
                continue
            w = v.copy()
            if _sym_form(w, b):
                w ^= a
            if _sym_form(w, a):
                w ^= b
            if not w.is_zero():
                new_rest.append(w)
        pairs.append((word_from_symplectic(a), word_from_symplectic(b)))
        vectors = new_rest
    return pairs


def _sym_form(u: BitVector, v: BitVector) -> int:
    n = u.len // 2
    acc = 0
    for q in range(n):
        acc ^= u.get(q) & v.get(n + q)
        acc ^= u.get(n + q) & v.get(q)
    return acc


def _is_css(code: StabilizerCode) -> bool:
    for g in code.generators:
        if not (g.x_bits.is_zero() or g.z_bits.is_zero()):
            return False
    return True


def logical_operators(code: StabilizerCode) -> LogicalOperators:
    """k anticommuting (X-like, Z-like) pairs from the normalizer modulo the
    stabilizer. CSS codes get pure-X / pure-Z representatives; other codes
    fall back to generic symplectic Gram-Schmidt."""
    k = code.num_logical_qubits()
    if k < 1:
        raise ValueError("code has no logical qubits")
    if _is_css(code):
        pairs = _css_logicals(code)
        if pairs is not None:
            return LogicalOperators(tuple(pairs))
    kern = normalizer_kernel(code)
    return LogicalOperators(tuple(_symplectic_pairs(code, kern)))


def _css_logicals(code: StabilizerCode) -> list[tuple[PauliWord, PauliWord]] | None:
    n = code.n
    x_rows = [g.x_bits for g in code.generators if g.z_bits.is_zero() and not g.x_bits.is_zero()]
    z_rows = [g.z_bits for g in code.generators if g.x_bits.is_zero() and not g.z_bits.is_zero()]
    hx = BitMatrix(len(x_rows), n)
    for i, r in enumerate(x_rows):
        hx.data[i] = r.data
    hz = BitMatrix(len(z_rows), n)
    for i, r in enumerate(z_rows):
        hz.data[i] = r.data
    # pure-X logicals: commute with Z checks, not generated by X checks
    x_cands = _quotient_basis(gf2.kernel_basis(hz), hx, n)
    z_cands = _quotient_basis(gf2.kernel_basis(hx), hz, n)
    k = code.num_logical_qubits()
    if len(x_cands) != k or len(z_cands) != k:
        return None
    pairs = []
    xs, zs = list(x_cands), list(z_cands)
    while xs:
        a = xs.pop(0)
        match = next((j for j, zv in enumerate(zs) if _dot(a, zv)), None)
        if match is None:
            return None
        b = zs.pop(match)
        # make the remaining candidates commute with the extracted pair
        xs = [x ^ a if _dot(x, b) else x for x in xs]
        zs = [z ^ b if _dot(a, z) else z for z in zs]
        pairs.append((
            PauliWord(n, a.copy(), BitVector(n), 0),
            PauliWord(n, BitVector(n), b.copy(), 0),
        ))
    return pairs


def _dot(u: BitVector, v: BitVector) -> int:
    return int(np.bitwise_count(u.data & v.data).sum()) & 1


def _quotient_basis(kernel: list[BitVector], checks: BitMatrix, n: int) -> list[BitVector]:
    """Independent kernel vectors modulo the rowspace of `checks`."""
    rs = gf2.RowSpace(checks)
    reduced = []
    for v in kernel:
        r = gf2._reduce_against(rs.rref, rs.pivots, v)
        if not r.is_zero():
            reduced.append(r)
    if not reduced:
        return []
    m = BitMatrix(len(reduced), n)
    for i, v in enumerate(reduced):
        m.data[i] = v.data
    rref, pivots = gf2.row_reduce(m)
    return [rref.row(i) for i in range(len(pivots))]


def enumerate_words(n: int, min_weight: int, max_weight: int):
    """Phase-free words by ascending weight, then ascending qubit tuple,
    then letter order X < Y < Z. This order is part of the decoding
    contract (first word seen for a syndrome wins)."""
    for w in range(min_weight, max_weight + 1):
        if w == 0:
            yield PauliWord.identity(n)
            continue
        for qubits in itertools.combinations(range(n), w):
            for letters in itertools.product("XYZ", repeat=w):
                word = PauliWord.identity(n)
                for q, ch in zip(qubits, letters):
                    xb = 1 if ch in "XY" else 0
                    zb = 1 if ch in "ZY" else 0
                    word.x_bits.set(q, xb)
                    word.z_bits.set(q, zb)
                yield word


def distance(code: StabilizerCode, max_search_weight: int = 4) -> int | None:
    """Smallest weight of a word in N(S) \\ S, by exhaustive enumeration up
    to `max_search_weight`; None when the search cap is exceeded."""
    rs = code.rowspace()
    for word in enumerate_words(code.n, 1, max_search_weight):
        if any(pauli.symplectic_product(g, word) for g in code.generators):
            continue
        if not rs.contains(word.symplectic()):
            return pauli.weight(word)
    return None


@dataclass
class SyndromeTable:
    """Minimal-weight correction per syndrome, built in enumeration order."""

    entries: dict[Syndrome, PauliWord]
    max_weight: int

    def correction(self, s: Syndrome) -> PauliWord | None:
        return self.entries.get(s)

    def __len__(self) -> int:
        return len(self.entries)


def build_syndrome_table(code: StabilizerCode, max_weight: int) -> SyndromeTable:
    """Enumerate errors by ascending weight (identity first, claiming the
    zero syndrome); the first word producing a syndrome becomes its
    correction."""
    entries: dict[Syndrome, PauliWord] = {}
    full = 1 << code.num_generators
    for word in enumerate_words(code.n, 0, max_weight):
        s = syndrome(code, word)
        if s not in entries:
            entries[s] = word
            if len(entries) == full:
                break
    return SyndromeTable(entries, max_weight)


def residual_class(code: StabilizerCode, residual: PauliWord) -> Residual:
    """Classify a residual (correction composed with the true error):
    Detectable if any generator anticommutes, else Stabilizer if its image
    lies in the parity-check rowspace, else Logical. Phase is ignored."""
    if residual.n != code.n:
        raise ValueError("residual size mismatch")
    if any(pauli.symplectic_product(g, residual) for g in code.generators):
        return Residual.DETECTABLE
    if code.rowspace().contains(residual.symplectic()):
        return Residual.STABILIZER
    return Residual.LOGICAL


def export_code(code: StabilizerCode, table: SyndromeTable | None = None,
                logicals: LogicalOperators | None = None,
                dist: int | None = None) -> dict:
    """JSON-friendly description of a code."""
    doc = {
        "name": code.name,
        "n": code.n,
        "k": code.num_logical_qubits(),
        "generators": code.generator_strings(),
    }
    if logicals is not None:
        doc["logical_x"] = [pauli.format_word(x) for x, _ in logicals.pairs]
        doc["logical_z"] = [pauli.format_word(z) for _, z in logicals.pairs]
    if dist is not None:
        doc["distance"] = dist
    if table is not None:
        doc["table"] = [
            {"syndrome": str(s), "correction": pauli.format_word(w)}
            for s, w in sorted(table.entries.items(), key=lambda kv: kv[0].bits)
        ]
    return doc
