"""Dense state-vector simulator used as the independent correctness oracle.

Convention: qubit 0 is the most significant bit of the amplitude index, so
the ket string |q0 q1 ...> reads left to right. Equality of states is always
checked through fidelity, never amplitude-wise, to stay global-phase blind.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .pauli import PauliWord
from .stabilizer import Syndrome

MAX_QUBITS = 20

_SQ2 = 1.0 / math.sqrt(2.0)

GATE_MATRICES = {
    "i": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "h": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "s": np.array([[1, 0], [0, 1j]], dtype=complex),
    "sdg": np.array([[1, 0], [0, -1j]], dtype=complex),
}


def rotation_matrix(axis: str, theta: float) -> np.ndarray:
    """exp(-i*theta*P/2) for P in {X, Y, Z}."""
    p = GATE_MATRICES[axis]
    return math.cos(theta / 2) * np.eye(2) - 1j * math.sin(theta / 2) * p


def axis_rotation_matrix(nx: float, ny: float, nz: float, theta: float) -> np.ndarray:
    """Rotation about an arbitrary Bloch axis (nx, ny, nz)."""
    p = nx * GATE_MATRICES["x"] + ny * GATE_MATRICES["y"] + nz * GATE_MATRICES["z"]
    return math.cos(theta / 2) * np.eye(2) - 1j * math.sin(theta / 2) * p


def pauli_word_matrix(word: PauliWord) -> np.ndarray:
    """Dense 2^n x 2^n matrix of a PauliWord, including its phase."""
    if word.n > 12:
        raise ValueError("dense Pauli matrix limited to 12 qubits")
    m = np.array([[1]], dtype=complex)
    for q in range(word.n):
        m = np.kron(m, GATE_MATRICES[word.letter(q).lower()])
    return (1j ** word.phase) * m


@dataclass(frozen=True)
class Op:
    kind: str
    targets: tuple[int, ...] = ()
    controls: tuple[int, ...] = ()
    angle: float | None = None
    pauli: PauliWord | None = None
    classical_bit: int | None = None
    # condition = (classical bit indices, required integer value); the bit
    # at position k of the tuple is the 2^k digit.
    condition: tuple[tuple[int, ...], int] | None = None


class Circuit:
    """Ordered gate list on n qubits and a flat classical bit array."""

    def __init__(self, n_qubits: int, n_classical: int = 0):
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        self.n_qubits = n_qubits
        self.n_classical = n_classical
        self.ops: list[Op] = []

    def _check(self, *qubits: int) -> None:
        for q in qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"qubit {q} out of range for n={self.n_qubits}")

    def _add(self, op: Op) -> "Circuit":
        self._check(*op.targets, *op.controls)
        self.ops.append(op)
        return self

    def h(self, q, condition=None):
        return self._add(Op("h", (q,), condition=condition))

    def x(self, q, condition=None):
        return self._add(Op("x", (q,), condition=condition))

    def y(self, q, condition=None):
        return self._add(Op("y", (q,), condition=condition))

    def z(self, q, condition=None):
        return self._add(Op("z", (q,), condition=condition))

    def s(self, q, condition=None):
        return self._add(Op("s", (q,), condition=condition))

    def sdg(self, q, condition=None):
        return self._add(Op("sdg", (q,), condition=condition))

    def rx(self, theta, q, condition=None):
        return self._add(Op("rx", (q,), angle=float(theta), condition=condition))

    def ry(self, theta, q, condition=None):
        return self._add(Op("ry", (q,), angle=float(theta), condition=condition))

    def rz(self, theta, q, condition=None):
        return self._add(Op("rz", (q,), angle=float(theta), condition=condition))

    def cx(self, control, target, condition=None):
        return self._add(Op("cx", (target,), (control,), condition=condition))

    def cz(self, control, target, condition=None):
        return self._add(Op("cz", (target,), (control,), condition=condition))

    def swap(self, a, b, condition=None):
        return self._add(Op("swap", (a, b), condition=condition))

    def cpauli(self, control, word: PauliWord, targets=None, condition=None):
        """Controlled Pauli word; `targets` defaults to qubits 0..word.n-1."""
        if targets is None:
            targets = tuple(range(word.n))
        targets = tuple(targets)
        if len(targets) != word.n:
            raise ValueError("target count must equal word size")
        if control in targets:
            raise ValueError("control qubit cannot be a target")
        return self._add(Op("cpauli", targets, (control,), pauli=word, condition=condition))

    def measure(self, q, classical_bit):
        if classical_bit is None or not 0 <= classical_bit < self.n_classical:
            raise ValueError(f"classical bit {classical_bit} out of range")
        return self._add(Op("measure", (q,), classical_bit=classical_bit))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Circuit)
            and self.n_qubits == other.n_qubits
            and self.n_classical == other.n_classical
            and self.ops == other.ops
        )

    def __repr__(self) -> str:
        return f"Circuit(n={self.n_qubits}, ops={len(self.ops)})"


class StateVector:
    """2^n complex amplitudes, kept normalized to 1 within 1e-10."""

    def __init__(self, n: int, amps: np.ndarray | None = None):
        if n < 1:
            raise ValueError("need at least one qubit")
        if n > MAX_QUBITS:
            raise ValueError(f"refusing n={n} qubits (> {MAX_QUBITS}); the oracle is desk-scale")
        self.n = n
        if amps is None:
            self.amps = np.zeros(1 << n, dtype=complex)
            self.amps[0] = 1.0
        else:
            amps = np.asarray(amps, dtype=complex)
            if amps.shape != (1 << n,):
                raise ValueError("amplitude count must be 2^n")
            norm = np.linalg.norm(amps)
            if abs(norm - 1.0) > 1e-8:
                raise ValueError(f"state not normalized (norm {norm})")
            self.amps = amps.copy()

    @classmethod
    def zero(cls, n: int) -> "StateVector":
        return cls(n)

    @classmethod
    def from_amplitudes(cls, amps) -> "StateVector":
        amps = np.asarray(amps, dtype=complex)
        n = int(round(math.log2(amps.size)))
        if 1 << n != amps.size:
            raise ValueError("amplitude count must be a power of two")
        return cls(n, amps)

    @classmethod
    def basis(cls, n: int, index: int) -> "StateVector":
        s = cls(n)
        s.amps[0] = 0.0
        s.amps[index] = 1.0
        return s

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def __repr__(self) -> str:
        return f"StateVector(n={self.n})"


@dataclass
class MeasurementRecord:
    """Outcomes of the measurements executed by one apply() call."""

    bits: dict[int, int] = field(default_factory=dict)
    outcomes: list[int] = field(default_factory=list)
    probability: float = 1.0  # joint Born probability of the taken branch


def _view(state: StateVector) -> np.ndarray:
    return state.amps.reshape([2] * state.n)


def _apply_1q(state: StateVector, mat: np.ndarray, q: int) -> None:
    a = state.amps.reshape(1 << q, 2, -1)
    a0 = a[:, 0, :].copy()
    a1 = a[:, 1, :].copy()
    a[:, 0, :] = mat[0, 0] * a0 + mat[0, 1] * a1
    a[:, 1, :] = mat[1, 0] * a0 + mat[1, 1] * a1


def _slab(view: np.ndarray, n: int, **axis_values: int):
    sl: list = [slice(None)] * n
    for ax, val in axis_values.items():
        sl[int(ax[1:])] = val
    return tuple(sl)


def _apply_pauli_slab(sub: np.ndarray, word: PauliWord, axes: list[int]) -> np.ndarray:
    """Apply a PauliWord to an ndarray view; axes[q] is the array axis of qubit q."""
    out = sub
    for q in range(word.n):
        letter = word.letter(q)
        if letter == "I":
            continue
        ax = axes[q]
        if letter in ("X", "Y"):
            out = np.flip(out, axis=ax)
        if letter in ("Z", "Y"):
            shape = [1] * out.ndim
            shape[ax] = 2
            sign = np.array([1, -1], dtype=complex).reshape(shape)
            if letter == "Y":
                # after the flip, amplitude entering index 0 is scaled by -i
                sign = np.array([-1j, 1j], dtype=complex).reshape(shape)
            out = out * sign
    return out * (1j ** word.phase)


def apply_pauli(state: StateVector, word: PauliWord) -> None:
    """In-place action of a PauliWord on the full register."""
    if word.n != state.n:
        raise ValueError("qubit count mismatch")
    v = _view(state)
    state.amps = _apply_pauli_slab(v, word, list(range(state.n))).reshape(-1)


def _measure(state: StateVector, q: int, rng, forced: int | None) -> tuple[int, float]:
    v = _view(state)
    sl0 = _slab(v, state.n, **{f"a{q}": 0})
    p0 = float(np.sum(np.abs(v[sl0]) ** 2))
    p0 = min(max(p0, 0.0), 1.0)
    if forced is not None:
        outcome = int(forced)
    elif rng is not None:
        outcome = 0 if rng.random() < p0 else 1
    elif p0 > 1.0 - 1e-9:
        outcome = 0
    elif p0 < 1e-9:
        outcome = 1
    else:
        raise ValueError(
            f"measurement outcome is random (P(0)={p0:.3g}); pass an rng or force a branch"
        )
    prob = p0 if outcome == 0 else 1.0 - p0
    if prob <= 1e-300:
        raise ValueError(f"postselected branch q{q}={outcome} has zero probability")
    other = _slab(v, state.n, **{f"a{q}": 1 - outcome})
    v[other] = 0.0
    state.amps /= math.sqrt(prob)
    return outcome, prob


def _condition_met(cond, bits: dict[int, int]) -> bool:
    if cond is None:
        return True
    idxs, value = cond
    acc = 0
    for k, b in enumerate(idxs):
        acc |= (bits.get(b, 0) & 1) << k
    return acc == value


def apply(
    state: StateVector,
    circuit: Circuit | Op,
    rng: np.random.Generator | None = None,
    forced_outcomes: list[int] | None = None,
) -> MeasurementRecord:
    """Run a circuit (or single op) in place; returns measurement record.

    `forced_outcomes` postselects measurement branches in program order,
    renormalizing and recording the joint branch probability.
    """
    ops = circuit.ops if isinstance(circuit, Circuit) else [circuit]
    if isinstance(circuit, Circuit) and circuit.n_qubits != state.n:
        raise ValueError("circuit/state qubit count mismatch")
    record = MeasurementRecord()
    forced_iter = iter(forced_outcomes) if forced_outcomes is not None else None
    for op in ops:
        if op.kind == "measure":
            forced = next(forced_iter, None) if forced_iter is not None else None
            outcome, prob = _measure(state, op.targets[0], rng, forced)
            record.outcomes.append(outcome)
            record.probability *= prob
            if op.classical_bit is not None:
                record.bits[op.classical_bit] = outcome
            continue
        if not _condition_met(op.condition, record.bits):
            continue
        _apply_unitary_op(state, op)
    if not record.outcomes:
        drift = abs(np.linalg.norm(state.amps) - 1.0)
        if drift > 1e-10:
            raise AssertionError(f"norm drifted by {drift}")
    return record


def _apply_unitary_op(state: StateVector, op: Op) -> None:
    n = state.n
    if op.kind in GATE_MATRICES and op.kind != "i":
        _apply_1q(state, GATE_MATRICES[op.kind], op.targets[0])
    elif op.kind in ("rx", "ry", "rz"):
        _apply_1q(state, rotation_matrix(op.kind[1], op.angle), op.targets[0])
    elif op.kind == "cx":
        v = _view(state)
        c, t = op.controls[0], op.targets[0]
        sl = _slab(v, n, **{f"a{c}": 1})
        t_ax = t - (1 if t > c else 0)
        v[sl] = np.flip(v[sl], axis=t_ax)
    elif op.kind == "cz":
        v = _view(state)
        c, t = op.controls[0], op.targets[0]
        sl = _slab(v, n, **{f"a{c}": 1, f"a{t}": 1})
        v[sl] *= -1.0
    elif op.kind == "swap":
        v = _view(state)
        a, b = op.targets
        sl01 = _slab(v, n, **{f"a{a}": 0, f"a{b}": 1})
        sl10 = _slab(v, n, **{f"a{a}": 1, f"a{b}": 0})
        tmp = v[sl01].copy()
        v[sl01] = v[sl10]
        v[sl10] = tmp
    elif op.kind == "cpauli":
        v = _view(state)
        c = op.controls[0]
        word = op.pauli
        sl = _slab(v, n, **{f"a{c}": 1})
        data_axes = [t - (1 if t > c else 0) for t in op.targets]
        v[sl] = _apply_pauli_slab(v[sl], word, data_axes)
    else:
        raise ValueError(f"unsupported op kind {op.kind!r}")


def apply_with_recycling(
    circuit: Circuit,
    rng: np.random.Generator | None = None,
    forced_outcomes: list[int] | None = None,
) -> tuple[MeasurementRecord, StateVector | None, list[int]]:
    """Simulate a circuit while keeping only live qubits in the register.

    Qubits enter the state lazily (fresh |0>) at first use and are dropped
    right after their final measurement, so wide ancilla-heavy circuits
    (e.g. code demos) run at their peak *live* width instead of their
    declared width. Returns (record, final state, live qubit ids); the
    state is None when everything has been measured away.
    """
    last_use: dict[int, int] = {}
    for i, op in enumerate(circuit.ops):
        for q in (*op.controls, *op.targets):
            last_use[q] = i
    order: list[int] = []
    state: StateVector | None = None
    record = MeasurementRecord()
    forced_iter = iter(forced_outcomes) if forced_outcomes is not None else None

    def ensure(qubits) -> None:
        nonlocal state
        for q in qubits:
            if q not in order:
                order.append(q)
                if state is None:
                    state = StateVector(1)
                else:
                    state = StateVector(
                        len(order), np.kron(state.amps, np.array([1.0, 0.0]))
                    )

    for i, op in enumerate(circuit.ops):
        qubits = (*op.controls, *op.targets)
        if op.kind == "measure":
            ensure(qubits)
            q = op.targets[0]
            ax = order.index(q)
            forced = next(forced_iter, None) if forced_iter is not None else None
            outcome, prob = _measure(state, ax, rng, forced)
            record.outcomes.append(outcome)
            record.probability *= prob
            if op.classical_bit is not None:
                record.bits[op.classical_bit] = outcome
            if last_use[q] == i:
                v = _view(state)
                kept = v[_slab(v, state.n, **{f"a{ax}": outcome})]
                order.pop(ax)
                state = (
                    StateVector(len(order), kept.reshape(-1)) if order else None
                )
            continue
        if not _condition_met(op.condition, record.bits):
            continue
        ensure(qubits)
        mapped = Op(
            kind=op.kind,
            targets=tuple(order.index(q) for q in op.targets),
            controls=tuple(order.index(q) for q in op.controls),
            angle=op.angle,
            pauli=op.pauli,
            classical_bit=op.classical_bit,
        )
        _apply_unitary_op(state, mapped)
    return record, state, order


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)


def expectation_pauli(state: StateVector, word: PauliWord) -> float:
    """Real expectation <psi|P|psi>; rejects non-Hermitian phases (i, -i)."""
    if word.n != state.n:
        raise ValueError("qubit count mismatch")
    if word.phase % 2 == 1:
        raise ValueError("word with phase i^odd is not Hermitian")
    tmp = state.copy()
    apply_pauli(tmp, word)
    val = complex(np.vdot(state.amps, tmp.amps))
    if abs(val.imag) > 1e-9:
        raise AssertionError(f"expectation has imaginary part {val.imag}")
    return float(val.real)


def swap_test_expectation(a: StateVector, b: StateVector) -> float:
    """Ancilla <Z> of the swap test between two n-qubit states.

    Simulates the literal circuit: H on an ancilla, controlled-SWAP of the
    two registers, H, then reads P(0) - P(1) off the ancilla. The
    controlled-SWAP is applied as the exact register-exchange permutation.
    Equals |<a|b>|^2.
    """
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    n = a.n
    total = 1 + 2 * n
    if total > MAX_QUBITS:
        raise ValueError("states too large for the swap test oracle")
    amps = np.kron(np.array([1.0, 0.0], dtype=complex), np.kron(a.amps, b.amps))
    full = StateVector(total, amps)
    apply(full, Op("h", (0,)))
    # controlled swap: on the ancilla=1 slab, exchange the two n-qubit registers
    v = full.amps.reshape(2, 1 << n, 1 << n)
    v[1] = v[1].T.copy()
    apply(full, Op("h", (0,)))
    p0 = float(np.sum(np.abs(full.amps.reshape(2, -1)[0]) ** 2))
    return p0 - (1.0 - p0)


@dataclass(frozen=True)
class ProjectorEncoder:
    """State-preparation encoder for codes without a gate-level circuit.

    Builds logical basis states by projecting |0...0> onto the stabilizer
    group's symmetric subspace with successive (1+g)/2 factors, then applying
    logical X words for each basis label.
    """

    n: int
    generators: tuple[PauliWord, ...]
    logical_x: tuple[PauliWord, ...]

    def logical_basis(self) -> list[StateVector]:
        if self.n > 14:
            raise ValueError("projector encoder limited to 14 physical qubits")
        base = np.zeros(1 << self.n, dtype=complex)
        base[0] = 1.0
        view_axes = list(range(self.n))
        for g in self.generators:
            acted = _apply_pauli_slab(base.reshape([2] * self.n), g, view_axes)
            base = base + acted.reshape(-1)
        zero_l = _normalized(base)
        states = []
        k = len(self.logical_x)
        for label in range(1 << k):
            s = StateVector(self.n, zero_l)
            for j in range(k):
                # logical qubit 0 is the most significant bit of the label
                if (label >> (k - 1 - j)) & 1:
                    apply_pauli(s, self.logical_x[j])
            states.append(s)
        return states


def _normalized(amps: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(amps)
    if norm < 1e-12:
        raise ValueError("projection annihilated the state")
    return amps / norm


class EncoderUnavailable(RuntimeError):
    """Raised when a bundle carries no usable encoder."""


def encode(bundle, input_state: StateVector) -> StateVector:
    """Map a k-qubit input to its logical n-qubit state via the bundle's
    encoder (gate circuit or projector preparation)."""
    enc = getattr(bundle, "encoder", bundle)
    if enc is None:
        raise EncoderUnavailable("bundle has no encoder (lattice too large)")
    if isinstance(enc, Circuit):
        n = enc.n_qubits
        k = input_state.n
        rest = np.zeros(1 << (n - k), dtype=complex)
        rest[0] = 1.0
        full = StateVector(n, np.kron(input_state.amps, rest))
        apply(full, enc)
        return full
    if isinstance(enc, ProjectorEncoder):
        basis = enc.logical_basis()
        k = input_state.n
        if len(basis) != 1 << k:
            raise ValueError("input size does not match logical qubit count")
        amps = np.zeros(1 << enc.n, dtype=complex)
        for label, amp in enumerate(input_state.amps):
            amps += amp * basis[label].amps
        return StateVector(enc.n, _normalized(amps))
    raise TypeError(f"unknown encoder type {type(enc).__name__}")


def hadamard_test_syndrome(
    state: StateVector,
    generators,
    rng: np.random.Generator | None = None,
    postselect: list[int] | None = None,
) -> tuple[Syndrome, StateVector]:
    """Extract the syndrome of `state` with one Hadamard test per generator.

    Ancillas are appended one at a time (generator-by-generator staging), so
    the peak register is n+1 qubits. For states of the form E|psi>_L with
    Pauli E, every measurement is deterministic.
    """
    generators = list(generators)
    work = state.copy()
    bits = []
    for i, g in enumerate(generators):
        if g.n != work.n:
            raise ValueError("generator size mismatch")
        amps = np.kron(work.amps, np.array([1.0, 0.0], dtype=complex))
        full = StateVector(work.n + 1, amps)
        anc = work.n
        circ = Circuit(work.n + 1, n_classical=1)
        circ.h(anc)
        circ.cpauli(anc, g)
        circ.h(anc)
        circ.measure(anc, 0)
        forced = [postselect[i]] if postselect is not None else None
        rec = apply(full, circ, rng=rng, forced_outcomes=forced)
        bits.append(rec.bits[0])
        # ancilla measured: drop it (it is in a product state)
        v = full.amps.reshape(-1, 2)
        col = v[:, rec.bits[0]]
        work = StateVector(work.n, _normalized(col))
    return Syndrome(tuple(bits)), work
