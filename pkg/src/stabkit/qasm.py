"""OpenQASM 3.0 emission for circuits and full code demos, plus the
minimal reader used by round-trip tests.

Output is deterministic: fixed register order, one statement per line,
angles rendered with repr (shortest round-trip form). Classical registers
compare little-endian in `if` conditions: bit 0 is the least significant.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import pauli
from .montecarlo import BitFlip, IndependentXZ, NoiseModel, PhaseFlip
from .stabilizer import build_syndrome_table
from .statevec import Circuit, Op

HEADER = 'OPENQASM 3.0;\ninclude "stdgates.inc";\n'

_SIMPLE_GATES = {"h", "x", "y", "z", "s", "sdg"}
_ROTATIONS = {"rx", "ry", "rz"}


def noise_angle(p: float) -> float:
    """Ry angle phi = arcsin(2p - 1), so that Ry(phi) H |0> is measured as
    |1> with probability exactly p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return math.asin(2.0 * p - 1.0)


@dataclass(frozen=True)
class Register:
    name: str
    start: int
    size: int

    def locate(self, flat: int) -> str | None:
        if self.start <= flat < self.start + self.size:
            return f"{self.name}[{flat - self.start}]"
        return None


@dataclass(frozen=True)
class QasmProgram:
    source: str
    qubit_registers: tuple[Register, ...]
    classical_registers: tuple[Register, ...]

    def __str__(self) -> str:
        return self.source


class _Namer:
    def __init__(self, registers: tuple[Register, ...], kind: str):
        self.registers = registers
        self.kind = kind

    def __call__(self, flat: int) -> str:
        for reg in self.registers:
            loc = reg.locate(flat)
            if loc is not None:
                return loc
        raise ValueError(f"{self.kind} index {flat} not covered by any register")

    def whole_register(self, bits: tuple[int, ...]) -> Register:
        for reg in self.registers:
            if bits == tuple(range(reg.start, reg.start + reg.size)):
                return reg
        raise ValueError(
            "conditions must test a whole classical register in order"
        )


def _format_angle(theta: float) -> str:
    return repr(float(theta))


def _emit_op(op: Op, qn: _Namer, cn: _Namer) -> list[str]:
    if op.kind in _SIMPLE_GATES:
        return [f"{op.kind} {qn(op.targets[0])};"]
    if op.kind in _ROTATIONS:
        return [f"{op.kind}({_format_angle(op.angle)}) {qn(op.targets[0])};"]
    if op.kind == "cx" or op.kind == "cz":
        return [f"{op.kind} {qn(op.controls[0])}, {qn(op.targets[0])};"]
    if op.kind == "swap":
        return [f"swap {qn(op.targets[0])}, {qn(op.targets[1])};"]
    if op.kind == "measure":
        return [f"{cn(op.classical_bit)} = measure {qn(op.targets[0])};"]
    if op.kind == "cpauli":
        # expand to controlled one-qubit gates; controlled-Y is conjugated
        # as S . CX . Sdg on the target (S X Sdg = Y)
        lines = []
        word = op.pauli
        c = op.controls[0]
        for k, t in enumerate(op.targets):
            letter = word.letter(k)
            if letter == "I":
                continue
            if letter == "X":
                lines.append(f"cx {qn(c)}, {qn(t)};")
            elif letter == "Z":
                lines.append(f"cz {qn(c)}, {qn(t)};")
            else:
                lines.append(f"sdg {qn(t)};")
                lines.append(f"cx {qn(c)}, {qn(t)};")
                lines.append(f"s {qn(t)};")
        return lines
    raise ValueError(f"cannot emit op kind {op.kind!r}")


def emit(
    circuit: Circuit,
    qubit_registers: tuple[Register, ...] | None = None,
    classical_registers: tuple[Register, ...] | None = None,
) -> QasmProgram:
    """Translate a circuit to OpenQASM 3.0 text, one statement per op.

    Classically-conditioned ops become single-line `if` blocks; the
    condition's bit tuple must be a whole declared register.
    """
    if qubit_registers is None:
        qubit_registers = (Register("q", 0, circuit.n_qubits),)
    if classical_registers is None:
        classical_registers = (
            (Register("c", 0, circuit.n_classical),) if circuit.n_classical else ()
        )
    qn = _Namer(qubit_registers, "qubit")
    cn = _Namer(classical_registers, "bit")
    lines = [HEADER.rstrip("\n")]
    for reg in qubit_registers:
        lines.append(f"qubit[{reg.size}] {reg.name};")
    for reg in classical_registers:
        lines.append(f"bit[{reg.size}] {reg.name};")
    for op in circuit.ops:
        body = _emit_op(op, qn, cn)
        if op.condition is not None:
            bits, value = op.condition
            reg = cn.whole_register(bits)
            inner = " ".join(body)
            lines.append(f"if ({reg.name} == {value}) {{ {inner} }}")
        else:
            lines.extend(body)
    return QasmProgram("\n".join(lines) + "\n", qubit_registers, classical_registers)


def _noise_coins(model: NoiseModel, n: int) -> list[tuple[str, int, float]]:
    """(letter, data qubit, probability) per stochastic coin, X coins first."""
    if isinstance(model, BitFlip):
        return [("X", q, model.p) for q in range(n)]
    if isinstance(model, PhaseFlip):
        return [("Z", q, model.p) for q in range(n)]
    if isinstance(model, IndependentXZ):
        qubits = model.qubits if model.qubits is not None else tuple(range(n))
        return [("X", q, model.p_x) for q in qubits] + [
            ("Z", q, model.p_z) for q in qubits
        ]
    raise ValueError(f"demo emission supports BitFlip/PhaseFlip/IndependentXZ, not {model!r}")


def build_code_demo(bundle, model: NoiseModel, p: float | None = None,
                    table_weight: int = 1) -> tuple[Circuit, tuple[Register, ...], tuple[Register, ...]]:
    """Assemble the demo circuit: encoder, per-coin stochastic noise
    gadgets, syndrome extraction, classically-controlled corrections, and
    final data measurement.

    `p` overrides the model's probabilities when given (CLI convenience).
    Returns the flat circuit and its register layouts; data qubits come
    first, then noise ancillas, then syndrome ancillas.
    """
    code = bundle.code
    if not isinstance(bundle.encoder, Circuit):
        raise ValueError("demo needs a gate-circuit encoder")
    if p is not None:
        if isinstance(model, IndependentXZ):
            model = IndependentXZ(p, p, model.qubits)
        else:
            model = type(model)(p)
    n = code.n
    coins = _noise_coins(model, n)
    n_coins = len(coins)
    l = code.num_generators
    qregs = (
        Register("q", 0, n),
        Register("na", n, n_coins),
        Register("sa", n + n_coins, l),
    )
    cregs = (
        Register("nc", 0, n_coins),
        Register("s", n_coins, l),
        Register("c", n_coins + l, n),
    )
    circ = Circuit(n + n_coins + l, n_classical=n_coins + l + n)
    for op in bundle.encoder.ops:
        circ.ops.append(op)
    for j, (letter, q, prob) in enumerate(coins):
        anc = n + j
        circ.h(anc)
        circ.ry(noise_angle(prob), anc)
        if letter == "X":
            circ.cx(anc, q)
        else:
            circ.cz(anc, q)
        circ.measure(anc, j)
    for i, g in enumerate(code.generators):
        anc = n + n_coins + i
        x_type = g.z_bits.is_zero()
        z_type = g.x_bits.is_zero()
        if z_type:
            for q in g.support():
                circ.cx(q, anc)
        elif x_type:
            for q in g.support():
                circ.h(q)
                circ.cx(q, anc)
                circ.h(q)
        else:
            circ.h(anc)
            circ.cpauli(anc, g, targets=tuple(range(n)))
            circ.h(anc)
        circ.measure(anc, n_coins + i)
    table = build_syndrome_table(code, table_weight)
    syn_bits = tuple(range(n_coins, n_coins + l))
    entries = []
    for s, w in table.entries.items():
        value = sum(b << k for k, b in enumerate(s.bits))
        if value:
            entries.append((value, w))
    for value, w in sorted(entries):
        cond = (syn_bits, value)
        for q in w.support():
            letter = w.letter(q)
            getattr(circ, letter.lower())(q, condition=cond)
    for q in range(n):
        circ.measure(q, n_coins + l + q)
    return circ, qregs, cregs


def emit_code_demo(bundle, model: NoiseModel, p: float | None = None) -> QasmProgram:
    circ, qregs, cregs = build_code_demo(bundle, model, p)
    return emit(circ, qregs, cregs)


# ---------------------------------------------------------------------------
# minimal reader (round-trip testing only; not a general OpenQASM parser)

_DECL = re.compile(r"^(qubit|bit)\[(\d+)\] (\w+);$")
_MEASURE = re.compile(r"^(\w+)\[(\d+)\] = measure (\w+)\[(\d+)\];$")
_GATE = re.compile(r"^(\w+)(?:\(([^)]+)\))? (.+);$")
_IF = re.compile(r"^if \((\w+) == (\d+)\) \{ (.*) \}$")
_OPERAND = re.compile(r"^(\w+)\[(\d+)\]$")


class QasmParseError(ValueError):
    pass


def parse_qasm(text: str) -> tuple[Circuit, tuple[Register, ...], tuple[Register, ...]]:
    """Parse the subset of OpenQASM 3.0 that emit() produces."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines[:2] != ["OPENQASM 3.0;", 'include "stdgates.inc";']:
        raise QasmParseError("missing OPENQASM 3.0 header")
    qregs: list[Register] = []
    cregs: list[Register] = []
    body_start = 2
    for ln in lines[2:]:
        m = _DECL.match(ln)
        if not m:
            break
        kind, size, name = m.group(1), int(m.group(2)), m.group(3)
        regs = qregs if kind == "qubit" else cregs
        start = sum(r.size for r in regs)
        regs.append(Register(name, start, size))
        body_start += 1
    qmap = {r.name: r for r in qregs}
    cmap = {r.name: r for r in cregs}
    circ = Circuit(sum(r.size for r in qregs), sum(r.size for r in cregs))

    def flat_q(operand: str) -> int:
        m = _OPERAND.match(operand.strip())
        if not m or m.group(1) not in qmap:
            raise QasmParseError(f"bad qubit operand {operand!r}")
        reg = qmap[m.group(1)]
        idx = int(m.group(2))
        if idx >= reg.size:
            raise QasmParseError(f"index {idx} exceeds register {reg.name}")
        return reg.start + idx

    def add_gate(stmt: str, condition=None) -> None:
        m = _MEASURE.match(stmt)
        if m:
            if condition is not None:
                raise QasmParseError("conditioned measurement not supported")
            creg = cmap[m.group(1)]
            circ.measure(qmap[m.group(3)].start + int(m.group(4)),
                         creg.start + int(m.group(2)))
            return
        m = _GATE.match(stmt)
        if not m:
            raise QasmParseError(f"cannot parse statement {stmt!r}")
        name, arg, operands = m.group(1), m.group(2), m.group(3)
        qubits = [flat_q(tok) for tok in operands.split(",")]
        if name in _SIMPLE_GATES:
            getattr(circ, name)(qubits[0], condition=condition)
        elif name in _ROTATIONS:
            getattr(circ, name)(float(arg), qubits[0], condition=condition)
        elif name in ("cx", "cz"):
            getattr(circ, name)(qubits[0], qubits[1], condition=condition)
        elif name == "swap":
            circ.swap(qubits[0], qubits[1], condition=condition)
        else:
            raise QasmParseError(f"unsupported gate {name!r}")

    for ln in lines[body_start:]:
        m = _IF.match(ln)
        if m:
            reg = cmap[m.group(1)]
            cond = (tuple(range(reg.start, reg.start + reg.size)), int(m.group(2)))
            inner = m.group(3).strip()
            for stmt in filter(None, (s.strip() for s in inner.split(";"))):
                add_gate(stmt + ";", condition=cond)
            continue
        add_gate(ln)
    return circ, tuple(qregs), tuple(cregs)
