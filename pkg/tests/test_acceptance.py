"""Acceptance suite: one test per criterion, each printing a pass/fail
line with its runtime and asserting the stated budget and tolerances."""
import itertools
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from stabkit import analytic, catalog, montecarlo as mc, pauli, qasm, stabilizer as stab, statevec as sv
from stabkit.pauli import PauliWord
from stabkit.stabilizer import Residual
from stabkit.statevec import StateVector

GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def criterion(number: int, description: str, budget_s: float):
    start = time.perf_counter()
    failed = True
    try:
        yield
        failed = False
    finally:
        elapsed = time.perf_counter() - start
        status = "FAIL" if failed else "PASS"
        print(f"ACCEPTANCE {number:2d} [{status}] {elapsed:7.2f}s  {description}", flush=True)
        if not failed:
            assert elapsed < budget_s, f"criterion {number} exceeded {budget_s}s budget"


PAPER_FIVE_QUBIT_TABLE = {
    "0000": "I", "0001": "X1", "0010": "Z3", "0011": "X5",
    "0100": "Z5", "0101": "Z2", "0110": "X4", "0111": "Y5",
    "1000": "X2", "1001": "Z4", "1010": "Z1", "1011": "Y1",
    "1100": "X3", "1101": "Y2", "1110": "Y3", "1111": "Y4",
}

PAPER_PLANAR_TABLE_WEIGHTS = {
    "0000": 0, "0001": 1, "0010": 1, "0011": 1,
    "0100": 1, "0101": 1, "0110": 1, "0111": 2,
    "1000": 1, "1001": 1, "1010": 1, "1011": 2,
    "1100": 1, "1101": 2, "1110": 2, "1111": 1,
}


def test_criterion_1_five_qubit_table():
    with criterion(1, "five-qubit weight-1 lookup table matches the published 16 rows", 1.0):
        code = catalog.make_five_qubit().code
        table = stab.build_syndrome_table(code, 1)
        got = {str(s): pauli.format_product(w) for s, w in table.entries.items()}
        assert got == PAPER_FIVE_QUBIT_TABLE


def test_criterion_2_planar_1x2():
    with criterion(2, "planar 1x2 generators, logical pair, table weights, residual correctness", 1.0):
        bundle = catalog.make_planar(1, 2)
        code = bundle.code
        assert code.generator_strings() == ["ZIZZI", "IZZIZ", "XXXII", "IIXXX"]
        xbar, zbar = bundle.logical.pairs[0]
        assert pauli.format_word(xbar) == "XIIXI"  # X0 X3
        assert pauli.format_word(zbar) == "ZZIII"  # Z0 Z1
        table = stab.build_syndrome_table(code, 2)
        assert len(table.entries) == 16
        weights = {str(s): pauli.weight(w) for s, w in table.entries.items()}
        assert weights == PAPER_PLANAR_TABLE_WEIGHTS
        # residual correctness: composing the table's correction with every
        # same-syndrome error of weight <= 2 lands back in the normalizer
        # (never Detectable); the code has distance 2, so same-syndrome
        # errors may differ by a logical, not only by a stabilizer.
        by_syndrome = {}
        for err in stab.enumerate_words(5, 0, 2):
            by_syndrome.setdefault(stab.syndrome(code, err), []).append(err)
        for s, errors in by_syndrome.items():
            corr = table.correction(s)
            assert corr is not None
            assert stab.syndrome(code, corr) == s
            for err in errors:
                residual = pauli.multiply(corr, err)
                assert stab.residual_class(code, residual) is not Residual.DETECTABLE


def test_criterion_3_pseudo_thresholds():
    with criterion(3, "pseudo-thresholds 0.5 exact, 0.0323 and 0.1311 within 5e-4", 0.1):
        assert analytic.pseudo_threshold("three_qubit") == 0.5
        assert abs(analytic.pseudo_threshold("shor") - 0.0323) <= 5e-4
        assert abs(analytic.pseudo_threshold("five_qubit") - 0.1311) <= 5e-4


def test_criterion_4_monte_carlo_vs_closed_form():
    with criterion(4, "1e5-shot Monte Carlo within 4 sigma of the closed forms", 30.0):
        seed = 1
        five = catalog.make_five_qubit().code
        for p in (0.01, 0.05, 0.10):
            stats = mc.logical_error_rate(five, mc.Depolarizing(p), 100_000, seed=seed)
            closed = 1 - (1 - p) ** 5 - 5 * p * (1 - p) ** 4
            assert abs(stats.estimate - closed) < 4 * stats.stderr, (p, stats.estimate, closed)
        three = catalog.make_three_qubit_bit().code
        for p in (0.01, 0.05, 0.10):
            stats = mc.logical_error_rate(three, mc.BitFlip(p), 100_000, seed=seed)
            closed = 3 * p**2 - 2 * p**3
            assert abs(stats.estimate - closed) < 4 * stats.stderr, (p, stats.estimate, closed)


def test_criterion_5_shor_degeneracy():
    with criterion(5, "every same-block ZZ pair on the Shor code decodes to Success", 5.0):
        bundle = catalog.make_shor()
        table = stab.build_syndrome_table(bundle.code, 1)
        blocks = [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
        checked = 0
        for i, j in itertools.combinations(range(9), 2):
            word = PauliWord.identity(9)
            word.z_bits.set(i, 1)
            word.z_bits.set(j, 1)
            same_block = any(i in b and j in b for b in blocks)
            outcome = mc.decode_outcome(bundle.code, table, word)
            if same_block:
                assert outcome is mc.TrialOutcome.SUCCESS, (i, j, outcome)
                checked += 1
        assert checked == 9


def test_criterion_6_shor_analytic_column():
    with criterion(6, "four-coin analytic distribution matches the published column", 0.1):
        dist = mc.error_distribution_analytic(
            mc.IndependentXZ(0.1, 0.1, qubits=(0, 2)), (0, 2)
        )

        def sig3(value, reference):
            assert abs(value - reference) / reference < 5e-3, (value, reference)

        sig3(dist["I"], 6.56e-1)
        for label in ("X1", "X3", "Z1", "Z3"):
            sig3(dist[label], 7.29e-2)
        for label in ("X1X3", "X1Z1", "X1Z3", "X3Z1", "X3Z3", "Z1Z3"):
            sig3(dist[label], 8.10e-3)
        for label in ("X1X3Z1", "X1X3Z3", "X1Z1Z3", "X3Z1Z3"):
            sig3(dist[label], 9.00e-4)
        sig3(dist["X1X3Z1Z3"], 1.00e-4)


def test_criterion_7_oracle_equivalence():
    with criterion(7, "Hadamard-test syndromes equal algebraic syndromes (weight <= 2, 5 codes)", 120.0):
        rng = np.random.default_rng(1234)
        for name in ("two-qubit", "three-qubit-bit", "three-qubit-phase", "five-qubit", "shor"):
            bundle = catalog.by_name(name)
            n = bundle.code.n
            a = rng.normal(size=2) + 1j * rng.normal(size=2)
            a /= np.linalg.norm(a)
            encoded = sv.encode(bundle, StateVector(1, a))
            for err in stab.enumerate_words(n, 0, 2):
                state = encoded.copy()
                sv.apply_pauli(state, err)
                syn, post = sv.hadamard_test_syndrome(state, bundle.code.generators)
                assert syn == stab.syndrome(bundle.code, err), (name, pauli.format_word(err))
                assert sv.fidelity(post, state) > 1 - 1e-9, (name, pauli.format_word(err))


def test_criterion_8_homology():
    with criterion(8, "disk/toric/planar homology ranks and lattice counts", 1.0):
        from stabkit.lattice import CellComplex, build_planar, build_toric, homology_rank, stabilizers_from_lattice

        disk = CellComplex(4, ((0, 1), (1, 2), (2, 3), (3, 0), (1, 3)), ((3, 0, 4), (1, 2, 4)))
        assert homology_rank(disk, 1) == 0
        assert homology_rank(disk, 0) == 1
        toric = build_toric(5, 5)
        assert toric.n_qubits == 50
        gens = stabilizers_from_lattice(toric)
        assert len(gens) == 48
        code = stab.StabilizerCode("toric:5x5", gens)
        assert stab.validate(code) == []
        assert code.num_logical_qubits() == 2
        for m, n in ((1, 2), (2, 2), (2, 3), (3, 3), (1, 5)):
            lat = build_planar(m, n)
            assert lat.n_qubits == 2 * m * n + n - m
            pc = stab.StabilizerCode("p", stabilizers_from_lattice(lat))
            assert pc.num_logical_qubits() == 1
            assert stab.validate(pc) == []


def test_criterion_9_bounds():
    with criterion(9, "quantum Hamming slack 0 at (5,1,3); classical bounds 2 and 16", 0.1):
        holds, slack = analytic.quantum_hamming_bound_holds(5, 1, 3)
        assert holds and slack == 0
        assert analytic.classical_hamming_bound(2, 3, 3) == 2
        assert analytic.classical_hamming_bound(2, 7, 3) == 16


def test_criterion_10_qasm_golden_and_roundtrip():
    with criterion(10, "QASM golden files byte-exact; reader round-trips and re-simulates", 5.0):
        three_prog = qasm.emit_code_demo(catalog.make_three_qubit_bit(), mc.BitFlip(0.1))
        assert three_prog.source == (GOLDEN / "three_qubit_bit_demo.qasm").read_text()
        shor_prog = qasm.emit_code_demo(
            catalog.make_shor(), mc.IndependentXZ(0.1, 0.1, qubits=(0, 2))
        )
        assert shor_prog.source == (GOLDEN / "shor_demo.qasm").read_text()

        circ3, q3, c3 = qasm.build_code_demo(catalog.make_three_qubit_bit(), mc.BitFlip(0.1))
        parsed3, _, _ = qasm.parse_qasm(three_prog.source)
        assert parsed3 == circ3
        n_meas = sum(1 for op in circ3.ops if op.kind == "measure")
        for outs in itertools.product((0, 1), repeat=n_meas):
            recs = []
            for c in (circ3, parsed3):
                state = StateVector(c.n_qubits)
                try:
                    recs.append(sv.apply(state, c, forced_outcomes=list(outs)))
                except ValueError:
                    recs.append(None)
            assert (recs[0] is None) == (recs[1] is None)
            if recs[0] is not None:
                assert recs[0].probability == pytest.approx(recs[1].probability, abs=1e-12)

        circS, _, _ = qasm.build_code_demo(
            catalog.make_shor(), mc.IndependentXZ(0.1, 0.1, qubits=(0, 2))
        )
        parsedS, _, _ = qasm.parse_qasm(shor_prog.source)
        assert parsedS == circS
        for seed in (0, 1):
            r1, s1, _ = sv.apply_with_recycling(circS, rng=np.random.default_rng(seed))
            r2, s2, _ = sv.apply_with_recycling(parsedS, rng=np.random.default_rng(seed))
            assert r1.bits == r2.bits
            assert r1.probability == pytest.approx(r2.probability, abs=1e-12)
