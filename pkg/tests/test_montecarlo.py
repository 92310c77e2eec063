import math

import numpy as np
import pytest

from stabkit import catalog, montecarlo as mc, pauli, stabilizer as stab
from stabkit.montecarlo import (
    BitFlip,
    Depolarizing,
    IndependentXZ,
    PhaseFlip,
    TrialOutcome,
)
from stabkit.pauli import PauliWord


def test_sample_error_p0_identity():
    rng = np.random.default_rng(0)
    for model in (BitFlip(0.0), PhaseFlip(0.0), Depolarizing(0.0), IndependentXZ(0.0, 0.0)):
        assert mc.sample_error(model, 6, rng) == PauliWord.identity(6)


def test_sample_error_p1_bitflip():
    rng = np.random.default_rng(0)
    word = mc.sample_error(BitFlip(1.0), 5, rng)
    assert pauli.format_word(word) == "XXXXX"


def test_sample_error_p1_phaseflip():
    rng = np.random.default_rng(0)
    assert pauli.format_word(mc.sample_error(PhaseFlip(1.0), 3, rng)) == "ZZZ"


def test_sample_error_respects_designated_qubits():
    rng = np.random.default_rng(0)
    model = IndependentXZ(1.0, 1.0, qubits=(0, 2))
    word = mc.sample_error(model, 4, rng)
    assert pauli.format_word(word) == "YIYI"


def test_depolarizing_letter_split():
    rng = np.random.default_rng(12)
    counts = {"X": 0, "Y": 0, "Z": 0}
    for _ in range(3000):
        w = mc.sample_error(Depolarizing(0.9), 1, rng)
        letter = w.letters()
        if letter != "I":
            counts[letter] += 1
    total = sum(counts.values())
    for share in counts.values():
        assert abs(share / total - 1 / 3) < 0.05


def test_invalid_probability_rejected():
    with pytest.raises(ValueError):
        mc.sample_error(BitFlip(1.5), 3, np.random.default_rng(0))


def test_decode_outcomes_three_qubit():
    bundle = catalog.make_three_qubit_bit()
    table = stab.build_syndrome_table(bundle.code, 1)
    assert mc.decode_outcome(bundle.code, table, pauli.parse("X2", 3)) is TrialOutcome.SUCCESS
    # X1X2 shares a syndrome with X3; the correction leaves the logical XXX
    assert mc.decode_outcome(bundle.code, table, pauli.parse("X1X2", 3)) is TrialOutcome.LOGICAL_ERROR


def test_decode_outcome_shor_degenerate_success():
    bundle = catalog.make_shor()
    table = stab.build_syndrome_table(bundle.code, 1)
    err = pauli.parse("Z3", 9)  # block-1 phase flip
    corr = table.correction(stab.syndrome(bundle.code, err))
    assert corr != err  # correction hits a different qubit of the block
    assert mc.decode_outcome(bundle.code, table, err) is TrialOutcome.SUCCESS


def test_unmatched_syndrome_reported():
    bundle = catalog.make_planar(1, 2)
    table = stab.build_syndrome_table(bundle.code, 1)  # 12 of 16 syndromes
    err = pauli.parse("X2Z3", 5)  # weight-2 syndrome 0111, absent at weight 1
    assert mc.decode_outcome(bundle.code, table, err) is TrialOutcome.UNMATCHED_SYNDROME


def test_rate_zero_at_p0():
    bundle = catalog.make_five_qubit()
    stats = mc.logical_error_rate(bundle.code, Depolarizing(0.0), 2000, seed=3)
    assert stats.estimate == 0.0
    assert stats.count_success == 2000


def test_three_qubit_rate_matches_closed_form():
    bundle = catalog.make_three_qubit_bit()
    for p in (0.05, 0.1):
        stats = mc.logical_error_rate(bundle.code, BitFlip(p), 50_000, seed=1)
        closed = 3 * p**2 - 2 * p**3
        assert abs(stats.estimate - closed) < 4 * stats.stderr


def test_five_qubit_rate_matches_closed_form():
    bundle = catalog.make_five_qubit()
    for p in (0.05, 0.1):
        stats = mc.logical_error_rate(bundle.code, Depolarizing(p), 50_000, seed=1)
        closed = 1 - (1 - p) ** 5 - 5 * p * (1 - p) ** 4
        assert abs(stats.estimate - closed) < 4 * stats.stderr


def _shor_weight2_failure_lower_bound(p: float) -> float:
    """Exact probability of weight-2 depolarizing patterns the decoder
    fails on; every weight-0/1 pattern succeeds, so this lower-bounds the
    failure rate."""
    bundle = catalog.make_shor()
    table = stab.build_syndrome_table(bundle.code, 1)
    q = p / 3
    lower = 0.0
    for word in stab.enumerate_words(9, 1, 2):
        w = pauli.weight(word)
        outcome = mc.decode_outcome(bundle.code, table, word)
        if w == 1:
            assert outcome is TrialOutcome.SUCCESS
        elif outcome is not TrialOutcome.SUCCESS:
            lower += q**2 * (1 - p) ** 7
    return lower


def test_shor_rate_bounds():
    bundle = catalog.make_shor()
    p = 0.05
    stats = mc.logical_error_rate(bundle.code, Depolarizing(p), 50_000, seed=1)
    closed = 1 - (1 - p) ** 8 * (1 + 8 * p)
    lower = _shor_weight2_failure_lower_bound(p)
    assert stats.estimate <= closed + 4 * stats.stderr
    assert stats.estimate >= lower - 4 * stats.stderr


def test_seed_determinism_across_workers():
    bundle = catalog.make_five_qubit()
    runs = [
        mc.logical_error_rate(bundle.code, Depolarizing(0.08), 30_000, seed=42, workers=w)
        for w in (1, 8)
    ]
    assert runs[0] == runs[1]
    repeat = mc.logical_error_rate(bundle.code, Depolarizing(0.08), 30_000, seed=42)
    assert repeat == runs[0]


def test_stream_runner_matches_scalar_trials():
    bundle = catalog.make_five_qubit()
    table = stab.build_syndrome_table(bundle.code, 1)
    arrays = mc._CodeArrays(bundle.code, table)
    for model in (Depolarizing(0.08), BitFlip(0.1), IndependentXZ(0.1, 0.2, qubits=(0, 2))):
        rng = np.random.default_rng([99, 0])
        outcomes = [mc.run_trial(bundle.code, table, model, rng) for _ in range(600)]
        scalar = (
            sum(o is TrialOutcome.SUCCESS for o in outcomes),
            sum(o is not TrialOutcome.SUCCESS for o in outcomes),
            sum(o is TrialOutcome.UNMATCHED_SYNDROME for o in outcomes),
        )
        assert mc._run_stream(arrays, model, 600, (99, 0)) == scalar


def test_five_qubit_weight1_table_never_unmatched():
    bundle = catalog.make_five_qubit()
    stats = mc.logical_error_rate(bundle.code, Depolarizing(0.2), 20_000, seed=5)
    assert stats.count_unmatched == 0


def test_unmatched_counts_fold_into_logical():
    bundle = catalog.make_planar(1, 2)
    stats = mc.logical_error_rate(bundle.code, Depolarizing(0.3), 20_000, seed=5)
    assert stats.count_unmatched > 0
    assert stats.count_success + stats.count_logical == stats.shots
    assert stats.count_unmatched <= stats.count_logical
    assert stats.estimate == stats.count_logical / stats.shots


def test_stats_metadata():
    bundle = catalog.make_three_qubit_bit()
    stats = mc.logical_error_rate(bundle.code, BitFlip(0.1), 100, seed=7)
    assert stats.rng == mc.RNG_NAME
    assert stats.seed == 7
    assert stats.stderr == pytest.approx(
        math.sqrt(stats.estimate * (1 - stats.estimate) / stats.shots)
    )


def test_error_distribution_analytic_shor_column():
    dist = mc.error_distribution_analytic(IndependentXZ(0.1, 0.1, qubits=(0, 2)), (0, 2))
    assert len(dist) == 16
    assert sum(dist.values()) == pytest.approx(1.0)
    assert dist["I"] == pytest.approx(0.6561)
    for single in ("X1", "X3", "Z1", "Z3"):
        assert dist[single] == pytest.approx(0.0729)
    assert dist["X1X3"] == pytest.approx(0.0081)
    assert dist["X1X3Z1"] == pytest.approx(9.0e-4)
    assert dist["X1X3Z1Z3"] == pytest.approx(1.0e-4)


def test_error_distribution_analytic_rejects_large_subset():
    with pytest.raises(ValueError):
        mc.error_distribution_analytic(IndependentXZ(0.1, 0.1), range(5))


def test_error_distribution_analytic_rejects_depolarizing():
    with pytest.raises(ValueError):
        mc.error_distribution_analytic(Depolarizing(0.1), (0,))
