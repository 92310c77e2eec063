import pytest

from stabkit import analytic as an


def test_repetition_success_n3():
    assert an.repetition_success(3, 0.1) == pytest.approx(0.972)


def test_repetition_success_at_half():
    for n in (1, 3, 5, 7):
        assert an.repetition_success(n, 0.5) == pytest.approx(0.5)


def test_repetition_success_noiseless():
    assert an.repetition_success(5, 0.0) == 1.0


def test_repetition_rejects_even_length():
    with pytest.raises(ValueError):
        an.repetition_success(4, 0.1)


def test_repetition_threshold_property():
    for n in (3, 5, 7):
        for p in (0.05, 0.2, 0.35, 0.49):
            assert 1 - an.repetition_success(n, p) < p
        assert 1 - an.repetition_success(n, 0.5) == pytest.approx(0.5)


def test_classical_hamming_bound_repetition():
    assert an.classical_hamming_bound(2, 3, 3) == 2


def test_classical_hamming_bound_hamming_code():
    assert an.classical_hamming_bound(2, 7, 3) == 16


def test_classical_hamming_bound_d1():
    assert an.classical_hamming_bound(3, 4, 1) == 3**4


def test_quantum_hamming_bound():
    assert an.quantum_hamming_bound_holds(5, 1, 3) == (True, 0)
    holds, slack = an.quantum_hamming_bound_holds(9, 1, 3)
    assert holds and slack == 2**9 - 28 * 2
    holds, _ = an.quantum_hamming_bound_holds(4, 1, 3)
    assert not holds


def test_code_failure_values():
    assert an.code_failure_analytic("three_qubit", 0.1) == pytest.approx(0.028)
    assert an.code_failure_analytic("shor", 0.0) == 0.0
    assert an.code_failure_analytic("five_qubit", 0.05) == pytest.approx(0.0225926, abs=1e-6)


def test_code_failure_unknown_family():
    with pytest.raises(ValueError):
        an.code_failure_analytic("steane", 0.1)


def test_failure_vanishes_at_zero_and_monotone():
    import numpy as np

    grid = np.linspace(0.0, 0.5, 101)
    for family in an.FAMILIES:
        values = [an.code_failure_analytic(family, p) for p in grid]
        assert values[0] == 0.0
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_pseudo_threshold_three_qubit_exact():
    assert an.pseudo_threshold("three_qubit") == 0.5


def test_pseudo_threshold_shor():
    assert an.pseudo_threshold("shor") == pytest.approx(0.0323, abs=5e-4)


def test_pseudo_threshold_five_qubit():
    assert an.pseudo_threshold("five_qubit") == pytest.approx(0.1311, abs=5e-4)


def test_pseudo_threshold_residual():
    for family in an.FAMILIES:
        root = an.pseudo_threshold(family)
        assert abs(an.code_failure_analytic(family, root) - root) < 1e-6


def test_bracket_endpoints_sign():
    # f(p) = p_fail(p) - p is negative at the left end and >= 0 at 0.5
    for family in an.FAMILIES:
        lo, hi = an._BRACKET
        assert an.code_failure_analytic(family, lo) - lo < 0
        assert an.code_failure_analytic(family, hi) - hi >= 0


def test_detectability_two_qubit_limits():
    assert an.detectability_two_qubit(1.0, 0.25) == pytest.approx(0.75)
    assert an.detectability_two_qubit(0.25, 1.0) == pytest.approx(0.75)
    assert an.detectability_two_qubit(1.0, 1.0) == 0.0


def test_detectability_undefined_when_error_impossible():
    with pytest.raises(ValueError):
        an.detectability_two_qubit(0.0, 0.0)
