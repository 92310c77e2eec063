"""Closed-form success probabilities, Hamming bounds, and pseudo-threshold
root finding."""
from __future__ import annotations

import math

FAMILIES = ("three_qubit", "shor", "five_qubit")


def repetition_success(n: int, p: float) -> float:
    """Probability that majority voting recovers the bit for an odd-length
    repetition code: sum_{j<=t} C(n,j) p^j (1-p)^(n-j), t = (n-1)/2."""
    if n < 1 or n % 2 == 0:
        raise ValueError("repetition codes are only considered for odd n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    t = (n - 1) // 2
    return sum(math.comb(n, j) * p**j * (1 - p) ** (n - j) for j in range(t + 1))


def classical_hamming_bound(q: int, n: int, d: int) -> int:
    """floor(q^n / sum_{k<=t} C(n,k)(q-1)^k), t = floor((d-1)/2); exact."""
    if q < 2:
        raise ValueError("alphabet size must be >= 2")
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    t = (d - 1) // 2
    denom = sum(math.comb(n, k) * (q - 1) ** k for k in range(t + 1))
    return q**n // denom


def quantum_hamming_bound_holds(n: int, k: int, d: int) -> tuple[bool, int]:
    """Check sum_{j<=t} C(n,j) 3^j 2^k <= 2^n; returns (holds, slack)."""
    if n < 0 or k < 0 or d < 1:
        raise ValueError("need n, k >= 0 and d >= 1")
    t = (d - 1) // 2
    lhs = sum(math.comb(n, j) * 3**j for j in range(t + 1)) * 2**k
    slack = 2**n - lhs
    return slack >= 0, slack


def detectability_two_qubit(p1: float, p2: float) -> float:
    """P(syndrome = 1 | some bit flip occurred) for the detection code:
    1 - p1 p2 / (p1 + p2 - p1 p2)."""
    denom = p1 + p2 - p1 * p2
    if denom == 0.0:
        raise ValueError("conditional probability undefined when no error can occur")
    return 1.0 - p1 * p2 / denom


def code_failure_analytic(family: str, p: float) -> float:
    """Logical failure probability under the all-weight-1-corrected model."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if family == "three_qubit":
        return 3 * p**2 - 2 * p**3
    if family == "shor":
        return 1.0 - (1 - p) ** 8 * (1 + 8 * p)
    if family == "five_qubit":
        return 1.0 - (1 - p) ** 5 - 5 * p * (1 - p) ** 4
    raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")


_BRACKET = (1e-9, 0.5)


def pseudo_threshold(family: str, tol: float = 1e-6) -> float:
    """Smallest positive root of p_fail(p) = p on (0, 0.5], by bisection.

    The crossing function f(p) = p_fail(p) - p is negative near 0 for every
    implemented family and nonnegative at 0.5, and changes sign exactly
    once on the bracket.
    """
    f = lambda p: code_failure_analytic(family, p) - p
    lo, hi = _BRACKET
    flo, fhi = f(lo), f(hi)
    if fhi == 0.0:
        return hi
    if flo == 0.0:
        return lo
    if flo * fhi > 0:
        raise ArithmeticError(
            f"no sign change for {family} on [{lo}, {hi}]: f={flo:.3g}..{fhi:.3g}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)
