"""Shared test helpers: exact instance parameters and comparison utilities."""

import math

import numpy as np

# Exact parameters of the two built-in instances. The reference coins give
# ten-step periodic walks; the A/B pairs solve the AABB matching system and
# round to (0.264734, 0.801571) for k=3 and (0.998489, 0.119545) for k=4.
K3_RHO_C = (5.0 - math.sqrt(5.0)) / 6.0
K4_RHO_C = (5.0 - math.sqrt(5.0)) / 8.0


def aabb_roots(rho: float) -> tuple[float, float]:
    """(plus, minus) roots of the AABB matching system, full precision."""
    offset = 2.0 * math.sqrt(2.0) * math.sqrt(rho**2 * (1.0 - 3.0 * rho + 2.0 * rho**2))
    base = 3.0 * rho - 4.0 * rho**2
    return base + offset, base - offset


K3_RHO_B, K3_RHO_A = aabb_roots(K3_RHO_C)
K4_RHO_A, K4_RHO_B = aabb_roots(K4_RHO_C)


def assert_unitary(matrix: np.ndarray, tol: float = 1e-12) -> None:
    matrix = np.asarray(matrix)
    err = np.max(np.abs(matrix @ matrix.conj().T - np.eye(matrix.shape[0])))
    assert err < tol, f"unitarity defect {err:.3e} exceeds {tol}"


def assert_complex_multisets_close(left, right, tol: float = 1e-9) -> None:
    """Match two collections of complex numbers as multisets within tol."""
    left = list(left)
    right = list(right)
    assert len(left) == len(right)
    remaining = list(right)
    for value in left:
        gaps = [abs(value - other) for other in remaining]
        best = int(np.argmin(gaps))
        assert gaps[best] < tol, (
            f"no partner within {tol} for {value}; nearest gap {gaps[best]:.3e}"
        )
        remaining.pop(best)


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else ("FAIL" if report.failed else report.outcome.upper())
    print(f"\n[acceptance] {name}: {outcome}", flush=True)
