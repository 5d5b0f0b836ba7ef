"""Bundled self-checks pairing the closed forms with independent numerics."""

from dataclasses import dataclass

import numpy as np

from .factorization import chirp_under, riccati_residual_chain
from .grid import Grid
from .ladder import mode
from .spectral import orthogonality_matrix, schrodinger_residual, spectrum_report


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool


def _check(name, value, tolerance):
    return CheckResult(name, float(value), float(tolerance), bool(value <= tolerance))


def run_invariant_suite(N=3, omega=1.0, chain_tol=1e-10, mode_tol=1e-9,
                        gram_tol=1e-8, spectrum_tol=5e-3):
    """Run the residual checks for one well depth and return one row each.

    Covers the pairwise factorization identities up to level N, the
    closed-form mode residuals of the level-N well, their mutual
    orthonormality, and the finite-difference eigenvalue sweep.  Tolerances
    for the eigenvalue sweep are relative to omega^2.
    """
    results = []
    chain_grid = Grid(-10.0 / omega, 10.0 / omega, 2001)
    for n in range(1, N + 1):
        res = riccati_residual_chain(n, omega, chain_grid)
        results.append(_check("chain_identity_n%d" % n,
                              max(res.fermionic, res.bosonic), chain_tol))

    mode_grid = Grid(-15.0 / omega, 15.0 / omega, 4001)
    profile = chirp_under(N, omega)
    modes = []
    for n in range(1, N + 1):
        m, energy = mode(n, N, omega)
        modes.append(m)
        results.append(_check("mode_residual_%d_of_%d" % (n, N),
                              schrodinger_residual(m, profile, energy, mode_grid),
                              mode_tol))

    gram_grid = Grid(-30.0 / omega, 30.0 / omega, 8001)
    g = orthogonality_matrix(modes, gram_grid)
    results.append(_check("gram_identity",
                          np.max(np.abs(g - np.eye(len(modes)))), gram_tol))

    report = spectrum_report(N, omega, mode_grid)
    results.append(_check("eigenvalue_error",
                          float(np.max(report.abs_err)) / omega ** 2, spectrum_tol))
    results.append(_check("bound_count",
                          float(abs(report.negative_count - N)), 0.0))
    return results


def all_passed(results):
    return all(r.passed for r in results)
