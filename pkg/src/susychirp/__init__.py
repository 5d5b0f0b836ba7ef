"""Partner frequency chirps of the damped oscillator and their verification.

The damped oscillator m x'' + gamma x' + k x = 0, stripped of its friction
envelope, leaves a constant-coefficient gauge equation.  Factoring that
equation into first-order pieces and swapping the factors produces
time-dependent frequency chirps (sech^2 wells underdamped, a sec^2 barrier
overdamped) whose embedded relaxation modes are known in closed form.  This
package builds the chirps and modes exactly and verifies them through
independent finite-difference routes.
"""

from .errors import (AnnihilationError, DomainError, InconclusiveError,
                     SingularityError, SusyChirpError)
from .factorization import (ChainResiduals, ChirpFamily, ChirpProfile,
                            Superpotential, SuperpotentialFamily, chirp_over,
                            chirp_under, eval_W, riccati_residual_chain,
                            riccati_residual_fermionic, sech,
                            superpotential_over, superpotential_under)
from .grid import Grid
from .ladder import (ClosedFormMode, LadderOp, apply_ladder, eval_mode,
                     ground_mode, mode, node_count, normalized)
from .model import (OscillatorParams, Regime, RegimeTag, classify,
                    gauge_to_newton, newton_residual)
from .polar import (PolarMode, assoc_legendre, legendre_residual,
                    proportionality_check, t_of_theta, theta_of_t, to_polar)
from .spectral import (SpectrumReport, TridiagonalOperator, count_below,
                       discretize, eigen_lowest, orthogonality_matrix,
                       schrodinger_residual, spectrum_report, verify_sec_mode)
from .verification import CheckResult, all_passed, run_invariant_suite

__version__ = "0.1.0"

__all__ = [
    "AnnihilationError", "DomainError", "InconclusiveError", "SingularityError",
    "SusyChirpError",
    "Grid",
    "OscillatorParams", "Regime", "RegimeTag", "classify", "gauge_to_newton",
    "newton_residual",
    "ChainResiduals", "ChirpFamily", "ChirpProfile", "Superpotential",
    "SuperpotentialFamily", "chirp_over", "chirp_under", "eval_W",
    "riccati_residual_chain", "riccati_residual_fermionic", "sech",
    "superpotential_over", "superpotential_under",
    "ClosedFormMode", "LadderOp", "apply_ladder", "eval_mode", "ground_mode",
    "mode", "node_count", "normalized",
    "SpectrumReport", "TridiagonalOperator", "count_below", "discretize",
    "eigen_lowest", "orthogonality_matrix", "schrodinger_residual",
    "spectrum_report", "verify_sec_mode",
    "PolarMode", "assoc_legendre", "legendre_residual", "proportionality_check",
    "t_of_theta", "theta_of_t", "to_polar",
    "CheckResult", "all_passed", "run_invariant_suite",
]
