"""Independent spectral verification by finite differences and Sturm bisection.

The chirp profiles are discretized with the standard three-point stencil on a
uniform grid with Dirichlet ends.  Eigenvalues of the resulting symmetric
tridiagonal matrix are located by bisection on the Sturm sign-change count,
which also gives exact counts of eigenvalues below any threshold.  Nothing in
here knows about the ladder algebra, so agreement with the closed forms is a
genuine cross-check.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import DomainError, InconclusiveError
from .factorization import chirp_under, chirp_over, sech
from .grid import Grid
from .ladder import eval_mode

BISECT_RELTOL = 1e-10
TAIL_WARN = 1e-6


@njit(cache=True)
def _count_below(d, e2, sigma, pivmin):
    # Sturm count: negative pivots of the shifted LDL^T factorization.
    # The pivot floor must be applied before the sign test or an exactly
    # singular leading block freezes the count.
    n = d.shape[0]
    cnt = 0
    q = d[0] - sigma
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        cnt += 1
    for i in range(1, n):
        q = d[i] - sigma - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            cnt += 1
    return cnt


@njit(cache=True)
def _bisect_lowest(d, e2, howmany, pivmin, reltol):
    n = d.shape[0]
    lo = d[0]
    hi = d[0]
    for i in range(n):
        r = 0.0
        if i > 0:
            r += np.sqrt(e2[i - 1])
        if i < n - 1:
            r += np.sqrt(e2[i])
        if d[i] - r < lo:
            lo = d[i] - r
        if d[i] + r > hi:
            hi = d[i] + r
    out = np.empty(howmany)
    for j in range(howmany):
        a = lo
        b = hi
        for _ in range(200):
            mid = 0.5 * (a + b)
            if b - a <= reltol * max(1.0, abs(mid)):
                break
            if _count_below(d, e2, mid, pivmin) >= j + 1:
                b = mid
            else:
                a = mid
        out[j] = 0.5 * (a + b)
    return out


@dataclass(frozen=True, eq=False)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix with its originating grid."""

    diag: np.ndarray
    offdiag: np.ndarray
    grid: Grid

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or d.size < 3:
            raise DomainError("diagonal must be 1-d with at least 3 entries")
        if e.shape != (d.size - 1,):
            raise DomainError("offdiagonal must have length len(diag) - 1")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def dimension(self):
        return self.diag.size


def _pivmin(op):
    e2 = op.offdiag ** 2
    return max(float(np.max(e2)) * 1e-300, 1e-300)


def discretize(profile, grid):
    """Three-point discretization of -d^2/dt^2 + omega_sq(t) with Dirichlet ends.

    Rows correspond to the interior grid points; the profile is evaluated on
    the full grid first so that domain violations surface before any algebra.
    """
    if grid.count < 5:
        raise DomainError("discretization needs at least 5 grid points")
    vals = profile.evaluate(grid.points())
    h = grid.h
    diag = 2.0 / h ** 2 + vals[1:-1]
    offdiag = np.full(grid.count - 2, -1.0 / h ** 2)[:-1]
    return TridiagonalOperator(diag, offdiag, grid)


def count_below(op, sigma):
    """Exact number of eigenvalues of `op` strictly below `sigma`."""
    e2 = op.offdiag ** 2
    return int(_count_below(op.diag, e2, float(sigma), _pivmin(op)))


def eigen_lowest(op, count):
    """The `count` smallest eigenvalues of `op` in ascending order."""
    if not (1 <= count <= op.dimension):
        raise DomainError("count must be between 1 and dimension %d" % op.dimension)
    e2 = op.offdiag ** 2
    return _bisect_lowest(op.diag, e2, int(count), _pivmin(op), BISECT_RELTOL)


def schrodinger_residual(m, profile, energy, grid):
    """Relative residual of -f'' + omega_sq(t) f = E f for a closed-form mode.

    Derivatives come from the exact tanh recurrences, so for a true
    mode/eigenvalue pair this is rounding noise; for a wrong pairing it is
    order one.
    """
    if m.omega != profile.omega:
        raise DomainError("mode and profile must share omega")
    t = grid.points()
    v = profile.evaluate(t)
    f, _, fpp = eval_mode(m, t)
    num = np.max(np.abs(-fpp + v * f - energy * f))
    den = max(np.max(np.abs(fpp)), np.max(np.abs(v * f)), np.max(np.abs(energy * f)))
    if den == 0.0:
        raise InconclusiveError("mode vanished on the whole grid")
    return float(num / den)


def verify_sec_mode(omega_o, grid):
    """Relative residual of the sec(omega_o t) mode at energy +omega_o^2.

    The grid must lie strictly between the profile poles; a crossing grid is
    rejected by the profile's own domain checks.
    """
    om = float(omega_o)
    v = chirp_over(om).evaluate(grid.points())
    c = np.cos(om * grid.points())
    u = 1.0 / c
    upp = om ** 2 * u * (2.0 * u ** 2 - 1.0)
    energy = om ** 2
    num = np.max(np.abs(-upp + v * u - energy * u))
    den = max(np.max(np.abs(upp)), np.max(np.abs(v * u)), np.max(np.abs(energy * u)))
    return float(num / den)


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Computed vs analytic embedded eigenvalues of one sech^2 well."""

    N: int
    omega: float
    computed: np.ndarray
    analytic: np.ndarray
    abs_err: np.ndarray
    negative_count: int
    warning: object
    grid: Grid

    def to_dict(self):
        return {
            "N": self.N,
            "omega": self.omega,
            "computed": [float(v) for v in self.computed],
            "analytic": [float(v) for v in self.analytic],
            "abs_err": [float(v) for v in self.abs_err],
            "negative_count": self.negative_count,
            "warning": self.warning,
            "grid": {"t_min": self.grid.t_min, "t_max": self.grid.t_max,
                     "count": self.grid.count},
        }


def spectrum_report(N, omega_u, grid):
    """Locate the N embedded eigenvalues of the level-N well on `grid`.

    The analytic values are -k^2 omega_u^2 for k = N down to 1.  A warning is
    attached when the slowest sech tail is not yet below 1e-6 at the grid
    ends, since truncation then shifts the shallow eigenvalues.
    """
    profile = chirp_under(N, omega_u)
    op = discretize(profile, grid)
    computed = eigen_lowest(op, N)
    ks = np.arange(N, 0, -1)
    analytic = -(ks.astype(float) ** 2) * omega_u ** 2
    abs_err = np.abs(computed - analytic)
    tail = float(max(sech(omega_u * abs(grid.t_min)), sech(omega_u * abs(grid.t_max))))
    warning = None
    if tail >= TAIL_WARN:
        warning = ("slowest mode tail is %.3g at the grid ends; "
                   "widen the grid for trustworthy shallow eigenvalues" % tail)
    return SpectrumReport(int(N), float(omega_u), computed, analytic, abs_err,
                          count_below(op, 0.0), warning, grid)


def orthogonality_matrix(modes, grid):
    """Gram matrix of closed-form modes under the trapezoid inner product."""
    if len(modes) == 0:
        raise DomainError("need at least one mode")
    omegas = {m.omega for m in modes}
    if len(omegas) != 1:
        raise DomainError("all modes must share omega")
    t = grid.points()
    vals = np.stack([eval_mode(m, t)[0] for m in modes])
    g = np.empty((len(modes), len(modes)))
    for i in range(len(modes)):
        for j in range(i, len(modes)):
            g[i, j] = g[j, i] = np.trapezoid(vals[i] * vals[j], t)
    return g
