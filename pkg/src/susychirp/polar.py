"""Angular image of the relaxation modes.

The substitution t = ln tan(theta/2) maps the real line onto (0, pi) with
sech t = sin theta and tanh t = -cos theta.  Under it a closed-form mode of
the level-N well becomes a solution of the polar equation
y'' + cot(theta) y' + (N(N+1) - k^2 / sin^2 theta) y = 0, i.e. an associated
Legendre function in cos theta.  This module performs the map and checks the
claim by finite differences, without using the exact derivative recurrences.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InconclusiveError
from .ladder import ClosedFormMode, eval_mode

DELTA = 0.05


def t_of_theta(theta):
    """Inverse angular map ln tan(theta/2), defined for 0 < theta < pi."""
    theta = np.asarray(theta, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= np.pi):
        raise DomainError("theta must lie strictly inside (0, pi)")
    return np.log(np.tan(0.5 * theta))


def theta_of_t(t):
    """Angular map 2 arctan(e^t), a monotone bijection of R onto (0, pi)."""
    t = np.asarray(t, dtype=float)
    return 2.0 * np.arctan(np.exp(t))


def assoc_legendre(L, M, x):
    """Associated Legendre P_L^M(x) on [-1, 1] by upward recurrence.

    Includes the Condon-Shortley factor (-1)^M.
    """
    if not (0 <= M <= L):
        raise DomainError("need 0 <= M <= L, got L=%d M=%d" % (L, M))
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise DomainError("argument must lie in [-1, 1]")
    somx2 = np.sqrt(1.0 - x * x)
    pmm = np.ones_like(x)
    fact = 1.0
    for _ in range(M):
        pmm = pmm * (-fact) * somx2
        fact += 2.0
    if L == M:
        return pmm
    pnext = x * (2.0 * M + 1.0) * pmm
    for ll in range(M + 2, L + 1):
        pnew = (x * (2.0 * ll - 1.0) * pnext - (ll + M - 1.0) * pmm) / (ll - M)
        pmm = pnext
        pnext = pnew
    return pnext


@dataclass(frozen=True, eq=False)
class PolarMode:
    """Samples of a relaxation mode transported to the angular variable.

    `k` is the claimed Legendre order; for a faithfully transported mode it
    equals the sech power of the source.
    """

    N: int
    k: int
    theta: np.ndarray
    values: np.ndarray
    source: ClosedFormMode

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("N must be >= 1, got %d" % self.N)
        if not (1 <= self.k <= self.N):
            raise DomainError("need 1 <= k <= N, got k=%d N=%d" % (self.k, self.N))
        th = np.asarray(self.theta, dtype=float)
        va = np.asarray(self.values, dtype=float)
        if th.shape != va.shape or th.ndim != 1:
            raise DomainError("theta and values must be matching 1-d arrays")
        object.__setattr__(self, "theta", th)
        object.__setattr__(self, "values", va)

    @property
    def theta_samples(self):
        """Paired (theta, value) rows."""
        return np.column_stack([self.theta, self.values])


def to_polar(m, k=None, points=2001, delta=DELTA, rescale=False):
    """Sample a closed-form mode on a uniform theta grid in [delta, pi - delta].

    The angular substitution is tied to unit omega.  Modes with a different
    omega are rejected unless `rescale` is set, in which case the same shape
    is read in the stretched time omega * t, i.e. the mode is rebuilt with
    omega = 1 and an unchanged polynomial part.
    """
    if m.omega != 1.0:
        if not rescale:
            raise DomainError("angular map needs omega = 1; pass rescale=True "
                              "to reuse the mode shape in stretched time")
        m = ClosedFormMode(m.p, m.coeffs, 1.0, m.scale)
    inferred_n = m.p + m.degree
    if k is None:
        k = m.p
    if not (0.0 < delta < 0.5 * np.pi):
        raise DomainError("delta must lie in (0, pi/2), got %g" % delta)
    if points < 7:
        raise DomainError("need at least 7 theta points, got %d" % points)
    theta = np.linspace(delta, np.pi - delta, int(points))
    vals = eval_mode(m, t_of_theta(theta))[0]
    return PolarMode(inferred_n, int(k), theta, vals, m)


def legendre_residual(pm, theta_grid=None, delta=DELTA):
    """Relative residual of the polar equation for `pm`, by finite differences.

    y'' + cot(theta) y' + (N(N+1) - k^2 / sin^2 theta) y is formed from the
    sampled values alone with fourth-order central stencils, so this check is
    independent of the closed-form derivative algebra.  The grid must be
    uniform and stay inside [delta, pi - delta].
    """
    if theta_grid is None:
        theta = pm.theta
        y = pm.values
    else:
        theta = np.asarray(theta_grid, dtype=float)
        y = eval_mode(pm.source, t_of_theta(theta))[0]
    if theta.size < 7:
        raise DomainError("need at least 7 theta points, got %d" % theta.size)
    if theta[0] < delta - 1e-12 or theta[-1] > np.pi - delta + 1e-12:
        raise DomainError("theta grid must stay inside [delta, pi - delta]")
    dth = np.diff(theta)
    h = float(np.mean(dth))
    if np.max(np.abs(dth - h)) > 1e-9 * h:
        raise DomainError("theta grid must be uniform")
    d1 = (y[:-4] - 8.0 * y[1:-3] + 8.0 * y[3:-1] - y[4:]) / (12.0 * h)
    d2 = (-y[:-4] + 16.0 * y[1:-3] - 30.0 * y[2:-2] + 16.0 * y[3:-1] - y[4:]) / (12.0 * h * h)
    th = theta[2:-2]
    yc = y[2:-2]
    cot = np.cos(th) / np.sin(th)
    coef = pm.N * (pm.N + 1.0) - pm.k ** 2 / np.sin(th) ** 2
    num = np.max(np.abs(d2 + cot * d1 + coef * yc))
    den = max(np.max(np.abs(d2)), np.max(np.abs(cot * d1)), np.max(np.abs(coef * yc)))
    if den == 0.0:
        raise InconclusiveError("mode vanished on the whole theta grid")
    return float(num / den)


def proportionality_check(pm, rel_threshold=1e-6):
    """Largest relative deviation of values / P_N^k(-cos theta) from constant.

    Sample points where the Legendre function is below `rel_threshold` of its
    peak are excluded; with none left the check refuses to answer.
    """
    p = assoc_legendre(pm.N, pm.k, -np.cos(pm.theta))
    mask = np.abs(p) > rel_threshold * np.max(np.abs(p))
    if not np.any(mask):
        raise InconclusiveError("no sample points clear of the reference zeros")
    ratio = pm.values[mask] / p[mask]
    ref = float(np.median(ratio))
    if ref == 0.0:
        raise InconclusiveError("reference ratio is zero")
    return float(np.max(np.abs(ratio - ref)) / abs(ref))
