"""Damped linear oscillator m x'' + gamma x' + k x = 0 and its gauge frame.

Removing the friction factor exp(-gamma t / 2m) from x leaves a gauge
coordinate y obeying y'' - omega_sq * y = 0 with
omega_sq = (gamma / 2m)**2 - k / m.  The sign of omega_sq separates the
three damping regimes.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .grid import Grid

CRITICAL_TOL = 1e-12


class RegimeTag(enum.Enum):
    UNDERDAMPED = "underdamped"
    CRITICAL = "critical"
    OVERDAMPED = "overdamped"


@dataclass(frozen=True)
class OscillatorParams:
    """Mass, friction coefficient and spring constant of the damped oscillator."""

    m: float
    gamma: float
    k: float

    def __post_init__(self):
        if not (self.m > 0.0):
            raise DomainError("mass must be positive, got %g" % self.m)
        if not (self.k > 0.0):
            raise DomainError("spring constant must be positive, got %g" % self.k)
        if self.gamma < 0.0:
            raise DomainError("friction coefficient must be nonnegative, got %g" % self.gamma)


@dataclass(frozen=True)
class Regime:
    """Damping regime together with the gauge-frame frequency data.

    omega_sq is the coefficient in y'' = omega_sq * y; omega = sqrt(|omega_sq|)
    is the oscillation rate (underdamped) or growth rate (overdamped).  Both
    are exactly 0.0 at critical damping.
    """

    tag: RegimeTag
    omega_sq: float
    omega: float


def classify(params, tol=CRITICAL_TOL):
    """Classify the damping regime of `params`.

    omega_sq values within `tol` of zero, relative to the larger of k/m and
    (gamma/2m)**2, are snapped to critical so that nearly cancelling inputs
    do not flip regimes on rounding noise.
    """
    half_rate = params.gamma / (2.0 * params.m)
    omega_sq = half_rate ** 2 - params.k / params.m
    scale = max(params.k / params.m, half_rate ** 2)
    if abs(omega_sq) <= tol * scale:
        return Regime(RegimeTag.CRITICAL, 0.0, 0.0)
    if omega_sq < 0.0:
        return Regime(RegimeTag.UNDERDAMPED, omega_sq, np.sqrt(-omega_sq))
    return Regime(RegimeTag.OVERDAMPED, omega_sq, np.sqrt(omega_sq))


def gauge_to_newton(y, params):
    """Map a gauge-frame solution y(t) to the damped-frame x(t).

    `y` is a callable returning values of a solution of y'' = omega_sq * y.
    The returned callable evaluates x(t) = exp(-gamma t / 2m) * y(t), which
    then solves m x'' + gamma x' + k x = 0.
    """
    half_rate = params.gamma / (2.0 * params.m)

    def x(t):
        t = np.asarray(t, dtype=float)
        return np.exp(-half_rate * t) * y(t)

    return x


def newton_residual(x, params, grid):
    """Max abs of m x'' + gamma x' + k x over the interior of `grid`.

    Derivatives are taken by second-order central differences of the sampled
    values, so the result is O(h^2) for an exact solution.  `x` may be a
    callable or an array of samples matching the grid.
    """
    if callable(x):
        vals = np.asarray(x(grid.points()), dtype=float)
    else:
        vals = np.asarray(x, dtype=float)
    if vals.shape != (grid.count,):
        raise DomainError("need %d samples, got shape %s" % (grid.count, vals.shape))
    h = grid.h
    d1 = (vals[2:] - vals[:-2]) / (2.0 * h)
    d2 = (vals[2:] - 2.0 * vals[1:-1] + vals[:-2]) / (h * h)
    res = params.m * d2 + params.gamma * d1 + params.k * vals[1:-1]
    return float(np.max(np.abs(res)))
