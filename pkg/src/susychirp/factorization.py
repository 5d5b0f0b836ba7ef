"""Superpotentials and the time-dependent frequency profiles they generate.

A superpotential W factors the constant-coefficient gauge equation into
first-order pieces.  The two orderings of the factors differ by 2 W', which
turns the constant coefficient into a localized frequency chirp: a sech^2
well in the underdamped regime, a sec^2 barrier in the overdamped one.
Repeating the ordering swap with W_n = -n * omega * tanh(omega t) builds the
whole reflectionless family -n(n+1) omega^2 sech^2(omega t).
"""

import enum
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError

POLE_GUARD = 1e-8


def sech(x):
    """sech(x) computed without overflow for large |x|."""
    x = np.asarray(x, dtype=float)
    e = np.exp(-np.abs(x))
    return 2.0 * e / (1.0 + e * e)


class SuperpotentialFamily(enum.Enum):
    TANH = "tanh"
    TAN = "tan"


class ChirpFamily(enum.Enum):
    SECH_SQUARED = "sech_squared"
    SEC_SQUARED = "sec_squared"


@dataclass(frozen=True)
class Superpotential:
    """W(t) = -n * omega * tanh(omega t) (TANH) or omega * tan(omega t) (TAN)."""

    family: SuperpotentialFamily
    n: int
    omega: float

    def __post_init__(self):
        if not (self.omega > 0.0):
            raise DomainError("omega must be positive, got %g" % self.omega)
        if self.family is SuperpotentialFamily.TANH and self.n < 1:
            raise DomainError("tanh chain index must be >= 1, got %d" % self.n)
        if self.family is SuperpotentialFamily.TAN and self.n != 1:
            raise DomainError("tan superpotential has a single member, n must be 1")


@dataclass(frozen=True)
class ChirpProfile:
    """Frequency-squared profile omega_sq(t) of one partner equation.

    SECH_SQUARED: -N(N+1) * omega^2 * sech^2(omega t), defined on all of R.
    SEC_SQUARED:  2 * omega^2 * sec^2(omega t), defined on the open interval
    between the poles at +-pi/(2 omega).
    """

    family: ChirpFamily
    N: int
    omega: float

    def __post_init__(self):
        if not (self.omega > 0.0):
            raise DomainError("omega must be positive, got %g" % self.omega)
        if self.family is ChirpFamily.SECH_SQUARED and self.N < 1:
            raise DomainError("well depth index N must be >= 1, got %d" % self.N)
        if self.family is ChirpFamily.SEC_SQUARED and self.N != 1:
            raise DomainError("sec^2 barrier has a single member, N must be 1")

    @property
    def domain(self):
        if self.family is ChirpFamily.SEC_SQUARED:
            half = np.pi / (2.0 * self.omega)
            return (-half, half)
        return (-np.inf, np.inf)

    def evaluate(self, t):
        t = np.asarray(t, dtype=float)
        if self.family is ChirpFamily.SECH_SQUARED:
            return -(self.N * (self.N + 1)) * self.omega ** 2 * sech(self.omega * t) ** 2
        lo, hi = self.domain
        if np.any(t <= lo) or np.any(t >= hi):
            raise DomainError(
                "sec^2 profile is only defined strictly between the poles at +-%g" % hi)
        c = np.cos(self.omega * t)
        if np.any(np.abs(c) < POLE_GUARD):
            raise SingularityError("evaluation point too close to a sec^2 pole")
        return 2.0 * self.omega ** 2 / c ** 2


def superpotential_under(n, omega_u):
    """n-th member of the tanh chain, W_n(t) = -n * omega_u * tanh(omega_u t)."""
    return Superpotential(SuperpotentialFamily.TANH, int(n), float(omega_u))


def superpotential_over(omega_o):
    """Overdamped superpotential W(t) = omega_o * tan(omega_o t)."""
    return Superpotential(SuperpotentialFamily.TAN, 1, float(omega_o))


def chirp_under(N, omega_u):
    """Attractive profile -N(N+1) omega_u^2 sech^2(omega_u t)."""
    return ChirpProfile(ChirpFamily.SECH_SQUARED, int(N), float(omega_u))


def chirp_over(omega_o):
    """Repulsive profile 2 omega_o^2 sec^2(omega_o t) between its poles."""
    return ChirpProfile(ChirpFamily.SEC_SQUARED, 1, float(omega_o))


def eval_W(w, t):
    """Values and first derivatives (W, W') of a superpotential on `t`."""
    t = np.asarray(t, dtype=float)
    om = w.omega
    if w.family is SuperpotentialFamily.TANH:
        val = -w.n * om * np.tanh(om * t)
        der = -w.n * om ** 2 * sech(om * t) ** 2
        return val, der
    half = np.pi / (2.0 * om)
    if np.any(t <= -half) or np.any(t >= half):
        raise DomainError("tan superpotential is only defined strictly between +-%g" % half)
    c = np.cos(om * t)
    if np.any(np.abs(c) < POLE_GUARD):
        raise SingularityError("evaluation point too close to a tan pole")
    val = om * np.tan(om * t)
    der = om ** 2 / c ** 2
    return val, der


def riccati_residual_fermionic(w, omega_sq, grid):
    """Max abs of W^2 - W' + omega_sq over the grid.

    `omega_sq` is the constant coefficient of the gauge equation
    y'' = omega_sq * y; the base factorization makes this combination vanish
    identically (omega_sq = -omega^2 underdamped, +omega^2 overdamped).
    """
    val, der = eval_W(w, grid.points())
    return float(np.max(np.abs(val ** 2 - der + omega_sq)))


ChainResiduals = namedtuple("ChainResiduals", ["fermionic", "bosonic"])


def riccati_residual_chain(n, omega_u, grid):
    """Residuals of the two ordering identities at chain level n.

    fermionic: W_n^2 - W_n' reproduces the level n-1 profile shifted by
    n^2 omega_u^2; bosonic: W_n^2 + W_n' reproduces the level n profile with
    the same shift.  Both maxima vanish to rounding for every n >= 1.
    """
    if n < 1:
        raise DomainError("chain level must be >= 1, got %d" % n)
    t = grid.points()
    val, der = eval_W(superpotential_under(n, omega_u), t)
    shift = n ** 2 * omega_u ** 2
    if n == 1:
        lower = np.zeros_like(t)
    else:
        lower = chirp_under(n - 1, omega_u).evaluate(t)
    upper = chirp_under(n, omega_u).evaluate(t)
    ferm = float(np.max(np.abs(val ** 2 - der - lower - shift)))
    bos = float(np.max(np.abs(val ** 2 + der - upper - shift)))
    return ChainResiduals(ferm, bos)
