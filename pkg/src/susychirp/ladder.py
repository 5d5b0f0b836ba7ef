"""Closed-form relaxation modes and the first-order ladder between them.

Every embedded mode of the sech^2 chirp family can be written as
scale * sech^p(omega t) * Q(tanh(omega t)) with Q a polynomial.  First-order
operators -d/dt - a * omega * tanh(omega t) act inside this representation,
so chains of them are evaluated exactly as polynomial algebra in
s = tanh(omega t).
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import AnnihilationError, DomainError
from .factorization import sech

NORM_TOL = 1e-13
NORM_HALF_WIDTH = 30.0


@dataclass(frozen=True)
class LadderOp:
    """First-order operator (A f)(t) = -f'(t) - a * omega * tanh(omega t) * f(t)."""

    a: float
    omega: float

    def __post_init__(self):
        if not (self.omega > 0.0):
            raise DomainError("omega must be positive, got %g" % self.omega)


@dataclass(frozen=True)
class ClosedFormMode:
    """Mode f(t) = scale * sech^p(omega t) * Q(tanh(omega t)).

    `coeffs` holds Q in ascending powers of s = tanh(omega t).
    """

    p: int
    coeffs: tuple
    omega: float
    scale: float

    def __post_init__(self):
        if self.p < 0:
            raise DomainError("sech power must be >= 0, got %d" % self.p)
        if not (self.omega > 0.0):
            raise DomainError("omega must be positive, got %g" % self.omega)
        if not (self.scale > 0.0):
            raise DomainError("scale must be positive, got %g" % self.scale)
        c = tuple(float(v) for v in self.coeffs)
        if len(c) == 0 or not np.any(np.asarray(c)):
            raise DomainError("polynomial part must not be identically zero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        c = np.asarray(self.coeffs)
        return int(np.max(np.nonzero(c)[0]))


def _trim(c):
    c = np.atleast_1d(np.asarray(c, dtype=float))
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        return c[:1] * 0.0
    return c[: nz[-1] + 1]


def _ladder_poly(p, a, coeffs):
    # (p - a) * s * Q - (1 - s^2) * Q', the polynomial part of A(sech^p Q) / omega
    q = np.asarray(coeffs, dtype=float)
    dq = npoly.polyder(q)
    out = npoly.polymul([0.0, float(p - a)], q)
    out = npoly.polysub(out, npoly.polymul([1.0, 0.0, -1.0], dq))
    return _trim(out)


def _deriv_poly(p, coeffs):
    # (1 - s^2) * Q' - p * s * Q, the polynomial part of d/dt (sech^p Q) / omega
    q = np.asarray(coeffs, dtype=float)
    dq = npoly.polyder(q)
    out = npoly.polymul([1.0, 0.0, -1.0], dq)
    out = npoly.polysub(out, npoly.polymul([0.0, float(p)], q))
    return _trim(out)


def _norm_sq(p, coeffs, omega):
    # adaptive trapezoid on a window where sech^p has decayed well below tail tolerance
    half = NORM_HALF_WIDTH / omega
    count = 1025
    prev = None
    while True:
        t = np.linspace(-half, half, count)
        s = np.tanh(omega * t)
        f = sech(omega * t) ** p * npoly.polyval(s, np.asarray(coeffs))
        val = float(np.trapezoid(f * f, t))
        if prev is not None and abs(val - prev) <= NORM_TOL * max(abs(val), 1.0):
            return val
        if count > 2 ** 17:
            return val
        prev = val
        count = 2 * count - 1


def normalized(mode):
    """Rescale to unit L2 norm and orient the sign so Q(-1) > 0."""
    coeffs = np.asarray(mode.coeffs)
    ref = npoly.polyval(-1.0, coeffs)
    if ref == 0.0:
        ref = coeffs[np.max(np.nonzero(coeffs)[0])]
    if ref < 0.0:
        coeffs = -coeffs + 0.0
    nsq = _norm_sq(mode.p, coeffs, mode.omega)
    if nsq <= 0.0:
        raise DomainError("cannot normalize a mode with zero norm")
    return ClosedFormMode(mode.p, tuple(coeffs), mode.omega, 1.0 / np.sqrt(nsq))


def ground_mode(N, omega_u):
    """Deepest embedded mode of the level-N well, a normalized sech^N(omega_u t)."""
    if N < 1:
        raise DomainError("well depth index N must be >= 1, got %d" % N)
    return normalized(ClosedFormMode(int(N), (1.0,), float(omega_u), 1.0))


def apply_ladder(op, mode, normalize=False):
    """Apply a first-order ladder operator to a closed-form mode.

    Raises AnnihilationError when the image is identically zero, which is how
    a ladder chain signals that it has run off the end of the spectrum.
    """
    if op.omega != mode.omega:
        raise DomainError("ladder operator and mode must share omega")
    out = _ladder_poly(mode.p, op.a, mode.coeffs)
    if not np.any(out):
        raise AnnihilationError("ladder operator annihilated the mode")
    out = out * mode.omega
    result = ClosedFormMode(mode.p, tuple(out), mode.omega, mode.scale)
    if normalize:
        result = normalized(result)
    return result


def mode(n, N, omega_u):
    """n-th embedded mode of the level-N well and its gauge rate constant.

    Modes are counted from the deepest (n = 1) upward; the n-th one decays as
    sech^k with k = N - n + 1 and belongs to eigenvalue -k^2 omega_u^2.  Each
    raising step uses the coefficient a = -j, i.e. -d/dt + j omega tanh, which
    carries an eigenfunction of the level j-1 well into the level j well
    without changing the eigenvalue.
    """
    if N < 1:
        raise DomainError("well depth index N must be >= 1, got %d" % N)
    if not (1 <= n <= N):
        raise DomainError("mode index n must satisfy 1 <= n <= N, got n=%d N=%d" % (n, N))
    k = N - n + 1
    m = ClosedFormMode(int(k), (1.0,), float(omega_u), 1.0)
    for j in range(k + 1, N + 1):
        m = apply_ladder(LadderOp(-float(j), m.omega), m)
    return normalized(m), -(k ** 2) * omega_u ** 2


def eval_mode(m, t):
    """Values (f, f', f'') of a closed-form mode on `t`.

    Both derivatives come from exact polynomial recurrences in s = tanh, not
    finite differences, so they are accurate to rounding.
    """
    t = np.asarray(t, dtype=float)
    s = np.tanh(m.omega * t)
    env = m.scale * sech(m.omega * t) ** m.p
    q = np.asarray(m.coeffs)
    d1 = _deriv_poly(m.p, q)
    d2 = _deriv_poly(m.p, d1)
    f = env * npoly.polyval(s, q)
    fp = m.omega * env * npoly.polyval(s, d1)
    fpp = m.omega ** 2 * env * npoly.polyval(s, d2)
    return f, fp, fpp


def node_count(m, samples=4001):
    """Number of interior zero crossings, from sign changes of Q on (-1, 1)."""
    s = np.linspace(-1.0, 1.0, samples)[1:-1]
    vals = npoly.polyval(s, np.asarray(m.coeffs))
    signs = np.sign(vals)
    signs = signs[signs != 0]
    return int(np.sum(signs[1:] != signs[:-1]))
