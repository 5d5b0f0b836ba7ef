"""Assemble the embedded relaxation modes step by step.

Starting from a bare sech power, each raising step -d/dt + j omega tanh
multiplies the polynomial part by one more factor while keeping the decay
rate, landing exactly on the next well of the chain.  The script shows the
intermediate polynomials, the annihilation edge, node counts and norms.
"""

import numpy as np
from numpy.polynomial import polynomial as npoly

from susychirp import (AnnihilationError, ClosedFormMode, Grid, LadderOp,
                       apply_ladder, chirp_under, eval_mode, ground_mode,
                       mode, node_count, schrodinger_residual)


def poly_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0.0:
            continue
        if i == 0:
            terms.append("%g" % c)
        elif i == 1:
            terms.append("%g s" % c)
        else:
            terms.append("%g s^%d" % (c, i))
    return " + ".join(terms).replace("+ -", "- ")


# climb from sech^1 up to the N=4 well, printing each intermediate
N = 4
m = ClosedFormMode(1, (1.0,), 1.0, 1.0)
print("start: sech(t), eigenvalue -1 in the n=1 well")
for j in range(2, N + 1):
    m = apply_ladder(LadderOp(-float(j), 1.0), m)
    print("after step j=%d: sech * (%s)" % (j, poly_str(m.coeffs)))

grid = Grid(-15.0, 15.0, 4001)
profile = chirp_under(N, 1.0)
print("\nresidual in the N=4 well at E=-1: %.3e"
      % schrodinger_residual(m, profile, -1.0, grid))

# the same mode through the one-call interface, normalized
m4, energy = mode(N, N, 1.0)
print("mode(4, 4): p=%d, Q = %s, E=%g" % (m4.p, poly_str(m4.coeffs), energy))

# a matched coefficient annihilates instead of raising
try:
    apply_ladder(LadderOp(1.0, 1.0), ground_mode(1, 1.0))
except AnnihilationError as exc:
    print("\nannihilation edge:", exc)

# the full family of one well: eigenvalues, nodes, norms
print("\nN=3 family:")
t = np.linspace(-40.0, 40.0, 80001)
for n in range(1, 4):
    mm, ee = mode(n, 3, 1.0)
    f = eval_mode(mm, t)[0]
    nrm = np.trapezoid(f * f, t)
    print("  n=%d  E=%5g  nodes=%d  |f|^2=%.12f  Q(-1)=%g"
          % (n, ee, node_count(mm), nrm, npoly.polyval(-1.0, mm.coeffs)))
