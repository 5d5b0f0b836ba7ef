"""Confirm the closed-form spectra with finite differences alone.

The well -N(N+1) omega^2 sech^2(omega t) is discretized with the three-point
stencil and its low eigenvalues are located by Sturm bisection.  Nothing here
uses the ladder algebra, so matching -k^2 omega^2 to a few parts in 10^4 is
an independent confirmation.  The count of negative eigenvalues is exact.
"""

import numpy as np

from susychirp import (Grid, chirp_under, count_below, discretize,
                       eigen_lowest, spectrum_report, verify_sec_mode)

grid = Grid(-15.0, 15.0, 4001)

for N in range(1, 6):
    rep = spectrum_report(N, 1.0, grid)
    print("N=%d  computed %s" % (N, np.array2string(rep.computed, precision=6)))
    print("     analytic %s   worst error %.2e   negatives %d"
          % (np.array2string(rep.analytic, precision=6),
             float(np.max(rep.abs_err)), rep.negative_count))

# eigenvalue counts below arbitrary thresholds come straight from Sturm
op = discretize(chirp_under(5, 1.0), grid)
for sigma in (-20.0, -10.0, -2.0, 0.0):
    print("eigenvalues below %6.1f: %d" % (sigma, count_below(op, sigma)))

# halving h quarters the error: the stencil really is second order
e1 = spectrum_report(1, 1.0, Grid(-15.0, 15.0, 2001)).abs_err[0]
e2 = spectrum_report(1, 1.0, Grid(-15.0, 15.0, 4001)).abs_err[0]
print("\nerror %.3e on 2001 points, %.3e on 4001: ratio %.3f" % (e1, e2, e1 / e2))

# a grid cut too short shifts the shallow eigenvalue and says so
rep = spectrum_report(2, 1.0, Grid(-5.0, 5.0, 1001))
print("\nnarrow grid: error on E=-1 grows to %.2e" % rep.abs_err[-1])
print("report warning:", rep.warning)

# the overdamped barrier carries sec(omega t) at +omega^2 between its poles
print("\nsec mode residual:", verify_sec_mode(1.0, Grid(-1.4, 1.4, 2001)))

# the lowest free-particle eigenvalue as a sanity anchor for the solver
from susychirp import TridiagonalOperator

h = 1.0 / 200
dim = 199
free = TridiagonalOperator(np.full(dim, 2.0 / h ** 2),
                           np.full(dim - 1, -1.0 / h ** 2), Grid(0.0, 1.0, 201))
low = eigen_lowest(free, 1)[0]
print("free particle on (0, 1): lowest %.6f vs pi^2 = %.6f" % (low, np.pi ** 2))
