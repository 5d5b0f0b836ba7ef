"""Transport the relaxation modes to the angular variable.

Under t = ln tan(theta/2) the real line maps onto (0, pi) with
sech t = sin theta and tanh t = -cos theta, so each mode becomes an
associated Legendre function of cos theta.  The script verifies the mapped
samples against the Legendre equation by finite differences and against the
recurrence-built P_N^k by pointwise ratio.
"""

import numpy as np

from susychirp import (assoc_legendre, legendre_residual, mode,
                       proportionality_check, sech, t_of_theta, theta_of_t,
                       to_polar)

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

# the change of variable and its two identities
theta = np.linspace(0.05, np.pi - 0.05, 1001)
t = t_of_theta(theta)
print("roundtrip defect:", np.max(np.abs(theta_of_t(t) - theta)))
print("sech t vs sin theta:", np.max(np.abs(sech(t) - np.sin(theta))))
print("tanh t vs -cos theta:", np.max(np.abs(np.tanh(t) + np.cos(theta))))
print()

# every mode of every well up to N=6 satisfies the polar equation
for N in range(1, 7):
    for k in range(N, 0, -1):
        pm = to_polar(mode(N - k + 1, N, 1.0)[0])
        print("N=%d k=%d   equation residual %.2e   ratio spread %.2e"
              % (N, k, legendre_residual(pm), proportionality_check(pm)))
print()

# claiming the wrong order k makes both checks fail loudly
pm_bad = to_polar(mode(2, 3, 1.0)[0], k=1)
print("wrong order claimed: residual %.2f, ratio spread %.1e"
      % (legendre_residual(pm_bad), proportionality_check(pm_bad)))

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for k in range(3, 0, -1):
        pm = to_polar(mode(3 - k + 1, 3, 1.0)[0])
        ax.plot(pm.theta, pm.values, label="k=%d" % k)
        ref = assoc_legendre(3, k, -np.cos(pm.theta))
        scale = pm.values[len(pm.theta) // 3] / ref[len(pm.theta) // 3]
        ax.plot(pm.theta, scale * ref, "k:", lw=0.8)
    ax.set_xlabel("theta")
    ax.set_title("N=3 modes vs scaled P_3^k(-cos theta) (dotted)")
    ax.legend()
    fig.tight_layout()
    fig.savefig("polar_legendre.png", dpi=120)
    print("\nwrote polar_legendre.png")
