"""Command line front end.

Numeric output is deterministic: floats are printed with %.17g so that every
value round-trips exactly and repeated runs are byte-identical.  Exit codes:
0 success, 1 a computed residual or count failed its tolerance, 2 bad usage
or a domain violation.
"""

import argparse
import contextlib
import json
import os
import sys

import numpy as np

from .errors import SusyChirpError
from .factorization import chirp_over, chirp_under, riccati_residual_chain
from .grid import Grid
from .ladder import eval_mode, mode
from .model import OscillatorParams, RegimeTag, classify, gauge_to_newton
from .polar import legendre_residual, proportionality_check, to_polar, assoc_legendre
from .spectral import spectrum_report
from .verification import all_passed, run_invariant_suite


def _fmt(x):
    return "%.17g" % float(x)


def _json(obj):
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ",".join(json.dumps(str(k)) + ":" + _json(v) for k, v in obj.items()) + "}"
    raise TypeError("cannot serialize %r" % type(obj))


@contextlib.contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        fh = open(path, "w")
        try:
            yield fh
        finally:
            fh.close()


def _write_csv(stream, header, columns):
    stream.write(",".join(header) + "\n")
    for row in zip(*columns):
        stream.write(",".join(_fmt(v) for v in row) + "\n")


def _grid_from_args(args, span, points):
    tmin = args.tmin if args.tmin is not None else -span
    tmax = args.tmax if args.tmax is not None else span
    count = args.points if args.points is not None else points
    return Grid(tmin, tmax, count)


def _add_grid_flags(p):
    p.add_argument("--tmin", type=float, default=None, help="left grid end")
    p.add_argument("--tmax", type=float, default=None, help="right grid end")
    p.add_argument("--points", type=int, default=None, help="number of grid points")


def cmd_classify(args):
    regime = classify(OscillatorParams(args.m, args.gamma, args.k), tol=args.tol)
    payload = {"regime": regime.tag.value, "omega_d_sq": regime.omega_sq,
               "omega": regime.omega}
    with _sink(args.out) as fh:
        fh.write(_json(payload) + "\n")
    return 0


def cmd_chirp(args):
    if args.regime == "under":
        profile = chirp_under(args.N, args.omega)
        grid = _grid_from_args(args, 15.0 / args.omega, 4001)
    else:
        profile = chirp_over(args.omega)
        grid = _grid_from_args(args, 1.4 / args.omega, 2001)
    t = grid.points()
    vals = profile.evaluate(t)
    with _sink(args.out) as fh:
        _write_csv(fh, ["t", "omega_sq"], [t, vals])
    return 0


def cmd_modes(args):
    grid = _grid_from_args(args, 15.0 / args.omega, 4001)
    t = grid.points()
    cols = [t]
    header = ["t"]
    table = []
    for n in range(1, args.N + 1):
        m, energy = mode(n, args.N, args.omega)
        cols.append(eval_mode(m, t)[0])
        header.append("y_%d" % n)
        table.append({"column": "y_%d" % n, "k": args.N - n + 1, "eigenvalue": energy})
    sidecar = _json({"N": args.N, "omega": args.omega, "eigenvalues": table})
    with _sink(args.out) as fh:
        _write_csv(fh, header, cols)
    if args.out is None:
        sys.stderr.write(sidecar + "\n")
    else:
        side = os.path.splitext(args.out)[0] + ".eigenvalues.json"
        with open(side, "w") as fh:
            fh.write(sidecar + "\n")
    return 0


def cmd_spectrum(args):
    grid = _grid_from_args(args, 15.0 / args.omega, 4001)
    report = spectrum_report(args.N, args.omega, grid)
    with _sink(args.out) as fh:
        fh.write(_json(report.to_dict()) + "\n")
    tol = args.tol * args.omega ** 2
    worst = float(np.max(report.abs_err))
    if report.negative_count != args.N:
        sys.stderr.write("verification failure: bound_count %d != %d\n"
                         % (report.negative_count, args.N))
        return 1
    if worst > tol:
        sys.stderr.write("verification failure: eigenvalue_error %.3g > %.3g\n"
                         % (worst, tol))
        return 1
    return 0


def cmd_riccati_check(args):
    grid = _grid_from_args(args, 10.0 / args.omega, 2001)
    res = riccati_residual_chain(args.n, args.omega, grid)
    worst = max(res.fermionic, res.bosonic)
    payload = {"n": args.n, "omega": args.omega,
               "fermionic_residual": res.fermionic,
               "bosonic_residual": res.bosonic,
               "tolerance": args.tol, "passed": bool(worst <= args.tol)}
    with _sink(args.out) as fh:
        fh.write(_json(payload) + "\n")
    if worst > args.tol:
        sys.stderr.write("verification failure: factorization_residual %.3g > %.3g\n"
                         % (worst, args.tol))
        return 1
    return 0


def cmd_verify(args):
    results = run_invariant_suite(N=args.N, omega=args.omega,
                                  chain_tol=args.chain_tol, mode_tol=args.mode_tol,
                                  gram_tol=args.gram_tol, spectrum_tol=args.spectrum_tol)
    with _sink(args.out) as fh:
        for r in results:
            fh.write("%-22s %12.5g %12.5g %s\n"
                     % (r.name, r.value, r.tolerance, "PASS" if r.passed else "FAIL"))
        fh.write("all checks passed\n" if all_passed(results) else "FAILURES present\n")
    if not all_passed(results):
        for r in results:
            if not r.passed:
                sys.stderr.write("verification failure: %s %.3g > %.3g\n"
                                 % (r.name, r.value, r.tolerance))
        return 1
    return 0


def cmd_polar(args):
    n = args.N - args.k + 1
    m, _ = mode(n, args.N, 1.0)
    pm = to_polar(m, k=args.k, points=args.points, delta=args.delta)
    resid = legendre_residual(pm, delta=args.delta)
    dev = proportionality_check(pm)
    p = assoc_legendre(pm.N, pm.k, -np.cos(pm.theta))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = pm.values / p
    with _sink(args.out) as fh:
        _write_csv(fh, ["theta", "y", "legendre", "ratio"],
                   [pm.theta, pm.values, p, ratio])
    summary = _json({"N": args.N, "k": args.k, "legendre_residual": resid,
                     "proportionality_deviation": dev,
                     "legendre_tol": args.legendre_tol, "ratio_tol": args.ratio_tol,
                     "passed": bool(resid <= args.legendre_tol and dev <= args.ratio_tol)})
    side = sys.stderr if args.out is None else sys.stdout
    side.write(summary + "\n")
    if resid > args.legendre_tol:
        sys.stderr.write("verification failure: legendre_residual %.3g > %.3g\n"
                         % (resid, args.legendre_tol))
        return 1
    if dev > args.ratio_tol:
        sys.stderr.write("verification failure: proportionality_deviation %.3g > %.3g\n"
                         % (dev, args.ratio_tol))
        return 1
    return 0


def cmd_newton(args):
    params = OscillatorParams(args.m, args.gamma, args.k)
    regime = classify(params)
    om = regime.omega
    if regime.tag is RegimeTag.UNDERDAMPED:
        y1 = lambda t: np.cos(om * t)
        y2 = lambda t: np.sin(om * t)
    elif regime.tag is RegimeTag.CRITICAL:
        y1 = lambda t: np.ones_like(np.asarray(t, dtype=float))
        y2 = lambda t: np.asarray(t, dtype=float)
    else:
        y1 = lambda t: np.cosh(om * t)
        y2 = lambda t: np.sinh(om * t)
    tmin = args.tmin if args.tmin is not None else 0.0
    tmax = args.tmax if args.tmax is not None else 5.0
    count = args.points if args.points is not None else 1001
    grid = Grid(tmin, tmax, count)
    t = grid.points()
    x1 = gauge_to_newton(y1, params)(t)
    x2 = gauge_to_newton(y2, params)(t)
    with _sink(args.out) as fh:
        _write_csv(fh, ["t", "x1", "x2"], [t, x1, x2])
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="susychirp",
        description="Damping regimes, partner frequency chirps, their embedded "
                    "relaxation modes, and independent residual checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="damping regime of (m, gamma, k)")
    p.add_argument("--m", type=float, required=True, help="mass")
    p.add_argument("--gamma", type=float, required=True, help="friction coefficient")
    p.add_argument("--k", type=float, required=True, help="spring constant")
    p.add_argument("--tol", type=float, default=1e-12,
                   help="relative width of the critical band")
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chirp", help="tabulate a partner frequency profile")
    p.add_argument("--regime", choices=["under", "over"], default="under")
    p.add_argument("--N", type=int, default=1, help="well depth index (under only)")
    p.add_argument("--omega", type=float, default=1.0)
    _add_grid_flags(p)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_chirp)

    p = sub.add_parser("modes", help="tabulate the embedded modes of one well")
    p.add_argument("--N", type=int, required=True, help="well depth index")
    p.add_argument("--omega", type=float, default=1.0)
    _add_grid_flags(p)
    p.add_argument("--out", default=None,
                   help="write CSV here; eigenvalues go to a .eigenvalues.json sidecar")
    p.set_defaults(func=cmd_modes)

    p = sub.add_parser("spectrum", help="finite-difference eigenvalue sweep of one well")
    p.add_argument("--N", type=int, required=True, help="well depth index")
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=5e-3,
                   help="eigenvalue tolerance relative to omega^2")
    _add_grid_flags(p)
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("riccati-check", help="first-order factorization residuals at one level")
    p.add_argument("--n", type=int, required=True, help="chain level")
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_grid_flags(p)
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_riccati_check)

    p = sub.add_parser("verify", help="run the bundled invariant suite")
    p.add_argument("--N", type=int, default=3, help="well depth index")
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--chain-tol", type=float, default=1e-10)
    p.add_argument("--mode-tol", type=float, default=1e-9)
    p.add_argument("--gram-tol", type=float, default=1e-8)
    p.add_argument("--spectrum-tol", type=float, default=5e-3)
    p.add_argument("--out", default=None, help="write the table here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polar", help="angular image of one mode vs associated Legendre")
    p.add_argument("--N", type=int, required=True, help="well depth index")
    p.add_argument("--k", type=int, required=True, help="Legendre order = sech power")
    p.add_argument("--points", type=int, default=2001)
    p.add_argument("--delta", type=float, default=0.05,
                   help="angular margin kept away from 0 and pi")
    p.add_argument("--legendre-tol", type=float, default=1e-5)
    p.add_argument("--ratio-tol", type=float, default=1e-7)
    p.add_argument("--out", default=None,
                   help="write CSV here; the JSON summary then goes to stdout")
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("newton", help="two damped-frame solutions of m x'' + gamma x' + k x = 0")
    p.add_argument("--m", type=float, required=True, help="mass")
    p.add_argument("--gamma", type=float, required=True, help="friction coefficient")
    p.add_argument("--k", type=float, required=True, help="spring constant")
    _add_grid_flags(p)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_newton)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SusyChirpError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
