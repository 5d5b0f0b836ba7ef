import numpy as np
import pytest
from numpy.polynomial import polynomial as npoly

from susychirp import (AnnihilationError, ClosedFormMode, DomainError,
                       LadderOp, apply_ladder, assoc_legendre, eval_mode,
                       ground_mode, mode, node_count, normalized, sech)


def test_ground_mode_norms_match_closed_integrals():
    # int sech^2 = 2, int sech^4 = 4/3; the quadrature scale must agree
    m = ground_mode(1, 1.0)
    np.testing.assert_allclose(m.scale, 1.0 / np.sqrt(2.0), rtol=1e-12)
    m = ground_mode(2, 1.0)
    np.testing.assert_allclose(m.scale, np.sqrt(0.75), rtol=1e-12)
    m = ground_mode(1, 2.0)
    np.testing.assert_allclose(m.scale, 1.0, rtol=1e-12)


def test_ground_mode_shape():
    m = ground_mode(3, 0.5)
    assert m.p == 3
    assert m.coeffs == (1.0,)
    t = np.linspace(-8.0, 8.0, 101)
    np.testing.assert_allclose(eval_mode(m, t)[0], m.scale * sech(0.5 * t) ** 3,
                               rtol=1e-14)


def test_unit_norm_on_wide_grid():
    m, _ = mode(3, 5, 1.0)
    t = np.linspace(-40.0, 40.0, 120001)
    f = eval_mode(m, t)[0]
    np.testing.assert_allclose(np.trapezoid(f * f, t), 1.0, atol=1e-10)


def test_apply_ladder_annihilates_matched_coefficient():
    m = ground_mode(1, 1.0)
    with pytest.raises(AnnihilationError):
        apply_ladder(LadderOp(1.0, 1.0), m)


def test_apply_ladder_simple_image():
    # a = 2 on sech gives -omega sech tanh, i.e. Q goes from 1 to -s
    m = ClosedFormMode(1, (1.0,), 1.0, 1.0)
    out = apply_ladder(LadderOp(2.0, 1.0), m)
    assert out.p == 1
    assert out.coeffs == (0.0, -1.0)
    assert out.scale == 1.0


def test_apply_ladder_carries_omega_factor():
    m = ClosedFormMode(1, (1.0,), 2.0, 1.0)
    out = apply_ladder(LadderOp(3.0, 2.0), m)
    # (p - a) s Q = -2 s, times omega
    assert out.coeffs == (0.0, -4.0)


def test_apply_ladder_matches_differences():
    # the polynomial action equals -f' - a omega tanh f computed numerically
    m = ClosedFormMode(2, (0.3, -1.2, 0.7), 1.3, 0.9)
    a = -1.7
    out = apply_ladder(LadderOp(a, 1.3), m)
    t = np.linspace(-3.0, 3.0, 41)
    h = 1e-3
    fm2 = eval_mode(m, t - 2 * h)[0]
    fm1 = eval_mode(m, t - h)[0]
    fp1 = eval_mode(m, t + h)[0]
    fp2 = eval_mode(m, t + 2 * h)[0]
    fd1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    f = eval_mode(m, t)[0]
    expect = -fd1 - a * 1.3 * np.tanh(1.3 * t) * f
    np.testing.assert_allclose(eval_mode(out, t)[0], expect, atol=1e-9)


def test_apply_ladder_omega_mismatch():
    with pytest.raises(DomainError):
        apply_ladder(LadderOp(1.0, 2.0), ground_mode(1, 1.0))


def test_apply_ladder_normalize_flag():
    m = ClosedFormMode(1, (1.0,), 1.0, 1.0)
    out = apply_ladder(LadderOp(2.0, 1.0), m, normalize=True)
    t = np.linspace(-30.0, 30.0, 40001)
    f = eval_mode(out, t)[0]
    np.testing.assert_allclose(np.trapezoid(f * f, t), 1.0, atol=1e-10)
    assert npoly.polyval(-1.0, out.coeffs) > 0.0


def test_eval_mode_derivatives_match_differences():
    m, _ = mode(2, 4, 1.0)
    t = np.linspace(-4.0, 4.0, 37)
    h = 1e-3
    f = eval_mode(m, t)[0]
    fm2 = eval_mode(m, t - 2 * h)[0]
    fm1 = eval_mode(m, t - h)[0]
    fp1 = eval_mode(m, t + h)[0]
    fp2 = eval_mode(m, t + 2 * h)[0]
    fd1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    fd2 = (-fm2 + 16.0 * fm1 - 30.0 * f + 16.0 * fp1 - fp2) / (12.0 * h * h)
    _, fp, fpp = eval_mode(m, t)
    np.testing.assert_allclose(fp, fd1, atol=1e-9)
    np.testing.assert_allclose(fpp, fd2, atol=1e-7)


def test_mode_deepest_is_ground():
    m, energy = mode(1, 4, 1.0)
    g = ground_mode(4, 1.0)
    assert m.p == 4
    assert energy == -16.0
    np.testing.assert_allclose(m.scale * np.asarray(m.coeffs),
                               g.scale * np.asarray(g.coeffs), rtol=1e-12)


def test_mode_second_of_two():
    # one raising step: sech^2 well, shallow mode proportional to sech tanh
    m, energy = mode(2, 2, 1.0)
    assert energy == -1.0
    assert m.p == 1
    assert m.degree == 1
    assert m.coeffs[0] == 0.0
    assert m.coeffs[1] < 0.0


def test_mode_eigenvalues():
    for N in range(1, 7):
        for n in range(1, N + 1):
            k = N - n + 1
            for om in (0.5, 1.0, 2.0):
                _, energy = mode(n, N, om)
                assert energy == -(k ** 2) * om ** 2


def test_mode_sign_convention():
    for N in range(1, 7):
        for n in range(1, N + 1):
            m, _ = mode(n, N, 1.0)
            assert npoly.polyval(-1.0, m.coeffs) > 0.0


def test_mode_proportional_to_legendre_in_tanh():
    # independent recurrence construction of the same eigenfunctions
    t = np.linspace(-3.0, 3.0, 301)
    for N in range(1, 7):
        for n in range(1, N + 1):
            k = N - n + 1
            m, _ = mode(n, N, 1.0)
            f = eval_mode(m, t)[0]
            p = assoc_legendre(N, k, np.tanh(t))
            msk = np.abs(p) > 1e-3 * np.max(np.abs(p))
            ratio = f[msk] / p[msk]
            np.testing.assert_allclose(ratio, ratio[0], rtol=1e-10)


def test_node_counts():
    for N in (2, 6):
        for n in range(1, N + 1):
            m, _ = mode(n, N, 1.0)
            assert node_count(m) == n - 1


def test_mode_validation():
    with pytest.raises(DomainError):
        mode(0, 3, 1.0)
    with pytest.raises(DomainError):
        mode(4, 3, 1.0)
    with pytest.raises(DomainError):
        mode(1, 0, 1.0)


def test_normalized_idempotent():
    m, _ = mode(3, 4, 1.0)
    again = normalized(m)
    assert again.coeffs == m.coeffs
    np.testing.assert_allclose(again.scale, m.scale, rtol=1e-12)


def test_closed_form_mode_validation():
    with pytest.raises(DomainError):
        ClosedFormMode(-1, (1.0,), 1.0, 1.0)
    with pytest.raises(DomainError):
        ClosedFormMode(1, (0.0, 0.0), 1.0, 1.0)
    with pytest.raises(DomainError):
        ClosedFormMode(1, (1.0,), -1.0, 1.0)
    with pytest.raises(DomainError):
        ClosedFormMode(1, (1.0,), 1.0, 0.0)


def test_mode_even_odd_parity():
    # Q alternates parity with the step count, so f is even or odd
    t = np.linspace(0.2, 5.0, 40)
    for N in (3, 5):
        for n in range(1, N + 1):
            f_pos = eval_mode(mode(n, N, 1.0)[0], t)[0]
            f_neg = eval_mode(mode(n, N, 1.0)[0], -t)[0]
            sign = 1.0 if (n - 1) % 2 == 0 else -1.0
            np.testing.assert_allclose(f_neg, sign * f_pos, rtol=1e-12)
