import numpy as np
import pytest

from susychirp import (ChirpProfile, ChirpFamily, DomainError, Grid,
                       SingularityError, Superpotential, SuperpotentialFamily,
                       chirp_over, chirp_under, eval_W,
                       riccati_residual_chain, riccati_residual_fermionic,
                       sech, superpotential_over, superpotential_under)


def test_sech_matches_cosh_reciprocal():
    t = np.linspace(-30.0, 30.0, 401)
    np.testing.assert_allclose(sech(t), 1.0 / np.cosh(t), rtol=1e-15)


def test_sech_no_overflow_far_out():
    with np.errstate(over="raise"):
        v = sech(np.array([-800.0, 800.0]))
    assert np.all(np.isfinite(v))
    assert np.all(v >= 0.0)
    assert sech(np.array([0.0]))[0] == 1.0


def test_superpotential_under_values():
    t = np.linspace(-4.0, 4.0, 101)
    val, der = eval_W(superpotential_under(2, 1.0), t)
    np.testing.assert_allclose(val, -2.0 * np.tanh(t), rtol=1e-15)
    np.testing.assert_allclose(der, -2.0 / np.cosh(t) ** 2, rtol=1e-14, atol=1e-300)


def test_superpotential_over_values():
    t = np.linspace(-0.6, 0.6, 101)
    val, der = eval_W(superpotential_over(2.0), t)
    np.testing.assert_allclose(val, 2.0 * np.tan(2.0 * t), rtol=1e-14, atol=1e-15)
    np.testing.assert_allclose(der, 4.0 / np.cos(2.0 * t) ** 2, rtol=1e-14)


def test_eval_W_derivative_against_differences():
    # fourth-order central differences of W reproduce the closed-form W'
    w = superpotential_under(3, 0.7)
    h = 1e-3
    t = np.linspace(-3.0, 3.0, 61)
    vm2, _ = eval_W(w, t - 2 * h)
    vm1, _ = eval_W(w, t - h)
    vp1, _ = eval_W(w, t + h)
    vp2, _ = eval_W(w, t + 2 * h)
    fd = (vm2 - 8.0 * vm1 + 8.0 * vp1 - vp2) / (12.0 * h)
    _, der = eval_W(w, t)
    np.testing.assert_allclose(fd, der, atol=1e-9)


def test_chirp_under_values():
    t = np.linspace(-5.0, 5.0, 201)
    prof = chirp_under(2, 1.0)
    np.testing.assert_allclose(prof.evaluate(t), -6.0 / np.cosh(t) ** 2,
                               rtol=1e-14, atol=1e-300)
    assert prof.evaluate(np.array([0.0]))[0] == -6.0
    assert prof.domain == (-np.inf, np.inf)


@pytest.mark.parametrize("omega", [0.5, 2.0, 4.0])
def test_chirp_under_scaling_exact(omega):
    # power-of-two rates commute exactly with the t -> omega t stretch
    t = np.linspace(-3.0, 3.0, 101)
    a = chirp_under(3, omega).evaluate(t)
    b = omega ** 2 * chirp_under(3, 1.0).evaluate(omega * t)
    np.testing.assert_array_equal(a, b)


def test_chirp_over_value_and_domain():
    prof = chirp_over(1.0)
    lo, hi = prof.domain
    assert hi == np.pi / 2.0 and lo == -hi
    assert prof.evaluate(np.array([0.0]))[0] == 2.0
    np.testing.assert_allclose(prof.evaluate(np.array([1.0]))[0],
                               6.851037641629518, rtol=1e-15)


def test_chirp_over_rejects_outside_domain():
    prof = chirp_over(1.0)
    with pytest.raises(DomainError):
        prof.evaluate(np.array([1.6]))
    with pytest.raises(DomainError):
        prof.evaluate(np.array([-1.6, 0.0]))


def test_chirp_over_pole_guard():
    with pytest.raises(SingularityError):
        chirp_over(1.0).evaluate(np.array([np.pi / 2.0 - 1e-9]))
    with pytest.raises(SingularityError):
        eval_W(superpotential_over(1.0), np.array([np.pi / 2.0 - 1e-9]))


def test_tan_rejects_outside_domain():
    with pytest.raises(DomainError):
        eval_W(superpotential_over(1.0), np.array([2.0]))


def test_profiles_are_even():
    t = np.linspace(0.1, 4.0, 37)
    under = chirp_under(4, 1.3)
    np.testing.assert_array_equal(under.evaluate(t), under.evaluate(-t))
    t = np.linspace(0.05, 1.3, 23)
    over = chirp_over(1.0)
    np.testing.assert_array_equal(over.evaluate(t), over.evaluate(-t))


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_fermionic_residual_base_underdamped(omega):
    g = Grid(-10.0 / omega, 10.0 / omega, 2001)
    w = superpotential_under(1, omega)
    assert riccati_residual_fermionic(w, -omega ** 2, g) < 1e-12


def test_fermionic_residual_base_overdamped():
    g = Grid(-1.4, 1.4, 2001)
    w = superpotential_over(1.0)
    assert riccati_residual_fermionic(w, 1.0, g) < 1e-12


def test_fermionic_residual_constant_offset():
    # flipping the sign of the constant coefficient leaves exactly 2 omega^2
    g = Grid(-10.0, 10.0, 2001)
    w = superpotential_under(1, 1.0)
    assert abs(riccati_residual_fermionic(w, 1.0, g) - 2.0) < 1e-12
    assert abs(riccati_residual_fermionic(w, -0.5, g) - 0.5) < 1e-12


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_chain_residuals_all_levels(omega):
    g = Grid(-10.0 / omega, 10.0 / omega, 2001)
    for n in range(1, 9):
        res = riccati_residual_chain(n, omega, g)
        assert res.fermionic < 1e-10
        assert res.bosonic < 1e-10


def test_chain_level_one_reduces_to_base():
    # at n=1 the fermionic identity is the constant-coefficient one
    g = Grid(-8.0, 8.0, 1501)
    res = riccati_residual_chain(1, 1.0, g)
    base = riccati_residual_fermionic(superpotential_under(1, 1.0), -1.0, g)
    np.testing.assert_allclose(res.fermionic, base, atol=1e-15)


def test_chain_telescoping():
    # successive profiles differ by -2 n omega^2 sech^2
    t = np.linspace(-6.0, 6.0, 501)
    for n in range(2, 7):
        step = chirp_under(n, 1.0).evaluate(t) - chirp_under(n - 1, 1.0).evaluate(t)
        np.testing.assert_allclose(step, -2.0 * n * sech(t) ** 2, atol=1e-12)


def test_validation_errors():
    with pytest.raises(DomainError):
        chirp_under(0, 1.0)
    with pytest.raises(DomainError):
        superpotential_under(0, 1.0)
    with pytest.raises(DomainError):
        superpotential_under(1, -1.0)
    with pytest.raises(DomainError):
        Superpotential(SuperpotentialFamily.TAN, 2, 1.0)
    with pytest.raises(DomainError):
        ChirpProfile(ChirpFamily.SEC_SQUARED, 2, 1.0)
    with pytest.raises(DomainError):
        riccati_residual_chain(0, 1.0, Grid(-1.0, 1.0, 11))
