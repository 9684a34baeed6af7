import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from curalg.errors import DomainError, PoleError
from curalg.specfun import (EllipticModulus, addition_residual, d_omega_dtau, d_omega_dtau_closed,
                            elliptic_K, gamma, jacobi_epsilon, jacobi_sncndn, loggamma, modulus_from_tau,
                            omega, omega_tau, sncndn_tau)

moduli = st.floats(0.05, 0.95)
coords = st.floats(-3.0, 3.0)


def mp_sncndn(u, k):
    m = k * k
    return tuple(complex(mpmath.ellipfun(f, u, m=m)) for f in ("sn", "cn", "dn"))


@given(coords, coords, moduli)
def test_sncndn_matches_mpmath(x, y, k):
    u = complex(x, y)
    try:
        ours = jacobi_sncndn(u, k)
    except PoleError:
        return
    ref = mp_sncndn(u, k)
    assume(max(abs(r) for r in ref) < 1e6)
    for a, b in zip(ours, ref):
        assert abs(a - b) <= 1e-10 * max(1.0, abs(b))


@given(coords, coords, moduli)
def test_quadratic_identities(x, y, k):
    try:
        sn, cn, dn = jacobi_sncndn(complex(x, y), k)
    except PoleError:
        return
    scale = max(1.0, abs(sn) ** 2)
    assert abs(sn * sn + cn * cn - 1) / scale < 1e-11
    assert abs(dn * dn + k * k * sn * sn - 1) / scale < 1e-11


def test_sncndn_real_axis_against_scipy_convention():
    k = 0.6
    K, _ = elliptic_K(k)
    sn, cn, dn = jacobi_sncndn(K, k)
    assert abs(sn - 1) < 1e-14 and abs(cn) < 1e-14 and abs(dn - math.sqrt(1 - k * k)) < 1e-14


def test_pole_at_iKprime():
    k = 0.6
    _, Kp = elliptic_K(k)
    with pytest.raises(PoleError):
        jacobi_sncndn(1j * Kp, k)


def test_modulus_out_of_range():
    with pytest.raises(DomainError):
        jacobi_sncndn(0.3, 1.5)


@given(moduli)
def test_complete_integrals(k):
    K, Kp = elliptic_K(k)
    assert abs(K - float(mpmath.ellipk(k * k))) < 1e-13 * K
    assert abs(Kp - float(mpmath.ellipk(1 - k * k))) < 1e-13 * Kp


@given(st.floats(0.3, 3.0))
def test_modulus_from_tau_roundtrip(t):
    m = modulus_from_tau(1j * t)
    back = EllipticModulus.from_k(m.k)
    assert abs(back.tau - 1j * t) < 1e-11
    assert abs(back.K - m.K) < 1e-11 * m.K


@given(st.floats(-4, 4), st.floats(-4, 4))
def test_gamma_matches_mpmath(x, y):
    z = complex(x, y)
    assume(min(abs(z + n) for n in range(0, 6)) > 1e-3)
    ref = complex(mpmath.gamma(z))
    assert abs(gamma(z) - ref) <= 1e-12 * abs(ref)
    assert abs(cmath.exp(loggamma(z)) - ref) <= 1e-11 * abs(ref)


def test_gamma_poles():
    for n in (0, -1, -5):
        with pytest.raises(PoleError):
            gamma(n)


def test_loggamma_branch_is_continuous():
    ys = [0.5 + 0.01 * i for i in range(200)]
    vals = [loggamma(complex(-3.5, y)).imag for y in ys]
    assert max(abs(a - b) for a, b in zip(vals, vals[1:])) < 0.1


@given(moduli, coords, st.floats(-0.8, 0.8))
def test_omega_definitions(k, x, y):
    m = EllipticModulus.from_k(k)
    u = complex(x * m.K / 3, y * m.K_prime)
    assume(abs(u) > 0.05)
    sn, cn, dn = jacobi_sncndn(u, k)
    assert abs(omega(1, u, m) - 1 / sn) <= 1e-12 * abs(1 / sn)
    assert abs(omega(2, u, m) - dn / sn) <= 1e-12 * max(1, abs(dn / sn))
    assert abs(omega(3, u, m) - cn / sn) <= 1e-12 * max(1, abs(cn / sn))
    for a in (1, 2, 3):
        assert abs(omega(a, -u, m) + omega(a, u, m)) <= 1e-12 * max(1, abs(omega(a, u, m)))


def test_tau_parametrisation_agrees_with_k():
    m = EllipticModulus.from_k(0.6)
    u = 0.4 - 0.3j
    sn, cn, dn, k = sncndn_tau(u, m.tau)
    assert abs(k - 0.6) < 1e-12
    assert abs(sn - jacobi_sncndn(u, 0.6)[0]) < 1e-12
    for a in (1, 2, 3):
        assert abs(omega_tau(a, u, m.tau) - omega(a, u, m)) < 1e-11


@given(moduli, st.floats(-0.9, 0.9), st.floats(-0.8, 0.8), st.floats(-0.9, 0.9), st.floats(-0.8, 0.8))
def test_addition_theorem(k, x1, y1, x2, y2):
    m = EllipticModulus.from_k(k)
    u = complex(x1 * m.K, y1 * m.K_prime)
    v = complex(x2 * m.K, y2 * m.K_prime)
    assume(abs(u) > 0.1 and abs(v) > 0.1 and abs(u - v) > 0.1)
    assert addition_residual(u, v, m) < 1e-10


def test_epsilon_against_mpmath():
    k = 0.7
    m = EllipticModulus.from_k(k)
    for u in (0.3, 0.5 - 0.2j, 1.1 + 0.4j):
        ref = complex(mpmath.quad(lambda t: mpmath.ellipfun("dn", t, m=k * k) ** 2, [0, u]))
        assert abs(jacobi_epsilon(u, m) - ref) < 1e-11


@pytest.mark.parametrize("a", [1, 2, 3])
def test_tau_derivative_closed_vs_difference(a):
    m = EllipticModulus.from_k(0.6)
    u = 0.5 - 0.4j
    assert abs(d_omega_dtau_closed(a, u, m) - d_omega_dtau(a, u, m.tau)) < 1e-7
