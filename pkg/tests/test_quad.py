import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from curalg.errors import ConvergenceError, DomainError
from curalg.quad import ContourSpec, gauss_legendre, integrate_keyhole_log, integrate_line, integrate_pv
from curalg.quad import TestFunction as Packet


def test_gauss_legendre_polynomial_and_exp():
    assert abs(gauss_legendre(lambda x: x ** 7, 0, 1).value - 1 / 8) < 1e-14
    assert abs(gauss_legendre(np.exp, -1, 2).value - (math.e ** 2 - math.exp(-1))) < 1e-13


def test_gauss_legendre_nonconvergence():
    with pytest.raises(ConvergenceError):
        gauss_legendre(lambda x: np.sin(1e6 * x ** 2), 0, 10, max_levels=2)


def test_gauss_legendre_overflow_is_reported():
    with pytest.raises(ConvergenceError):
        with np.errstate(over="ignore"):
            gauss_legendre(lambda x: np.exp(1e3 * x), 0, 10)


@given(st.floats(0.3, 3.0), st.floats(-2, 2), st.floats(-1, 1))
def test_gaussian_line_integral(alpha, beta, offset):
    s = Packet(alpha, beta, 0.2)
    val = integrate_line(s, ContourSpec(offset=offset, tol=1e-12)).value
    exact = math.sqrt(math.pi / alpha) * np.exp(-beta ** 2 / (4 * alpha) + 1j * beta * 0.2)
    assert abs(val - exact) < 1e-10


def test_line_integral_is_offset_independent_for_entire_integrand():
    s = Packet(1.3, 0.7, -0.4)
    vals = [integrate_line(s, ContourSpec(offset=d)).value for d in (-0.8, 0.0, 0.5)]
    assert max(abs(v - vals[0]) for v in vals) < 1e-10


def test_principal_value_of_shifted_pole():
    # symmetrised pv integral as an mpmath oracle
    f = lambda x: np.exp(-(x - 1) ** 2) / x
    ref = float(mpmath.quad(lambda x: (mpmath.exp(-(x - 1) ** 2) - mpmath.exp(-(-x - 1) ** 2)) / x, [0, mpmath.inf]))
    val = integrate_pv(f, ContourSpec(kind="principal_value", offset=0.3)).value
    assert abs(val - ref) < 1e-9


def test_keyhole_of_log_gives_integral_of_g():
    # the two log branches differ by 2 pi i, so the keyhole gives int_0^inf g
    g = lambda lam: np.exp(-lam) * (1 + lam)
    val = integrate_keyhole_log(g, ContourSpec(kind="keyhole_log", epsilon=1e-4, r0=1e-2)).value
    assert abs(val - 2.0) < 1e-9


def test_keyhole_simple_pole_is_r0_independent():
    g = lambda lam: np.exp(-lam) / lam
    a = integrate_keyhole_log(g, ContourSpec(kind="keyhole_log", epsilon=1e-5, r0=1e-2, tol=1e-12)).value
    b = integrate_keyhole_log(g, ContourSpec(kind="keyhole_log", epsilon=1e-5, r0=5e-3, tol=1e-12)).value
    assert abs(a - b) < 1e-9


def test_contour_spec_validation():
    with pytest.raises(DomainError):
        ContourSpec(kind="spiral")
    with pytest.raises(DomainError):
        ContourSpec(kind="keyhole_log", epsilon=0.5, r0=0.1)
    with pytest.raises(DomainError):
        Packet(alpha=-1.0)
