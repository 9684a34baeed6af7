import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from curalg import ellip as E
from curalg.errors import CoincidentPointError, ConvergenceError, DomainError
from curalg.specfun import EllipticModulus, omega

from strategies import ell_elements

M = EllipticModulus.from_k(0.6)
SWAP = np.eye(4)[[0, 2, 1, 3]]


@settings(max_examples=25)
@given(ell_elements(M), ell_elements(M), ell_elements(M), st.sampled_from([0.0, 1.0]))
def test_jacobi_and_antisymmetry(x, y, z, c):
    try:
        assert E.ell_jacobi_residual(x, y, z, c, M) < 1e-8
        assert (E.ell_bracket(x, y, c, M) + E.ell_bracket(y, x, c, M)).max_abs() < 1e-12
    except CoincidentPointError:
        pass


def test_bracket_of_distinct_cyclic_generators():
    x = E.sgen(1, "plus", 0.3 - 0.4j)
    y = E.sgen(2, "plus", -0.2 - 0.9j)
    z = E.ell_bracket(x, y, 1.0, M)
    assert z.central == 0
    assert {t.a for t in z.terms} == {3}


@pytest.mark.parametrize("a", [1, 2, 3])
def test_cocycle_closed_form_vs_tau_difference(a):
    for w in (0.4 - 0.3j, -0.7 + 0.5j, 1.1 - 0.9j):
        closed = E.ell_cocycle(a, a, w, M, "closed")
        assert abs(closed - E.ell_cocycle(a, a, w, M, "numeric_tau_fd")) < 1e-6
    assert E.ell_cocycle(1, 2, 0.4 - 0.3j, M) == 0


def test_level_zero_cobracket_is_cyclic():
    for a, (b, c) in {1: (2, 3), 2: (3, 1), 3: (1, 2)}.items():
        (w,) = E.ell_cobracket(a, -0.3j)
        assert w.left[0] == b and w.right[0] == c


@pytest.mark.parametrize("a", [1, 2, 3])
def test_fourier_series_reproduces_omega(a):
    for w in (0.3 - 0.5j, -1.0 - 1.2j, 0.8 - 0.2j):
        assert abs(E.sigma_fourier_series(a, w, None, M) - omega(a, w, M)) < 1e-10
    with pytest.raises(ConvergenceError):
        E.sigma_fourier_series(a, 0.3 + 0.5j, None, M)


def test_fourier_parity_selection():
    assert E.fourier_coeff(3, 1, M) == 0 and E.fourier_coeff(1, 2, M) == 0
    assert E.fourier_coeff(1, 1, M) != 0 and E.fourier_coeff(3, 2, M) != 0


def test_fourier_scale_calibration():
    cal = E.calibrate_fourier_scale(1, M)
    assert abs(cal.ratio_to_quarter_period - 1) < 1e-7
    assert cal.residual < 1e-7


def test_series_bracket():
    for a, b in ((1, 2), (2, 3), (3, 1)):
        assert E.series_bracket_check(a, b, -0.1 - 1.3j, 0.2 - 0.3j, M) < 1e-10
    with pytest.raises(DomainError):
        E.series_bracket_check(2, 1, -0.1 - 1.3j, 0.2 - 0.3j, M)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_mode_central_term(a):
    assert E.mode_central_check(a, 0.2 - 0.9j, M)[0] < 1e-8


def test_mode_relations():
    mb = E.ell_mode_bracket(1, 2, 2, -1, 1.0)
    assert mb.index == 3 and mb.mode == 1 and mb.coeff == 2j
    mb = E.ell_mode_bracket(3, 2, 3, -2, 1.0)
    assert mb.index is None and mb.central == 2.0


@pytest.mark.parametrize("a,k", [(1, 1), (2, 3), (3, 2), (3, -2)])
def test_mode_cobracket_consistency(a, k):
    assert E.mode_cobracket_consistency(a, k, M) < 1e-12


pts = st.builds(complex, st.floats(-0.8, 0.8), st.floats(-0.8, 0.8))


@given(pts, pts, st.sampled_from([0.3, 0.6, 0.9]))
def test_elliptic_cybe(u, v, k):
    m = EllipticModulus.from_k(k)
    u, v = complex(u.real * m.K, u.imag * m.K_prime), complex(v.real * m.K, v.imag * m.K_prime)
    assume(min(abs(u), abs(v), abs(u - v)) > 0.1)
    assert E.ell_cybe_residual(u, v, m) < 1e-9


def test_r_unitarity_and_tau_form():
    u = 0.3 - 0.2j
    assert np.abs(E.r_ell(u, M) + SWAP @ E.r_ell(-u, M) @ SWAP).max() < 1e-13
    assert np.abs(E.r_ell_tau(u, M.tau) - E.r_ell(u, M)).max() < 1e-12
    assert np.abs(E.dr_dtau(u, M, "closed") - E.dr_dtau(u, M, "numeric_tau_fd")).max() < 1e-6


@pytest.mark.parametrize("c", [0.0, 1.0])
def test_ll_structure(c):
    assert E.ell_ll_check(0.3 - 0.4j, -0.2 - 1.1j, M, c) < 1e-8


@given(st.floats(-0.6, 0.6), st.floats(0.05, 0.5), st.floats(0.1, 0.9))
def test_baxter_is_projectively_sklyanin(v, hbar, kt):
    assume(abs(v) > 1e-3)
    assert E.baxter_to_sklyanin(v, hbar, kt).residual < 1e-8


def test_classical_limit():
    lim = E.ell_classical_limit(0.4 - 0.3j, M, (1e-2, 5e-3, 2.5e-3))
    assert all(abs(r - 2) < 0.1 for r in lim.a_ratios)
    # the shift statement carries an O(zeta) remainder: it halves, and one
    # Richardson step removes it
    assert all(abs(r - 2) < 0.1 for r in lim.b_ratios)
    assert lim.b_extrapolated < 1e-4
    with pytest.raises(DomainError):
        E.ell_classical_limit(0.4 - 0.3j, M, (1e-2, 2e-2))
