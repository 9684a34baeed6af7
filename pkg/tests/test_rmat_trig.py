import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from curalg import rmat_trig as M
from curalg.errors import DomainError

SWAP = np.eye(4)[[0, 2, 1, 3]]
pts = st.builds(complex, st.floats(-1, 1), st.floats(-0.4, 0.4))


@given(pts, pts, st.floats(0.5, 2.0))
def test_cybe(u, v, eta):
    assume(min(abs(u), abs(v), abs(u - v)) > 0.1)
    assert M.cybe_residual(lambda z: M.r0(z, eta), u, v) < 1e-10


@given(pts, st.floats(0.5, 2.0))
def test_r0_unitarity(u, eta):
    assume(abs(u) > 0.1)
    assert np.abs(M.r0(u, eta) + SWAP @ M.r0(-u, eta) @ SWAP).max() < 1e-12


def test_cybe_detects_a_non_solution():
    bad = lambda z: M.r0(z, 1.0) + np.diag([1, 0, 0, 0])
    assert M.cybe_residual(bad, 0.3 - 0.2j, -0.4 + 0.1j) > 1e-3


def test_rbar_structure():
    R = M.rbar(0.3 - 0.2j, 1.0, 0.01).entries
    assert R[0, 0] == 1 and R[3, 3] == 1
    assert abs(R[1, 1] - R[2, 2]) < 1e-15 and abs(R[1, 2] - R[2, 1]) < 1e-15
    assert R[0, 1] == 0 and R[0, 3] == 0


def test_richardson_is_exact_on_linear_remainders():
    hs = [0.1, 0.05, 0.025]
    vals = [2.0 + 3 * h - 5 * h * h for h in hs]
    assert abs(M.richardson(vals, hs) - 2.0) < 1e-12
    with pytest.raises(DomainError):
        M.richardson([1.0, 2.0], [0.1, 0.07])


def test_varrho_truncation_is_stable():
    a = M.varrho_details(0.3 - 0.2j, 1.0, 0.01, P=200)
    b = M.varrho_details(0.3 - 0.2j, 1.0, 0.01, P=400)
    assert abs(a.value - b.value) < 1e-10
    assert b.change < 1e-10


def test_expansion_first_order_and_extrapolated_second_order():
    r = M.expansion_check(0.3 - 0.2j, 1.0)
    assert r.a_monotone
    assert all(abs(math.log2(a / b) - 1) < 0.1 for a, b in zip(r.a, r.a[1:]))
    # the raw quotients carry an O(hbar) remainder that halves with hbar
    assert all(abs(math.log2(a / b) - 1) < 0.1 for a, b in zip(r.b, r.b[1:]))
    assert r.b_extrapolated < 1e-5 and r.c_extrapolated < 1e-5


def test_expansion_grid_validation():
    with pytest.raises(DomainError):
        M.expansion_check(0.3 - 0.2j, 1.0, (1e-2, 2e-2))


@pytest.mark.parametrize("eta", [0.5, 1.0, 2.0])
def test_eta_derivative_identity(eta):
    assert M.eta_derivative_identity(complex(0.3, -0.2 / eta), eta) < 1e-7


def test_varrho0_closed_form():
    u, eta = 0.4 - 0.1j, 1.3
    x = math.pi * eta * u
    import cmath
    ref = 0.5j * math.pi * eta ** 2 * (cmath.cosh(x) / cmath.sinh(x) - x / cmath.sinh(x) ** 2)
    assert abs(M.varrho0(u, eta) - ref) < 1e-13


@pytest.mark.parametrize("c", [0.0, 1.0, 2.5])
def test_ll_structure(c):
    assert M.ll_structure_check(0.3 - 0.4j, -0.2 - 0.7j, 1.0, c) < 1e-9
