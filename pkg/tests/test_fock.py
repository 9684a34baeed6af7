import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curalg import fock as F
from curalg.errors import DomainError
from curalg.quad import ContourSpec
from curalg.quad import TestFunction as Packet
from curalg.trigcur import TrigParams

upper = st.builds(complex, st.floats(-1, 1), st.floats(0.2, 1.5))


@given(upper)
def test_hh_two_point(w):
    assert abs(F.two_point("h", w, "h", 0.0) * w ** 2 + 2) < 1e-7


def test_ef_constant_is_minus_one_and_symmetric():
    A = F.ef_constant()
    assert abs(A + 1) < 1e-8
    w = 0.3 + 0.8j
    assert abs(F.two_point("e", w, "f", 0.0) * w ** 2 - A) < 1e-7
    assert abs(F.two_point("f", w, "e", 0.0) * w ** 2 - A) < 1e-7


def test_ee_two_point_grows_like_w_squared():
    w = 0.5j
    assert abs(F.two_point("e", w, "e", 0.0) / w ** 2 + math.exp(4 * F.EULER_GAMMA)) < 1e-7


@given(upper, upper, st.sampled_from(["ef", "ee"]))
def test_exponent_difference_laws(w1, w2, kind):
    res, diff = F.exponent_difference(kind, w1, w2)
    sign = -2 if kind == "ef" else 2
    assert res < 1e-6
    assert abs(diff - sign * cmath.log(w1 / w2)) < 1e-6


def test_r0_halving_is_stable():
    half = ContourSpec(kind="keyhole_log", epsilon=5e-5, r0=5e-4, tol=1e-12, max_levels=10)
    w1, w2 = 0.3 + 0.4j, -0.5 + 1.1j
    r1 = F.two_point("e", w1, "f", 0.0) / F.two_point("e", w2, "f", 0.0)
    r2 = F.two_point("e", w1, "f", 0.0, half) / F.two_point("e", w2, "f", 0.0, half)
    assert abs(r1 - r2) < 1e-7 * abs(r1)


def test_two_point_needs_ordering():
    with pytest.raises(DomainError):
        F.two_point("e", -0.5j, "f", 0.0)


def test_vacuum_expectation_basics():
    assert F.vacuum_expectation([]) == 1
    assert F.vacuum_expectation([F.current("h", 0.3j)]) == 0


def test_boundary_value_constant():
    assert abs(F.boundary_value_constant() + 2j * math.pi) < 1e-10


def test_smeared_commutator_is_central_and_linear_in_derivative():
    r = F.smeared_commutator_check(Packet(1.3, 0.4, 0.2), 0.0)
    assert r.residual < 1e-6
    assert abs(r.ratio - 2j * math.pi) < 1e-6
    flat = F.smeared_commutator_check(Packet(1.0, 0.0, 0.0), 0.0)
    assert abs(flat.value) < 1e-8


def test_h_action_kernel():
    p = TrigParams(1.0)
    ws = [-0.7j - 0.4, 0.5 - 0.1j]
    e = F.h_action_kernel_check(-0.3j, -0.5j + 0.2, ws, p, "e")
    f = F.h_action_kernel_check(-0.3j, -0.5j + 0.2, ws, p, "f")
    assert e.w_spread < 1e-8
    assert abs(e.fock_kernel + f.fock_kernel) < 1e-8
    # the realised kernel is the negative of the algebra kernel
    assert e.flipped_residual < 1e-6
    assert e.residual > 1.0


def test_h_action_kernel_rejects_unknown_target():
    with pytest.raises(DomainError):
        F.h_action_kernel_check(-0.3j, -0.5j, 0.1j, TrigParams(1.0), "h")
