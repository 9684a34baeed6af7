import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curalg import trigcur as T
from curalg.errors import CoincidentPointError, CurrentAlgebraError, DomainError
from curalg.quad import TestFunction as Packet

from strategies import trig_elements, trig_points

P = T.TrigParams(1.0)
levels = st.sampled_from([0.0, 1.0, 2.5])


def close(a, b, tol=1e-12):
    return (a - b).max_abs() <= tol


@given(trig_elements(), trig_elements(), levels)
def test_antisymmetry(x, y, c):
    try:
        assert close(T.bracket(x, y, c, P), -T.bracket(y, x, c, P), 1e-13)
    except CoincidentPointError:
        pass


@given(trig_elements(), trig_elements(), trig_elements(), levels)
def test_jacobi(x, y, z, c):
    try:
        assert T.jacobi_residual(x, y, z, c, P) < 1e-9
    except CoincidentPointError:
        pass


@given(trig_elements(), trig_elements(), trig_elements(), levels)
def test_bilinearity(x, y, z, c):
    try:
        lhs = T.bracket(x + y.scale(0.5 - 1j), z, c, P)
        rhs = T.bracket(x, z, c, P) + T.bracket(y, z, c, P).scale(0.5 - 1j)
    except CoincidentPointError:
        return
    assert close(lhs, rhs, 1e-10 * max(1.0, lhs.max_abs()))


@given(trig_elements(), trig_elements(), trig_elements())
def test_pairing_invariant_and_symmetric(x, y, z):
    try:
        a = T.pair(T.bracket(x, y, 1.0, P), z, P)
        b = T.pair(x, T.bracket(y, z, 1.0, P), P)
    except CoincidentPointError:
        return
    assert abs(a - b) <= 1e-9 * max(1.0, abs(a))
    assert abs(T.pair(x, z, P) - T.pair(z, x, P)) <= 1e-12 * max(1.0, abs(T.pair(x, z, P)))


@given(st.floats(-1, 1), st.floats(-0.9, 0.9), st.floats(0.3, 3.0))
def test_kernel_closed_forms(x, y, eta):
    p = T.TrigParams(eta)
    w = complex(x, y / eta)
    if abs(w) < 1e-3:
        return
    a = math.pi * eta * w
    assert abs(T.kernel("E", "plus", w, p) - 1j * math.pi * eta / cmath.sinh(a)) < 1e-9 * abs(1 / cmath.sinh(a)) * eta
    assert abs(T.kernel("H", "plus", w, p) - 1j * math.pi * eta * cmath.cosh(a) / cmath.sinh(a)) < 1e-9 * eta * max(
        1, abs(cmath.cosh(a) / cmath.sinh(a)))


@given(trig_points("plus"))
def test_branch_relation_of_kernels(u):
    w = -u
    assert abs(T.kernel("E", "minus", w, P) + T.kernel("E", "plus", w + 1j, P)) < 1e-12
    assert abs(T.kernel("H", "minus", w, P) - T.kernel("H", "plus", w + 1j, P)) < 1e-12


def test_strip_and_coincidence_errors():
    x = T.gen("E", "plus", 0.2 - 0.3j)
    with pytest.raises(DomainError):
        T.bracket(T.gen("E", "plus", 0.3j), x, 0, P)
    with pytest.raises(CoincidentPointError):
        T.bracket(T.gen("F", "plus", 0.2 - 0.3j), x, 0, P)
    with pytest.raises(DomainError):
        T.TrigParams(-1.0)
    with pytest.raises(DomainError):
        T.GeneratorTerm("X", "plus", -0.3j)
    assert issubclass(CoincidentPointError, CurrentAlgebraError)


@pytest.mark.parametrize("g1,g2", [("E", "F"), ("F", "E"), ("H", "H")])
@pytest.mark.parametrize("b1,b2", [("plus", "plus"), ("plus", "minus"), ("minus", "minus")])
def test_cocycle_closed_form_matches_boundary_integral(g1, g2, b1, b2):
    pt = {"plus": 0.3 - 0.35j, "minus": -0.2 + 0.6j}
    x = T.GeneratorTerm(g1, b1, pt[b1])
    y = T.GeneratorTerm(g2, b2, pt[b2] - 0.4 + (0.2j if b2 == "plus" else -0.1j))
    assert abs(T.cocycle_B(x, y, P) - T.numeric_B(x, y, P)) < 1e-6


def test_cocycle_vanishes_for_unpaired_types():
    x = T.GeneratorTerm("E", "plus", 0.3 - 0.4j)
    y = T.GeneratorTerm("E", "plus", -0.3 - 0.2j)
    with pytest.raises(DomainError):
        T.cocycle_B(x, y, P)
    assert T.bracket(T.CurrentElement([x]), T.CurrentElement([y]), 1.0, P).max_abs() == 0


@pytest.mark.parametrize("g", T.GTYPES)
def test_sokhotsky(g):
    assert T.sokhotsky_check(g, 0.3, Packet(1.2, 0.5, -0.1), P) < 1e-7


@pytest.mark.parametrize("g", T.GTYPES)
@pytest.mark.parametrize("b", T.BRANCHES)
def test_fourier_kernels(g, b):
    u = 0.4 - 0.3j if b == "plus" else -0.2 + 0.7j
    assert T.fourier_kernel_check(g, b, u, P, zs=(0.0, 0.5)) < 1e-7


@given(trig_elements(eta=2.0), trig_elements(eta=2.0), st.floats(0.6, 2.0), st.sampled_from([0.0, 1.0]))
def test_gauge_map_is_a_homomorphism(x, y, eta_new, c):
    eta = 1.0
    try:
        lhs = T.gauge_map(T.bracket(x, y, c, P), eta, eta_new)
    except CoincidentPointError:
        return
    rhs = T.bracket(T.gauge_map(x, eta, eta_new), T.gauge_map(y, eta, eta_new), c, T.TrigParams(eta_new))
    assert close(lhs, rhs, 1e-10 * max(1.0, lhs.max_abs()))


def test_mode_relations():
    mb = T.mode_bracket(T.ModeSymbol("H", 0.3), T.ModeSymbol("E", 0.4), 1.0)
    assert mb.mode == T.ModeSymbol("E", 0.7) and mb.coeff == 2.0
    mb = T.mode_bracket(T.ModeSymbol("E", 0.5), T.ModeSymbol("F", -0.5), 1.0)
    assert mb.mode.gtype == "H" and mb.central_density == 0.5
    mb = T.mode_bracket(T.ModeSymbol("H", 0.5), T.ModeSymbol("H", -0.5), 2.0)
    assert mb.mode is None and mb.central_density == 2.0


def test_level_zero_cobracket():
    (w,) = T.cobracket0(T.GeneratorTerm("H", "plus", -0.3j))
    assert w.coeff == 2 and w.left[0] == "E" and w.right[0] == "F"
    (w,) = T.cobracket0(T.GeneratorTerm("E", "plus", -0.3j))
    assert w.left[0] == "H" and w.right[0] == "E"


@pytest.mark.parametrize("pair", [("E", "F"), ("H", "E"), ("F", "H")])
def test_smeared_bracket_matches_modes(pair):
    x = T.GeneratorTerm(pair[0], "plus", 0.2 - 0.3j)
    y = T.GeneratorTerm(pair[1], "plus", -0.1 - 0.6j)
    assert T.smeared_bracket_check(x, y, 1.0, P) < 1e-8


@given(st.sampled_from(T.GTYPES), st.floats(-3, 3), st.floats(-3, 3), levels)
def test_mode_cobracket_from_r(g, lam, tau, c):
    if abs(tau) < 0.05 or abs(lam - tau) < 0.05:
        return
    a = T.mode_cobracket_kernel(g, lam, tau, P, c)
    b = T.cobracket_from_r(g, lam, tau, P, c)
    assert abs(a.kernel - b.kernel) < 1e-9 and abs(a.central - b.central) < 1e-9 and b.antisymmetry < 1e-12


@given(trig_elements(eta=2.0), trig_elements(eta=2.0), st.floats(0.6, 2.0))
def test_gauge_map_scales_the_pairing(x, y, eta_new):
    a = T.pair(x, y, P)
    b = T.pair(T.gauge_map(x, 1.0, eta_new), T.gauge_map(y, 1.0, eta_new), T.TrigParams(eta_new))
    assert abs(b - a / eta_new) <= 1e-10 * max(1.0, abs(a))
