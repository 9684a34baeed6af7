import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curalg import ratlim as R
from curalg import trigcur as T
from curalg.errors import CoincidentPointError, DomainError


@st.composite
def rat_elements(draw):
    terms = []
    for _ in range(draw(st.integers(1, 2))):
        b = draw(st.sampled_from(T.BRANCHES))
        y = draw(st.floats(0.1, 1.5))
        u = complex(draw(st.floats(-1.5, 1.5)), -y if b == "plus" else y)
        terms.append(R.RatGeneratorTerm(draw(st.sampled_from(T.GTYPES)), b, u,
                                        complex(draw(st.floats(-2, 2)), draw(st.floats(-2, 2)))))
    return T.CurrentElement(terms)


@given(rat_elements(), rat_elements(), rat_elements(), st.sampled_from([0.0, 1.0, 2.5]))
def test_rational_jacobi_and_antisymmetry(x, y, z, c):
    try:
        assert R.rat_jacobi_residual(x, y, z, c) < 1e-9
        assert (R.rat_bracket(x, y, c) + R.rat_bracket(y, x, c)).max_abs() < 1e-12
    except CoincidentPointError:
        pass


@given(rat_elements(), rat_elements(), rat_elements())
def test_rational_pairing_invariant(x, y, z):
    try:
        a = R.rat_pair(R.rat_bracket(x, y, 1.0), z)
        b = R.rat_pair(x, R.rat_bracket(y, z, 1.0))
    except CoincidentPointError:
        return
    assert abs(a - b) <= 1e-9 * max(1.0, abs(a))


def test_pairing_values():
    x = R.rgen("E", "plus", 0.2 - 0.3j)
    y = R.rgen("F", "minus", -0.1 + 0.4j)
    assert abs(R.rat_pair(x, y) - 1j / (x.terms[0].point - y.terms[0].point)) < 1e-14
    assert R.rat_pair(x, R.rgen("F", "plus", -0.1 - 0.4j)) == 0


def test_half_plane_validation():
    with pytest.raises(DomainError):
        R.rgen("E", "plus", 0.3j)
    with pytest.raises(DomainError):
        R.rgen("E", "minus", -0.3j)


def test_rational_kernel_and_step():
    assert R.rat_kernel(2j) == 0.5
    assert R.theta(0.0) == 0.5 and R.theta(-1e-3) == 0.0 and R.theta(2.0) == 1.0


@pytest.mark.parametrize("g", T.GTYPES)
def test_trigonometric_kernels_converge_quadratically(g):
    lim = R.eta_to_zero_check(g, 0.3 - 0.4j, (0.04, 0.02, 0.01))
    assert all(abs(math.log2(r) - 2) < 0.05 for r in lim.ratios)


def test_eta_limit_validation():
    with pytest.raises(DomainError):
        R.eta_to_zero_check("E", 0.3 - 40j, (0.04, 0.02))


@pytest.mark.parametrize("b", T.BRANCHES)
def test_laplace_representation(b):
    u = 0.3 - 0.5j if b == "plus" else -0.2 + 0.8j
    assert R.laplace_check(b, u, (0.0, 0.4, -1.0)) < 1e-10


def test_mode_cobracket_interval():
    cb = R.rat_mode_cobracket("E", 0.7)
    assert cb.interval == (0.0, 0.7) and abs(cb.central - 0.35) < 1e-15
    assert R.rat_mode_cobracket("H", 0.0).central == 0


@pytest.mark.parametrize("xt", T.GTYPES)
@pytest.mark.parametrize("side", [1, -1])
def test_double_duality(xt, side):
    tests = [R.HalfLineTest(s, 2, 1.1, 0.1) for s in (side, -side, -side)]
    for yt, zt in (("E", "F"), ("H", "E"), ("F", "H")):
        res, lhs, rhs = R.duality_check(xt, yt, zt, side, *tests)
        assert res < 1e-7


def test_double_duality_rejects_wrong_supports():
    t = R.HalfLineTest(1)
    with pytest.raises(DomainError):
        R.duality_check("E", "F", "H", 1, t, t, t)
