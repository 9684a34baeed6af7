"""Rational degeneration of the trigonometric current algebra.

As ``eta -> 0`` both kernels ``i pi eta / sinh(pi eta w)`` and
``i pi eta coth(pi eta w)`` tend to ``i / w``.  Plus generators live in the
lower half plane, minus generators in the upper one, and the Fourier
representation becomes a Laplace transform:

    x_+(u) = + int_0^inf dlam e^{-i lam u} x_hat_{-lam},
    x_-(u) = - int_0^inf dlam e^{+i lam u} x_hat_{+lam}.

The two half-plane subalgebras are isotropic for the pairing and the whole
algebra is their classical double; :func:`duality_check` verifies this on
smeared Fourier modes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import CoincidentPointError, DomainError
from .quad import gauss_legendre
from .trigcur import CurrentElement, GeneratorTerm, ModeSymbol, TrigParams, kernel, mode_bracket

__all__ = [
    "RatGeneratorTerm", "rgen", "rat_kernel", "rat_bracket", "rat_pair",
    "rat_jacobi_residual", "RatModeCobracket", "rat_mode_cobracket", "theta",
    "duality_check", "HalfLineTest", "EtaLimit", "eta_to_zero_check", "laplace_check",
]

HALF_PLANE_MARGIN = 1e-12


class RatGeneratorTerm(GeneratorTerm):
    """Generator of the rational algebra; plus points need ``Im u < 0``, minus ``Im u > 0``."""

    def __post_init__(self):
        super().__post_init__()
        _check_half_plane(self.branch, self.point)


def _check_half_plane(branch: str, u: complex) -> None:
    y = complex(u).imag
    ok = y < -HALF_PLANE_MARGIN if branch == "plus" else y > HALF_PLANE_MARGIN
    if not ok:
        raise DomainError(f"{branch} point {u} is not in its half plane")


def rgen(gtype: str, branch: str, u: complex, coeff: complex = 1.0) -> CurrentElement:
    """Single rational generator, validated against its half plane."""
    return CurrentElement([RatGeneratorTerm(gtype, branch, u, coeff)])


def rat_kernel(w: complex) -> complex:
    """Common limit ``i / w`` of all trigonometric kernels."""
    w = complex(w)
    if w == 0:
        raise CoincidentPointError("rational kernel is singular at w = 0")
    return 1j / w


def _central(b1: str, b2: str, u: complex) -> complex:
    """``B`` for an ordered e-f pair: ``-/+ 1/u^2`` for plus-minus / minus-plus."""
    if b1 == b2:
        return 0j
    return (-1.0 if b1 == "plus" else 1.0) / u ** 2


def _term_bracket(t1: GeneratorTerm, t2: GeneratorTerm, c: float) -> CurrentElement:
    _check_half_plane(t1.branch, t1.point)
    _check_half_plane(t2.branch, t2.point)
    g1, g2 = t1.gtype, t2.gtype
    if (g1, g2) in (("E", "H"), ("F", "H"), ("F", "E")):
        return _term_bracket(t2, t1, c).scale(-1)
    u = t1.point - t2.point
    if abs(u) < 1e-12:
        raise CoincidentPointError(f"coincident points {t1.point} and {t2.point}")
    pref = t1.coeff * t2.coeff
    k = 1j / u

    def at(g, t, coef):
        return GeneratorTerm(g, t.branch, t.point, pref * coef)

    if g1 == g2 and g1 in ("E", "F"):
        return CurrentElement()
    if (g1, g2) == ("H", "E"):
        return CurrentElement([at("E", t1, 2 * k), at("E", t2, -2 * k)])
    if (g1, g2) == ("H", "F"):
        return CurrentElement([at("F", t1, -2 * k), at("F", t2, 2 * k)])
    if (g1, g2) == ("E", "F"):
        return CurrentElement([at("H", t1, k), at("H", t2, -k)],
                              pref * c * _central(t1.branch, t2.branch, u))
    # H, H
    return CurrentElement([], 2 * pref * c * _central(t1.branch, t2.branch, u))


def rat_bracket(x: CurrentElement, y: CurrentElement, c: float) -> CurrentElement:
    """Bracket of the centrally extended rational algebra.

    With ``u = u1 - u2`` and any branches ``s, t``:

        [h_s(u1), e_t(u2)] =  (2i/u) (e_s(u1) - e_t(u2))
        [h_s(u1), f_t(u2)] = -(2i/u) (f_s(u1) - f_t(u2))
        [e_s(u1), f_t(u2)] =  (i/u) (h_s(u1) - h_t(u2)) + c B_st(u)
        [h_s(u1), h_t(u2)] =  2 c B_st(u)

    where ``B`` vanishes for equal branches and equals ``-1/u^2`` for
    ``(plus, minus)``, ``+1/u^2`` for ``(minus, plus)``.
    """
    acc = CurrentElement()
    for t1 in x.terms:
        for t2 in y.terms:
            acc = acc + _term_bracket(t1, t2, c)
    return acc


def rat_pair(x: CurrentElement, y: CurrentElement) -> complex:
    """Pairing of the classical double.

    ``<e_+(u1), f_-(u2)> = i/(u1 - u2)``, ``<h_+(u1), h_-(u2)> = 2i/(u1 - u2)``;
    the reversed branch order carries the opposite sign and same-branch
    pairings vanish.
    """
    total = 0j
    for t1 in x.terms:
        for t2 in y.terms:
            if t1.branch == t2.branch:
                continue
            if {t1.gtype, t2.gtype} == {"E", "F"}:
                k = 1.0
            elif t1.gtype == t2.gtype == "H":
                k = 2.0
            else:
                continue
            u = t1.point - t2.point
            if u == 0:
                raise CoincidentPointError("pairing at coincident points")
            sign = 1.0 if t1.branch == "plus" else -1.0
            total += t1.coeff * t2.coeff * sign * k * 1j / u
    return complex(total)


def rat_jacobi_residual(x: CurrentElement, y: CurrentElement, z: CurrentElement, c: float) -> float:
    pts = [t.point for e in (x, y, z) for t in e.terms]
    if len(set(pts)) < len(pts):
        raise CoincidentPointError("Jacobi harness needs pairwise distinct points")
    J = (rat_bracket(rat_bracket(x, y, c), z, c)
         + rat_bracket(rat_bracket(y, z, c), x, c)
         + rat_bracket(rat_bracket(z, x, c), y, c))
    return J.max_abs()


# ---------------------------------------------------------------------------
# step-function cobracket on modes
# ---------------------------------------------------------------------------

def theta(x: float) -> float:
    """Heaviside step with ``theta(0) = 1/2``."""
    return 1.0 if x > 0 else (0.0 if x < 0 else 0.5)


@dataclass(frozen=True)
class RatModeCobracket:
    """Cobracket of a mode ``x_lam`` in the rational limit.

    ``delta x_lam = int_a^b dtau k(tau) * wedge(tau) + central * x_lam ^ c`` where the
    wedge basis is ``h_tau ^ e_{lam-tau}`` (E), ``f_{lam-tau} ^ h_tau`` (F) or
    ``e_tau ^ f_{lam-tau}`` (H).  ``interval`` is the oriented pair ``(0, lam)``;
    ``density`` is the kernel as a density over ``tau`` on the unoriented
    interval, i.e. with the orientation sign already absorbed.
    """

    gtype: str
    lam: float
    interval: tuple[float, float]
    scale: float
    central: float

    def kernel(self, tau: float) -> float:
        """Printed integrand ``scale * (theta(tau - lam) - theta(tau))``."""
        return self.scale * (theta(tau - self.lam) - theta(tau))

    def density(self, tau: float) -> float:
        lo, hi = sorted(self.interval)
        if not (lo < tau < hi):
            return 0.0
        return self.kernel(tau) * (1.0 if self.lam > 0 else -1.0)


def rat_mode_cobracket(gtype: str, lam: float, c: float = 1.0) -> RatModeCobracket:
    """Step-function cobracket; the ``c`` term is ``(lam/2) sgn(lam)`` (zero at ``lam = 0``)."""
    if gtype not in ("E", "F", "H"):
        raise DomainError(f"unknown generator type {gtype!r}")
    lam = float(lam)
    scale = 2.0 if gtype == "H" else 1.0
    return RatModeCobracket(gtype, lam, (0.0, lam), scale, c * 0.5 * lam * float(np.sign(lam)))


# wedge layout per type: (first slot type, first slot mode is tau?, second slot type)
_WEDGE = {"E": ("H", "tau", "E"), "F": ("F", "rest", "H"), "H": ("E", "tau", "F")}
_PAIR = {("E", "F"): 1.0, ("F", "E"): 1.0, ("H", "H"): 2.0}


@dataclass(frozen=True)
class HalfLineTest:
    """Smooth test function ``|x|^n e^{-a |x|}`` supported on ``side * x > 0``."""

    side: int
    n: int = 2
    a: float = 1.0
    shift: float = 0.0

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        y = self.side * x
        return np.where(y > 0, np.abs(y) ** self.n * np.exp(-self.a * y) * (1 + self.shift * y), 0.0)


def _gl_nodes(a: float, b: float, n: int = 80, panels: int = 8):
    x, w = np.polynomial.legendre.leggauss(n)
    edges = np.linspace(a, b, panels + 1)
    xs = []
    ws = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        xs.append(0.5 * (hi - lo) * x + 0.5 * (hi + lo))
        ws.append(0.5 * (hi - lo) * w)
    return np.concatenate(xs), np.concatenate(ws)


def duality_check(xtype: str, ytype: str, ztype: str, side: int,
                  chi: HalfLineTest, phi: HalfLineTest, psi: HalfLineTest,
                  L: float = 60.0) -> tuple[float, complex, complex]:
    """``<delta x, y (x) z>`` against ``<x, [y, z]>`` for smeared modes.

    ``x = int chi(lam) x_hat_lam`` is supported on ``side * lam > 0``; ``y``
    and ``z`` are smeared with ``phi``, ``psi`` on the opposite half line.
    The mode pairing is ``<e_lam, f_mu> = delta(lam + mu)``,
    ``<h_lam, h_mu> = 2 delta(lam + mu)``.  Returns ``(residual, lhs, rhs)``.
    """
    if side not in (1, -1):
        raise DomainError("side must be +1 or -1")
    if chi.side != side or phi.side != -side or psi.side != -side:
        raise DomainError("test functions must sit on opposite half lines")
    A, slot, B = _WEDGE[xtype]
    scale = 2.0 if xtype == "H" else 1.0

    # LHS: int dlam chi(lam) int_{between 0 and lam} dtau (-scale) <wedge, y (x) z>
    s, ws = _gl_nodes(0.0, 1.0, 40, 1)
    lams, wl = _gl_nodes(0.0, L, 40, 16)
    lams = side * lams
    lhs = 0.0
    for lam, wlam in zip(lams, wl):
        tau = s * lam
        jac = abs(lam) * ws
        a_mode = tau if slot == "tau" else lam - tau
        b_mode = lam - a_mode
        # wedge a^b = a(x)b - b(x)a paired with phi (x) psi: delta pins the partner mode
        val = (_PAIR.get((A, ytype), 0.0) * _PAIR.get((B, ztype), 0.0) * phi(-a_mode) * psi(-b_mode)
               - _PAIR.get((B, ytype), 0.0) * _PAIR.get((A, ztype), 0.0) * phi(-b_mode) * psi(-a_mode))
        lhs += wlam * chi(lam) * np.sum(jac * (-scale) * val)

    # RHS: int dalpha dbeta phi psi <x_lam, [y_alpha, z_beta]>
    mb = mode_bracket(ModeSymbol(ytype, 1.0), ModeSymbol(ztype, 1.0), 0.0)
    rhs = 0.0
    if mb.mode is not None:
        k = _PAIR.get((xtype, mb.mode.gtype), 0.0)
        al, wa = _gl_nodes(0.0, L, 40, 16)
        al = -side * al
        for a, wa_ in zip(al, wa):
            rhs += wa_ * phi(a) * np.sum(wa * psi(al) * mb.coeff * k * chi(-a - al))
    return float(abs(lhs - rhs)), complex(lhs), complex(rhs)


# ---------------------------------------------------------------------------
# eta -> 0 convergence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EtaLimit:
    """Residuals ``|trig kernel - i/w|`` per eta, and successive ratios."""

    etas: tuple[float, ...]
    residuals: tuple[float, ...]
    ratios: tuple[float, ...]


def eta_to_zero_check(gtype: str, w: complex, etas: Sequence[float]) -> EtaLimit:
    """Distance between the plus-branch trigonometric kernel and ``i/w``.

    For halving ``eta`` the ratios approach 4 (the remainder is ``O(eta^2)``).
    """
    etas = tuple(float(e) for e in etas)
    if not etas or min(etas) <= 0:
        raise DomainError("etas must be positive")
    w = complex(w)
    if w == 0 or abs(w.imag) >= 1.0 / (2 * max(etas)):
        raise DomainError(f"w={w} outside the common validity region")
    res = tuple(float(abs(kernel(gtype, "plus", w, TrigParams(e)) - rat_kernel(w))) for e in etas)
    ratios = tuple(res[i] / res[i + 1] if res[i + 1] > 0 else math.inf for i in range(len(res) - 1))
    return EtaLimit(etas, res, ratios)


def laplace_check(branch: str, u: complex, zs: Iterable[float] = (0.0,), tol: float = 1e-12) -> float:
    """Laplace-transform representation of the rational kernel.

    Plus: ``int_0^inf e^{-i lam (u - z)} dlam``; minus:
    ``-int_0^inf e^{i lam (u - z)} dlam``.  Both equal ``i/(z - u)``.  The
    integral is truncated where the envelope ``e^{-|Im u| lam}`` drops below 1e-16.
    """
    _check_half_plane(branch, u)
    u = complex(u)
    L = 37.0 / abs(u.imag)
    sgn = 1.0 if branch == "plus" else -1.0
    worst = 0.0
    for z in zs:
        f = lambda lam: sgn * np.exp(-sgn * 1j * lam * (u - z))
        panels = max(8, int(math.ceil(L * max(1.0, abs(u.real - z)) / 2)))
        val = gauss_legendre(f, 0.0, L, tol=tol, panels=panels).value
        worst = max(worst, abs(val - rat_kernel(z - u)))
    return worst
