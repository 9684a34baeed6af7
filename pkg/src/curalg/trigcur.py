"""Trigonometric current algebra: kernels, brackets, pairing and cobrackets.

Generators ``e_s(u), f_s(u), h_s(u)`` carry a branch ``s`` in ``{"plus",
"minus"}``.  A plus point lies in the strip ``-1/eta < Im u < 0``, a minus
point in ``0 < Im u < 1/eta``.  The two branches are tied by

    e_-(u) = -e_+(u - i/eta),   f_-(u) = -f_+(u - i/eta),   h_-(u) = h_+(u - i/eta),

so every computation is carried out on plus-branch representatives and the
result is relabelled.  With ``u = u1 - u2``, ``k(u) = i pi eta / sinh(pi eta u)``
and ``cth = coth(pi eta u)`` the representatives obey

    [h(u1), e(u2)] = -2 i pi eta cth e(u2) + 2 k e(u1)
    [h(u1), f(u2)] = +2 i pi eta cth f(u2) - 2 k f(u1)
    [e(u1), f(u2)] = k (h(u1) - h(u2)) + c B_ef(u)
    [h(u1), h(u2)] = c B_hh(u)

which is the pointwise product of the kernels, agrees with the Fourier-mode
relations, and satisfies the Jacobi identity for every level ``c``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import CoincidentPointError, DomainError, PoleError
from .quad import ContourSpec, TestFunction, integrate_line, integrate_pv

__all__ = [
    "TrigParams", "GeneratorTerm", "CurrentElement", "ModeSymbol", "Wedge",
    "gen", "kernel", "bracket", "pair", "cobracket0", "cocycle_B", "numeric_B",
    "jacobi_residual", "gauge_map", "sokhotsky_check", "fourier_kernel_check",
    "mode_weight", "mode_bracket", "ModeBracket", "smeared_bracket_check",
    "mode_cobracket_kernel", "cobracket_from_r", "ModeCobracket",
]

GTYPES = ("E", "F", "H")
BRANCHES = ("plus", "minus")
STRIP_MARGIN = 1e-9
_POLE_TOL = 1e-14


@dataclass(frozen=True)
class TrigParams:
    """Deformation parameter ``eta > 0``; ``xi = 1/eta`` is the strip width."""

    eta: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.eta) and self.eta > 0):
            raise DomainError(f"eta must be finite and positive, got {self.eta}")

    @property
    def xi(self) -> float:
        return 1.0 / self.eta

    def in_strip(self, branch: str, u: complex) -> bool:
        y = complex(u).imag
        m = STRIP_MARGIN
        if branch == "plus":
            return -self.xi + m < y < -m
        if branch == "minus":
            return m < y < self.xi - m
        raise DomainError(f"unknown branch {branch!r}")

    def check(self, branch: str, u: complex) -> None:
        if not self.in_strip(branch, u):
            raise DomainError(f"point {u} is not inside the {branch} strip for eta={self.eta}")


@dataclass(frozen=True)
class GeneratorTerm:
    gtype: str
    branch: str
    point: complex
    coeff: complex = 1.0

    def __post_init__(self):
        if self.gtype not in GTYPES:
            raise DomainError(f"unknown generator type {self.gtype!r}")
        if self.branch not in BRANCHES:
            raise DomainError(f"unknown branch {self.branch!r}")
        object.__setattr__(self, "point", complex(self.point))
        object.__setattr__(self, "coeff", complex(self.coeff))

    @property
    def key(self):
        return (self.gtype, self.branch, self.point)


class CurrentElement:
    """Finite combination of generators plus a multiple of the central element.

    Terms with identical ``(gtype, branch, point)`` are merged; exact zeros are
    dropped.
    """

    __slots__ = ("_terms", "central")

    def __init__(self, terms: Iterable[GeneratorTerm] = (), central: complex = 0.0):
        acc: dict = {}
        for t in terms:
            acc[t.key] = acc.get(t.key, 0j) + t.coeff
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self.central = complex(central)

    @classmethod
    def from_dict(cls, coeffs: dict, central: complex = 0.0) -> "CurrentElement":
        return cls((GeneratorTerm(g, b, p, c) for (g, b, p), c in coeffs.items()), central)

    @property
    def terms(self) -> list[GeneratorTerm]:
        return [GeneratorTerm(g, b, p, c) for (g, b, p), c in sorted(
            self._terms.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].real, kv[0][2].imag))]

    def coeffs(self) -> dict:
        return dict(self._terms)

    def __add__(self, other: "CurrentElement") -> "CurrentElement":
        return CurrentElement(self.terms + other.terms, self.central + other.central)

    def __neg__(self) -> "CurrentElement":
        return self.scale(-1)

    def __sub__(self, other: "CurrentElement") -> "CurrentElement":
        return self + (-other)

    def scale(self, a: complex) -> "CurrentElement":
        return CurrentElement((GeneratorTerm(t.gtype, t.branch, t.point, a * t.coeff)
                               for t in self.terms), a * self.central)

    def max_abs(self) -> float:
        vals = [abs(v) for v in self._terms.values()] + [abs(self.central)]
        return max(vals)

    def __repr__(self):
        parts = [f"{t.coeff:.6g}*{t.gtype.lower()}_{'+' if t.branch == 'plus' else '-'}({t.point:.6g})"
                 for t in self.terms]
        if self.central:
            parts.append(f"{self.central:.6g}*c")
        return "CurrentElement(" + " + ".join(parts or ["0"]) + ")"


def gen(gtype: str, branch: str, u: complex, coeff: complex = 1.0) -> CurrentElement:
    """Single-generator element, e.g. ``gen("E", "plus", -0.3j)``."""
    return CurrentElement([GeneratorTerm(gtype, branch, u, coeff)])


@dataclass(frozen=True)
class ModeSymbol:
    """Fourier mode ``e_hat_lambda`` etc."""

    gtype: str
    lam: float

    def __post_init__(self):
        if self.gtype not in GTYPES:
            raise DomainError(f"unknown generator type {self.gtype!r}")


@dataclass(frozen=True)
class Wedge:
    """``coeff * left ^ right`` with ``left``/``right`` generator keys or ``"c"``."""

    coeff: complex
    left: tuple | str
    right: tuple | str

    def swapped(self) -> "Wedge":
        return Wedge(-self.coeff, self.right, self.left)


# ---------------------------------------------------------------------------
# kernels and representatives
# ---------------------------------------------------------------------------

def _sinh(x):
    s = np.sinh(x)
    if abs(s) < _POLE_TOL:
        raise PoleError(f"kernel pole: sinh({x}) = 0")
    return s


def kernel(gtype: str, branch: str, w: complex, p: TrigParams) -> complex:
    """Structure kernel at ``w = z - u``.

    Plus branch: ``i pi eta / sinh(pi eta w)`` for E and F,
    ``i pi eta coth(pi eta w)`` for H.  Minus branch follows from the
    branch relation, i.e. evaluates the plus kernel at ``w + i/eta`` with
    the sign of the representative.
    """
    if gtype not in GTYPES or branch not in BRANCHES:
        raise DomainError(f"bad generator label {gtype}, {branch}")
    eta = p.eta
    sign = 1.0
    w = complex(w)
    if branch == "minus":
        w = w + 1j / eta
        sign = -1.0 if gtype in ("E", "F") else 1.0
    x = math.pi * eta * w
    s = _sinh(x)
    if gtype == "H":
        return sign * 1j * math.pi * eta * np.cosh(x) / s
    return sign * 1j * math.pi * eta / s


def _rep(t: GeneratorTerm, p: TrigParams) -> tuple[complex, float]:
    """Plus-branch representative point and sign: ``t = sign * X_+(rep)``."""
    if t.branch == "plus":
        return t.point, 1.0
    return t.point - 1j / p.eta, (-1.0 if t.gtype in ("E", "F") else 1.0)


def _relabel_sign(gtype: str, branch: str) -> float:
    # X_+(rep) = sign * X_branch(point) with sign = 1/sign_rep = sign_rep
    if branch == "plus":
        return 1.0
    return -1.0 if gtype in ("E", "F") else 1.0


def _xsh(x):
    """x / sinh(x), regular at 0."""
    return 1.0 - x * x / 6.0 if abs(x) < 1e-6 else x / np.sinh(x)


def _B_ef(u: complex, eta: float) -> complex:
    x = math.pi * eta * u
    if abs(x) < 1e-4:
        # Laurent cancellation: x ch/sh^2 - 1/sh = x/3 - 7x^3/90 + ...
        return 1j * math.pi * eta ** 2 * (x / 3.0 - 7.0 * x ** 3 / 90.0)
    s = _sinh(x)
    return 1j * math.pi * eta ** 2 * (x * np.cosh(x) / s ** 2 - 1.0 / s)


def _B_hh(u: complex, eta: float) -> complex:
    x = math.pi * eta * u
    if abs(x) < 1e-4:
        # x/sh^2 - coth = -2x/3 + 2x^3/45 - ...
        return 2j * math.pi * eta ** 2 * (-2.0 * x / 3.0 + 2.0 * x ** 3 / 45.0)
    s = _sinh(x)
    return 2j * math.pi * eta ** 2 * (x / s ** 2 - np.cosh(x) / s)


def _plus_bracket(g1: str, r1: complex, g2: str, r2: complex, eta: float):
    """Bracket of plus generators at points r1, r2.

    Returns ``(list of (gtype, which_point, coeff), central_B)`` where
    ``which_point`` is 1 or 2.
    """
    if g1 == g2 and g1 in ("E", "F"):
        return [], 0j
    if (g1, g2) in (("E", "H"), ("F", "H"), ("F", "E")):
        terms, B = _plus_bracket(g2, r2, g1, r1, eta)
        return [(g, 3 - w, -c) for g, w, c in terms], -B
    u = r1 - r2
    x = math.pi * eta * u
    s = _sinh(x)
    k = 1j * math.pi * eta / s
    cth = np.cosh(x) / s
    if (g1, g2) == ("H", "E"):
        return [("E", 2, -2j * math.pi * eta * cth), ("E", 1, 2 * k)], 0j
    if (g1, g2) == ("H", "F"):
        return [("F", 2, 2j * math.pi * eta * cth), ("F", 1, -2 * k)], 0j
    if (g1, g2) == ("E", "F"):
        return [("H", 1, k), ("H", 2, -k)], _B_ef(u, eta)
    if (g1, g2) == ("H", "H"):
        return [], _B_hh(u, eta)
    raise AssertionError((g1, g2))


def _term_bracket(t1: GeneratorTerm, t2: GeneratorTerm, c: float, p: TrigParams) -> CurrentElement:
    p.check(t1.branch, t1.point)
    p.check(t2.branch, t2.point)
    r1, s1 = _rep(t1, p)
    r2, s2 = _rep(t2, p)
    if abs(r1 - r2) < 1e-12:
        raise CoincidentPointError(f"coincident points {t1.point} and {t2.point}")
    terms, B = _plus_bracket(t1.gtype, r1, t2.gtype, r2, p.eta)
    pref = t1.coeff * t2.coeff * s1 * s2
    out = []
    for g, which, coef in terms:
        src = t1 if which == 1 else t2
        out.append(GeneratorTerm(g, src.branch, src.point,
                                 pref * coef * _relabel_sign(g, src.branch)))
    return CurrentElement(out, pref * c * B)


def bracket(x: CurrentElement, y: CurrentElement, c: float, p: TrigParams) -> CurrentElement:
    """Lie bracket at level ``c``; the central parts of the inputs are inert."""
    acc = CurrentElement()
    for t1 in x.terms:
        for t2 in y.terms:
            acc = acc + _term_bracket(t1, t2, c, p)
    return acc


def _plus_pair(g1, r1, g2, r2, eta) -> complex:
    u = r1 - r2
    x = math.pi * eta * u
    if {g1, g2} == {"E", "F"}:
        return eta * _xsh(x)
    if g1 == g2 == "H":
        if abs(x) < 1e-6:
            return 2 * eta * (1 + x * x / 3)
        return 2 * eta * x * np.cosh(x) / _sinh(x)
    return 0j


def pair(x: CurrentElement, y: CurrentElement, p: TrigParams) -> complex:
    """Invariant pairing; only E-F and H-H combinations contribute.

    Same branch: ``<e(u1), f(u2)> = pi eta^2 u / sinh(pi eta u)``,
    ``<h(u1), h(u2)> = 2 pi eta^2 u coth(pi eta u)``; mixed branches use the
    shifted argument ``u +- i/eta``.
    """
    total = 0j
    for t1 in x.terms:
        for t2 in y.terms:
            if {t1.gtype, t2.gtype} not in ({"E", "F"}, {"H"}):
                continue
            r1, s1 = _rep(t1, p)
            r2, s2 = _rep(t2, p)
            total += t1.coeff * t2.coeff * s1 * s2 * _plus_pair(t1.gtype, r1, t2.gtype, r2, p.eta)
    return complex(total)


def cobracket0(t: GeneratorTerm) -> list[Wedge]:
    """Level-0 cobracket: ``de = h^e``, ``df = f^h``, ``dh = 2 e^f`` at the same point."""
    b, u = t.branch, t.point
    if t.gtype == "E":
        return [Wedge(t.coeff, ("H", b, u), ("E", b, u))]
    if t.gtype == "F":
        return [Wedge(t.coeff, ("F", b, u), ("H", b, u))]
    return [Wedge(2 * t.coeff, ("E", b, u), ("F", b, u))]


def cocycle_B(x: GeneratorTerm, y: GeneratorTerm, p: TrigParams) -> complex:
    """Closed-form central value ``B(x, y)`` (coefficient of ``c`` in ``[x, y]``)."""
    if {x.gtype, y.gtype} not in ({"E", "F"}, {"H"}):
        raise DomainError("cocycle_B is defined for E-F and H-H pairs")
    one = GeneratorTerm(x.gtype, x.branch, x.point)
    two = GeneratorTerm(y.gtype, y.branch, y.point)
    return _term_bracket(one, two, 1.0, p).central


def numeric_B(x: GeneratorTerm, y: GeneratorTerm, p: TrigParams, d_eta: float = 1e-4,
              tol: float = 1e-11) -> complex:
    """Boundary-integral form of the cocycle.

    ``eta^2/(4 pi) * oint (psi_eta phi - psi phi_eta) dz * <x, y>`` over the
    boundary of the plus strip, traversed anticlockwise (lower edge
    left-to-right, real axis right-to-left).  The eta-derivative is a
    Richardson-corrected central difference at fixed representative points.
    """
    if {x.gtype, y.gtype} not in ({"E", "F"}, {"H"}):
        raise DomainError("numeric_B is defined for E-F and H-H pairs")
    p.check(x.branch, x.point)
    p.check(y.branch, y.point)
    r1, s1 = _rep(x, p)
    r2, s2 = _rep(y, p)
    eta = p.eta
    trace_form = 2.0 if x.gtype == "H" else 1.0

    def ker(g, r, e, z):
        w = math.pi * e * (z - r)
        if g == "H":
            return 1j * math.pi * e / np.tanh(w)
        return 1j * math.pi * e / np.sinh(w)

    def d_eta_ker(g, r, z):
        def D(h):
            return (ker(g, r, eta + h, z) - ker(g, r, eta - h, z)) / (2 * h)
        return (4 * D(d_eta / 2) - D(d_eta)) / 3

    def integrand(z):
        phi = ker(x.gtype, r1, eta, z)
        psi = ker(y.gtype, r2, eta, z)
        return d_eta_ker(y.gtype, r2, z) * phi - psi * d_eta_ker(x.gtype, r1, z)

    bottom = integrate_line(integrand, ContourSpec(offset=-1.0 / eta, tol=tol))
    top = integrate_line(integrand, ContourSpec(offset=0.0, tol=tol))
    val = eta ** 2 / (4 * math.pi) * (bottom.value - top.value) * trace_form
    return complex(s1 * s2 * val)


def jacobi_residual(x: CurrentElement, y: CurrentElement, z: CurrentElement,
                    c: float, p: TrigParams) -> float:
    """Largest coefficient of ``[[x,y],z] + [[y,z],x] + [[z,x],y]``."""
    pts = [t.point for e in (x, y, z) for t in e.terms]
    reps = [_rep(t, p)[0] for e in (x, y, z) for t in e.terms]
    if len(set(pts)) < len(pts) or min(
            (abs(a - b) for i, a in enumerate(reps) for b in reps[i + 1:]), default=1) < 1e-12:
        raise CoincidentPointError("Jacobi harness needs pairwise distinct points")
    J = (bracket(bracket(x, y, c, p), z, c, p)
         + bracket(bracket(y, z, c, p), x, c, p)
         + bracket(bracket(z, x, c, p), y, c, p))
    return J.max_abs()


def gauge_map(x: CurrentElement, eta: float, eta_new: float) -> CurrentElement:
    """Isomorphism between the algebras at ``eta`` and ``eta_new``.

    Induced by rescaling the spectral variable: each generator at point ``u``
    goes to ``(eta/eta_new)`` times the generator at ``u * eta/eta_new``.  The
    central coefficient is unchanged (the central values are invariant).
    """
    TrigParams(eta)
    pn = TrigParams(eta_new)
    s = eta / eta_new
    out = []
    for t in x.terms:
        u = t.point * s
        pn.check(t.branch, u)
        out.append(GeneratorTerm(t.gtype, t.branch, u, t.coeff * s))
    return CurrentElement(out, x.central)


# ---------------------------------------------------------------------------
# distributions: Sokhotsky and Fourier representations
# ---------------------------------------------------------------------------

def sokhotsky_check(gtype: str, u: float, s: TestFunction, p: TrigParams,
                    offset: float | None = None, tol: float = 1e-12) -> float:
    """``|(a_+(u) - a_-(u), s) - 2 pi s(u)|`` for a real point ``u``.

    ``a_+`` pairs with ``s`` along a line just above the pole at ``z = u``,
    ``a_-`` along a line just below it.
    """
    u = float(u)
    d = offset if offset is not None else 0.25 / p.eta

    def fv(z):
        x = math.pi * p.eta * (z - u)
        k = 1j * math.pi * p.eta / np.sinh(x)
        if gtype == "H":
            k = k * np.cosh(x)
        return k * s(z)

    above = integrate_line(fv, ContourSpec(offset=d, tol=tol))
    below = integrate_line(fv, ContourSpec(offset=-d, tol=tol))
    return float(abs(above.value - below.value - 2 * math.pi * complex(s(u))))


def mode_weight(gtype: str, branch: str, lam, u: complex, eta: float):
    """Fourier weight of ``x_branch(u)`` on the mode ``x_hat_lambda``.

    E, F: ``+- e^{i lam u} / (1 + e^{+-lam/eta})``;
    H:    ``+- e^{i lam u} / (1 - e^{+-lam/eta})`` (principal value at 0).
    """
    lam = np.asarray(lam, dtype=complex)
    sgn = 1.0 if branch == "plus" else -1.0
    x = sgn * lam / eta
    # 1/(1 + e^x) or 1/(1 - e^x), evaluated without cancellation on either side
    pos = x.real > 0
    t = np.exp(np.where(pos, -x, x))
    expo = 1j * lam * u + np.where(pos, -x, 0)
    if gtype in ("E", "F"):
        den = 1 + t
    else:
        den = np.where(pos, -(1 - t), 1 - t)
    return sgn * np.exp(expo) / den


def _pv_offset(eta: float) -> float:
    return min(0.5, 0.5 * math.pi * eta)


def fourier_kernel_check(gtype: str, branch: str, u: complex, p: TrigParams,
                         zs: Iterable[float] = (0.0,), tol: float = 1e-11) -> float:
    """Max over ``z`` of |numeric Fourier integral - closed-form kernel at z - u|."""
    p.check(branch, u)
    worst = 0.0
    for z in zs:
        f = lambda lam: mode_weight(gtype, branch, lam, u - z, p.eta)
        if gtype == "H":
            val = integrate_pv(f, ContourSpec(kind="principal_value", offset=_pv_offset(p.eta),
                                              tol=tol)).value
        else:
            val = integrate_line(f, ContourSpec(tol=tol)).value
        worst = max(worst, abs(val - kernel(gtype, branch, z - u, p)))
    return worst


# ---------------------------------------------------------------------------
# Fourier modes
# ---------------------------------------------------------------------------

_MODE_STRUCT = {
    ("H", "E"): ("E", 2.0), ("H", "F"): ("F", -2.0), ("E", "F"): ("H", 1.0),
    ("E", "H"): ("E", -2.0), ("F", "H"): ("F", 2.0), ("F", "E"): ("H", -1.0),
}
_MODE_CENTRAL = {("E", "F"): 1.0, ("F", "E"): 1.0, ("H", "H"): 2.0}


@dataclass(frozen=True)
class ModeBracket:
    """``[a_lam, b_mu] = coeff * mode  +  central_density * delta(lam + mu)``."""

    mode: ModeSymbol | None
    coeff: float
    central_density: float


def mode_bracket(a: ModeSymbol, b: ModeSymbol, c: float) -> ModeBracket:
    """Mode relations: ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h + c lam delta``,
    ``[h,h] = 2 c lam delta``; the central density is reported at ``mu = -lam``."""
    s = _MODE_STRUCT.get((a.gtype, b.gtype))
    dens = c * _MODE_CENTRAL.get((a.gtype, b.gtype), 0.0) * a.lam
    if s is None:
        return ModeBracket(None, 0.0, dens)
    return ModeBracket(ModeSymbol(s[0], a.lam + b.lam), s[1], dens)


def smeared_bracket_check(x: GeneratorTerm, y: GeneratorTerm, c: float, p: TrigParams,
                          nus: Iterable[float] = (0.7, -1.3), tol: float = 1e-11) -> float:
    """Compare ``bracket`` on generating functions with the mode relations.

    The generating functions are integrals of modes against
    :func:`mode_weight`; the bracket of two of them is a double integral of
    :func:`mode_bracket`, which collapses to one integral per output mode
    ``nu`` and one for the central term.  Returns the max residual over the
    sampled ``nu`` and the central coefficient.
    """
    eta = p.eta
    res = bracket(CurrentElement([x]), CurrentElement([y]), c, p)
    delta = _pv_offset(eta) / 2
    spec = ContourSpec(kind="principal_value", offset=delta, tol=tol)
    worst = 0.0
    out = _MODE_STRUCT.get((x.gtype, y.gtype))
    if out is not None:
        g_out, k = out
        for nu in nus:
            f = lambda lam: (k * mode_weight(x.gtype, x.branch, lam, x.point, eta)
                             * mode_weight(y.gtype, y.branch, nu - lam, y.point, eta))
            lhs = x.coeff * y.coeff * integrate_pv(f, spec).value
            rhs = sum(t.coeff * complex(mode_weight(t.gtype, t.branch, nu, t.point, eta))
                      for t in res.terms if t.gtype == g_out)
            worst = max(worst, abs(lhs - rhs))
    kc = _MODE_CENTRAL.get((x.gtype, y.gtype))
    if kc is not None:
        f = lambda lam: (c * kc * lam * mode_weight(x.gtype, x.branch, lam, x.point, eta)
                         * mode_weight(y.gtype, y.branch, -lam, y.point, eta))
        lhs = x.coeff * y.coeff * integrate_pv(f, spec).value
        worst = max(worst, abs(lhs - res.central))
    return worst


@dataclass(frozen=True)
class ModeCobracket:
    """Density of ``delta x_lam`` on the wedge basis element at ``tau``.

    E: ``h_tau ^ e_{lam-tau}``; F: ``f_{lam-tau} ^ h_tau``; H: ``e_tau ^ f_{lam-tau}``;
    ``central`` multiplies ``x_lam ^ c``.  ``antisymmetry`` is the residual of
    the swapped-order coefficient (zero for a proper wedge).
    """

    kernel: complex
    central: complex
    antisymmetry: float = 0.0


def mode_cobracket_kernel(gtype: str, lam: float, tau: float, p: TrigParams,
                          c: float = 1.0) -> ModeCobracket:
    """Closed-form mode cobracket densities."""
    eta = p.eta
    th = lambda v: math.tanh(v / (2 * eta))
    cth = lambda v: 1.0 / math.tanh(v / (2 * eta))
    if gtype in ("E", "F"):
        if tau == 0:
            raise PoleError("coth(tau/2 eta) is singular at tau = 0")
        k = -0.5 * (cth(tau) + th(lam - tau))
        cen = c * 0.5 * lam * th(lam)
    elif gtype == "H":
        k = -(th(tau) + th(lam - tau))
        cen = c * 0.5 * lam * cth(lam) if abs(lam) > 1e-8 * eta else c * eta
    else:
        raise DomainError(gtype)
    return ModeCobracket(complex(k), complex(cen))


def _r_components(eta: float):
    """The classical r as a list of (X, Y, weight(mu), mu * weight(mu)) for X_{-mu} (x) Y_mu.

    The last entry is continuous at ``mu = 0`` (it tends to ``-eta/2`` for H).
    """
    w1 = lambda mu: 1.0 / (1.0 + math.exp(mu / eta)) if mu / eta < 700 else 0.0
    w2 = lambda mu: -0.5 / math.expm1(mu / eta) if mu / eta < 700 else 0.0
    mw1 = lambda mu: mu * w1(mu)
    mw2 = lambda mu: mu * w2(mu) if abs(mu) > 1e-8 * eta else -0.5 * eta + mu / 4
    return [("F", "E", w1, mw1), ("E", "F", w1, mw1), ("H", "H", w2, mw2)]


def cobracket_from_r(gtype: str, lam: float, tau: float, p: TrigParams,
                     c: float = 1.0) -> ModeCobracket:
    """Mode cobracket computed as ``[x_lam (x) 1 + 1 (x) x_lam, r]``.

    ``r = int dmu (f_{-mu} e_mu + e_{-mu} f_mu)/(1+e^{mu/eta})
    + 1/2 pv int dmu h_{-mu} h_mu/(1-e^{mu/eta}) + (c (x) d + d (x) c)/2``
    with ``[d, x_lam] = lam x_lam``.  The contraction goes through
    :func:`mode_bracket`; delta functions fix the integration variable, so the
    coefficient of any tensor basis element is a finite sum.
    """
    comps = _r_components(p.eta)
    x = gtype

    def coeff(A, alpha, B, beta):
        """coefficient of A_alpha (x) B_beta (alpha + beta = lam)."""
        total = 0.0
        for X, Y, W, _ in comps:
            # first slot: [x_lam, X_{-mu}] (x) Y_mu with mu = beta
            mb = mode_bracket(ModeSymbol(x, lam), ModeSymbol(X, -beta), c)
            if mb.mode is not None and mb.mode.gtype == A and Y == B:
                total += mb.coeff * W(beta)
            # second slot: X_{-mu} (x) [x_lam, Y_mu] with mu = -alpha
            mb = mode_bracket(ModeSymbol(x, lam), ModeSymbol(Y, -alpha), c)
            if mb.mode is not None and mb.mode.gtype == B and X == A:
                total += mb.coeff * W(-alpha)
        return total

    def central_coeffs():
        left = 0.0   # coefficient of x_lam (x) c
        right = 0.0  # coefficient of c (x) x_lam
        # central densities are linear in lam, so they are paired with mu * W(mu)
        for X, Y, _, MW in comps:
            # [x_lam, X_{-mu}] central needs -mu = -lam: c (x) Y_lam
            if Y == x:
                right += mode_bracket(ModeSymbol(x, 1.0), ModeSymbol(X, -1.0), c).central_density * MW(lam)
            # X_{-mu} (x) [x_lam, Y_mu] central needs mu = -lam: X_lam (x) c
            if X == x:
                left -= mode_bracket(ModeSymbol(x, 1.0), ModeSymbol(Y, -1.0), c).central_density * MW(-lam)
        # gradation part: 1/2 [x (x) 1, d (x) c] + 1/2 [1 (x) x, c (x) d]
        left += 0.5 * c * (-lam)
        right += 0.5 * c * (-lam)
        return left, right

    if gtype == "E":
        a = coeff("H", tau, "E", lam - tau)
        b = coeff("E", lam - tau, "H", tau)
    elif gtype == "F":
        a = coeff("F", lam - tau, "H", tau)
        b = coeff("H", tau, "F", lam - tau)
    elif gtype == "H":
        a = coeff("E", tau, "F", lam - tau)
        b = coeff("F", lam - tau, "E", tau)
    else:
        raise DomainError(gtype)
    left, right = central_coeffs()
    return ModeCobracket(complex(a), complex(left), float(abs(a + b) + abs(left + right)))
