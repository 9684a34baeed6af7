"""Quantum trigonometric R-matrix and its semiclassical expansion.

``R(u, eta) = varrho(u, eta) Rbar(u, eta)`` with

    Rbar = [[1, 0, 0, 0], [0, b, c, 0], [0, c, b, 0], [0, 0, 0, 1]],
    b = sinh(pi eta u) / sinh(pi eta (u - i hbar)),
    c = -sinh(i pi eta hbar) / sinh(pi eta (u - i hbar)).

Expanding in ``hbar`` at fixed ``u`` gives the classical r-matrix ``r0``, and
comparing the two deformation parameters ``eta`` and
``eta' = eta / (1 + eta c hbar)`` at second order gives the matrix
``r1 - r1'`` and scalar ``varrho0`` that produce the central terms of the
current algebra.  :func:`ll_structure_check` verifies that the resulting
``[L1, L2]`` relation reproduces :func:`curalg.trigcur.bracket`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import mpmath as mp
import numpy as np
from scipy import special

from .errors import CoincidentPointError, ConvergenceError, DomainError, PoleError
from .trigcur import GeneratorTerm, TrigParams, _term_bracket

__all__ = [
    "RMatrix4", "ExpansionData", "ExpansionResult", "VarrhoResult",
    "rbar", "tau_plus", "varrho", "varrho_details", "r0", "r1_diff", "varrho0",
    "expansion_data", "expansion_check", "richardson", "traceless_shift",
    "eta_derivative_identity", "ll_structure_check", "cybe_residual",
]

_POLE_TOL = 1e-14
ID4 = np.eye(4, dtype=complex)


@dataclass(frozen=True)
class RMatrix4:
    """A 4x4 R-matrix together with the parameters it was built from."""

    entries: np.ndarray
    u: complex
    eta: float
    hbar: float

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def _sinh(x):
    s = np.sinh(x)
    if abs(s) < _POLE_TOL:
        raise PoleError(f"sinh({x}) vanishes")
    return s


def rbar(u: complex, eta: float, hbar: float) -> RMatrix4:
    """Normalised R-matrix with unit corner entries."""
    TrigParams(eta)
    if hbar < 0:
        raise DomainError("hbar must be non-negative")
    x = math.pi * eta * complex(u)
    s = _sinh(x - 1j * math.pi * eta * hbar)
    b = np.sinh(x) / s
    c = -np.sinh(1j * math.pi * eta * hbar) / s
    R = ID4.copy()
    R[1, 1] = R[2, 2] = b
    R[1, 2] = R[2, 1] = c
    return RMatrix4(R, complex(u), float(eta), float(hbar))


def tau_plus(u: complex, hbar: float) -> complex:
    """Scalar prefactor ``coth(pi u / (2 hbar))`` of ``R^+``."""
    if hbar <= 0:
        raise DomainError("tau_plus needs hbar > 0")
    return complex(1.0 / np.tanh(math.pi * complex(u) / (2 * hbar)))


# ---------------------------------------------------------------------------
# the scalar factor varrho
# ---------------------------------------------------------------------------

def _log_rp_np(p, z, a):
    x = 1j * z
    return (special.loggamma(2 * p * a + x) + special.loggamma(1 + 2 * p * a + x)
            - special.loggamma((2 * p + 1) * a + x) - special.loggamma(1 + (2 * p - 1) * a + x))


def _log_rp_mp(p, z, a):
    x = 1j * z
    g = mp.loggamma
    return g(2 * p * a + x) + g(1 + 2 * p * a + x) - g((2 * p + 1) * a + x) - g(1 + (2 * p - 1) * a + x)


def _factor_args(u, eta, hbar):
    # the four R_p arguments (times eta): u, i hbar - u, 0, i hbar
    return (eta * u, eta * (1j * hbar - u), 0.0, eta * 1j * hbar), (1, 1, -1, -1)


@dataclass(frozen=True)
class VarrhoResult:
    """``varrho`` with the partial product up to ``P`` and an accelerated tail.

    ``change`` is the difference from the same evaluation at ``P // 2``;
    ``tail`` is the log of the factors beyond ``P``.
    """

    value: complex
    log_value: complex
    tail: complex
    change: float
    P: int


def _log_varrho(u, eta, hbar, P, dps):
    a = hbar * eta
    pre = (special.loggamma(a) + special.loggamma(1 + 1j * eta * u)
           - special.loggamma(a + 1j * eta * u))
    zs, signs = _factor_args(u, eta, hbar)
    p = np.arange(1, P + 1, dtype=float)
    terms = sum(s * _log_rp_np(p, z, a) for z, s in zip(zs, signs))
    partial = math.fsum(terms.real) + 1j * math.fsum(terms.imag)
    with mp.workdps(dps):
        am = mp.mpf(hbar) * mp.mpf(eta)
        zm = [mp.mpc(z) for z in zs]
        f = lambda q: sum(s * _log_rp_mp(q, z, am) for z, s in zip(zm, signs))
        tail = complex(mp.nsum(f, [P + 1, mp.inf], method="richardson"))
    return complex(pre) + partial + tail, tail


def varrho_details(u: complex, eta: float, hbar: float, P: int = 400, tol: float = 1e-10,
                   dps: int = 30, monitor: bool = True) -> VarrhoResult:
    """Scalar factor of the R-matrix.

    The infinite product is split into an explicit partial product over
    ``p <= P`` (double precision) and the logarithm of the remaining factors,
    summed by Richardson extrapolation in multiprecision.  With ``monitor``
    the computation is repeated at ``P // 2`` and :class:`ConvergenceError`
    is raised if the two disagree by more than ``tol`` (relative).
    """
    TrigParams(eta)
    if hbar <= 0:
        raise DomainError("varrho needs hbar > 0")
    if P < 2:
        raise DomainError("P must be at least 2")
    u = complex(u)
    for z in (hbar * eta, hbar * eta + 1j * eta * u, 1 + 1j * eta * u):
        if abs(z.imag) < 1e-15 and z.real <= 0 and float(z.real).is_integer():
            raise PoleError(f"Gamma pole at {z}")
    logv, tail = _log_varrho(u, eta, hbar, P, dps)
    change = 0.0
    if monitor:
        half, _ = _log_varrho(u, eta, hbar, P // 2, dps)
        change = abs(np.exp(logv) - np.exp(half))
        if not np.isfinite(change) or change > tol * max(1.0, abs(np.exp(logv))):
            raise ConvergenceError(f"varrho changed by {change:.3g} between P={P // 2} and P={P}")
    return VarrhoResult(complex(np.exp(logv)), logv, tail, float(change), P)


def varrho(u: complex, eta: float, hbar: float, P: int = 400, tol: float = 1e-10) -> complex:
    return varrho_details(u, eta, hbar, P, tol).value


# ---------------------------------------------------------------------------
# expansion coefficients
# ---------------------------------------------------------------------------

def r0(u: complex, eta: float) -> np.ndarray:
    """Classical trigonometric r-matrix."""
    x = math.pi * eta * complex(u)
    s = _sinh(x)
    cth = np.cosh(x) / s
    M = np.zeros((4, 4), dtype=complex)
    M[0, 0] = M[3, 3] = cth
    M[1, 2] = M[2, 1] = 1.0 / s
    return -1j * math.pi * eta * M


def _diag_off(u, eta):
    x = math.pi * eta * complex(u)
    if abs(x) < 1e-4:
        # series: cth - x/sh^2 = 2x/3 - ..., x ch/sh^2 - 1/sh = x/3 - ...
        return 2 * x / 3 - 2 * x ** 3 / 45, x / 3 - 7 * x ** 3 / 90
    s = _sinh(x)
    ch = np.cosh(x)
    return ch / s - x / s ** 2, x * ch / s ** 2 - 1.0 / s


def r1_diff(u: complex, eta: float) -> np.ndarray:
    """``r1 - r1'``: the middle block ``i pi eta^2 [[d, o], [o, d]]``."""
    d, o = _diag_off(u, eta)
    M = np.zeros((4, 4), dtype=complex)
    M[1, 1] = M[2, 2] = d
    M[1, 2] = M[2, 1] = o
    return 1j * math.pi * eta ** 2 * M


def varrho0(u: complex, eta: float) -> complex:
    """``(i pi eta^2 / 2) (coth(pi eta u) - pi eta u / sinh^2(pi eta u))``."""
    d, _ = _diag_off(u, eta)
    return complex(0.5j * math.pi * eta ** 2 * d)


@dataclass(frozen=True)
class ExpansionData:
    r0: np.ndarray
    r1_diff: np.ndarray
    varrho0: complex
    kappa: complex


def expansion_data(u: complex, eta: float) -> ExpansionData:
    kappa, _ = traceless_shift(eta, u)
    return ExpansionData(r0(u, eta), r1_diff(u, eta), varrho0(u, eta), kappa)


def traceless_shift(eta: float, u: complex) -> tuple[complex, np.ndarray]:
    """``kappa = -tr(r0)/4`` and the traceless ``r0 + kappa id``."""
    m = r0(u, eta)
    kappa = -np.trace(m) / 4
    return complex(kappa), m + kappa * ID4


def richardson(values: Sequence, hs: Sequence[float], order: int = 1):
    """Repeated Richardson extrapolation to ``h -> 0`` for ``h``-halving grids.

    ``values[i]`` is sampled at ``hs[i]`` with ``hs[i+1] = hs[i]/2`` and an
    error expansion in integer powers of ``h`` starting at ``h^order``.
    Returns the fully extrapolated value.
    """
    hs = [float(h) for h in hs]
    for h0, h1 in zip(hs, hs[1:]):
        if not math.isclose(h0, 2 * h1, rel_tol=1e-9):
            raise DomainError("Richardson extrapolation needs a halving grid")
    col = [np.asarray(v) for v in values]
    k = order
    while len(col) > 1:
        f = 2.0 ** k
        col = [(f * b - a) / (f - 1) for a, b in zip(col, col[1:])]
        k += 1
    return col[0]


@dataclass
class ExpansionResult:
    """Residuals of the three expansion statements on an ``hbar`` grid.

    ``a`` is first order, ``b`` and ``c`` are the raw second-order
    quotients; ``b_extrapolated`` and ``c_extrapolated`` are the residuals
    after eliminating the ``O(hbar)`` and higher remainders across the grid.
    """

    hbars: list
    a: list
    b: list
    c: list
    b_extrapolated: float
    c_extrapolated: float
    a_monotone: bool
    c_values: list = field(default_factory=list)


def expansion_check(u: complex, eta: float, hbars: Sequence[float] = (1e-2, 5e-3, 2.5e-3),
                    c: float = 1.0, P: int = 400, with_varrho: bool = True,
                    strict: bool = False) -> ExpansionResult:
    """Semiclassical expansion of ``Rbar`` and of ``varrho(eta')/varrho(eta)``.

    (a) ``|(Rbar - 1)/hbar - r0 - i pi eta coth(pi eta u) id|``,
    (b) ``|(Rbar(eta') - Rbar(eta))/hbar^2 + c (r1 - r1')|``,
    (c) ``|(varrho(eta')/varrho(eta) - 1)/hbar^2 - c varrho0|``,
    with ``eta' = eta / (1 + eta c hbar)``.  All three remainders are
    ``O(hbar)``.  ``strict`` raises :class:`ConvergenceError` when (a) is not
    monotone on the grid.
    """
    hbars = [float(h) for h in hbars]
    if any(h <= 0 for h in hbars) or any(b >= a for a, b in zip(hbars, hbars[1:])):
        raise DomainError("hbar grid must be positive and strictly decreasing")
    data = expansion_data(u, eta)
    x = math.pi * eta * complex(u)
    lin = data.r0 + 1j * math.pi * eta * np.cosh(x) / _sinh(x) * ID4
    ra, qb, qc, rb, rc = [], [], [], [], []
    for h in hbars:
        ep = eta / (1 + eta * c * h)
        R = rbar(u, eta, h).entries
        ra.append(float(np.abs((R - ID4) / h - lin).max()))
        B = (rbar(u, ep, h).entries - R) / h ** 2
        qb.append(B)
        rb.append(float(np.abs(B + c * data.r1_diff).max()))
        if with_varrho:
            l1 = varrho_details(u, ep, h, P, monitor=False).log_value
            l0 = varrho_details(u, eta, h, P, monitor=False).log_value
            q = np.expm1(l1 - l0) / h ** 2
            qc.append(q)
            rc.append(float(abs(q - c * data.varrho0)))
    mono = all(b < a for a, b in zip(ra, ra[1:]))
    if strict and not mono:
        raise ConvergenceError("residual (a) is not monotone on the hbar grid")
    try:
        bx = float(np.abs(richardson(qb, hbars) + c * data.r1_diff).max())
        cx = float(abs(richardson(qc, hbars) - c * data.varrho0)) if with_varrho else math.nan
    except DomainError:
        bx = cx = math.nan
    return ExpansionResult(hbars, ra, rb, rc, bx, cx, mono, qc)


def eta_derivative_identity(u: complex, eta: float, step: float = 1e-4,
                            extrapolate: bool = True) -> float:
    """``|(r1 - r1') - varrho0 id - eta^2 d r0_tilde / d eta|`` with a central difference.

    With ``extrapolate`` one Richardson step is applied (fourth order).
    """
    if not (0 < step < eta):
        raise DomainError("step must satisfy 0 < step < eta")

    def D(h):
        return (traceless_shift(eta + h, u)[1] - traceless_shift(eta - h, u)[1]) / (2 * h)

    d = (4 * D(step / 2) - D(step)) / 3 if extrapolate else D(step)
    if not np.all(np.isfinite(d)):
        raise ConvergenceError("eta-derivative is not finite")
    lhs = r1_diff(u, eta) - varrho0(u, eta) * ID4
    return float(np.abs(lhs - eta ** 2 * d).max())


def cybe_residual(r, u: complex, v: complex) -> float:
    """``|[r12(u-v), r13(u)] + [r12(u-v), r23(v)] + [r13(u), r23(v)]|`` for a 4x4 ``r(.)``."""
    I2 = np.eye(2)

    def emb(m, slots):
        m4 = np.asarray(m).reshape(2, 2, 2, 2)
        if slots == (0, 1):
            return np.einsum("abcd,ef->abecdf", m4, I2).reshape(8, 8)
        if slots == (0, 2):
            return np.einsum("aecf,bd->abecdf", m4, I2).reshape(8, 8)
        return np.einsum("bedf,ac->abecdf", m4, I2).reshape(8, 8)

    r12 = emb(r(u - v), (0, 1))
    r13 = emb(r(u), (0, 2))
    r23 = emb(r(v), (1, 2))
    com = lambda A, B: A @ B - B @ A
    return float(np.abs(com(r12, r13) + com(r12, r23) + com(r13, r23)).max())


# ---------------------------------------------------------------------------
# the [L1, L2] relation
# ---------------------------------------------------------------------------

# symbolic basis: h(u1), e(u1), f(u1), h(u2), e(u2), f(u2), c
_IDX = {"H": 0, "E": 1, "F": 2}
# L = [[h/2, f], [e, -h/2]] as (row, col) -> list of (gtype, factor)
_L_ENTRIES = {(0, 0): [("H", 0.5)], (1, 1): [("H", -0.5)], (0, 1): [("F", 1.0)], (1, 0): [("E", 1.0)]}


def _L_symbolic(offset: int) -> np.ndarray:
    L = np.zeros((2, 2, 7), dtype=complex)
    for (i, j), ents in _L_ENTRIES.items():
        for g, f in ents:
            L[i, j, offset + _IDX[g]] += f
    return L


def ll_structure_check(u1: complex, u2: complex, eta: float, c: float) -> float:
    """Compare the ``[L1(u1), L2(u2)]`` relation with the algebra bracket.

    The right side ``[L1 + L2, r0(u)] + c ((r1 - r1') - varrho0 id)`` is
    expanded with symbolic entries of ``L(u) = [[h/2, f], [e, -h/2]]``; the
    left side is assembled from :func:`curalg.trigcur.bracket` of the plus
    generators.  Returns the largest coefficient difference over all 16
    matrix entries and 7 basis elements.
    """
    p = TrigParams(eta)
    p.check("plus", u1)
    p.check("plus", u2)
    u = complex(u1) - complex(u2)
    if abs(u) < 1e-12:
        raise CoincidentPointError("ll_structure_check needs distinct points")
    L1 = np.einsum("ijn,kl->ikjln", _L_symbolic(0), np.eye(2)).reshape(4, 4, 7)
    L2 = np.einsum("ij,kln->ikjln", np.eye(2), _L_symbolic(3)).reshape(4, 4, 7)
    A = L1 + L2
    r = r0(u, eta)
    rhs = np.einsum("abn,bc->acn", A, r) - np.einsum("ab,bcn->acn", r, A)
    rhs[:, :, 6] += c * (r1_diff(u, eta) - varrho0(u, eta) * ID4)

    def vec(el):
        v = np.zeros(7, dtype=complex)
        for t in el.terms:
            off = 0 if t.point == complex(u1) else 3
            v[off + _IDX[t.gtype]] += t.coeff
        v[6] += el.central
        return v

    lhs = np.zeros((4, 4, 7), dtype=complex)
    for (i, j), left in _L_ENTRIES.items():
        for (k, l), right in _L_ENTRIES.items():
            for g1, f1 in left:
                for g2, f2 in right:
                    br = _term_bracket(GeneratorTerm(g1, "plus", u1), GeneratorTerm(g2, "plus", u2), c, p)
                    lhs[2 * i + k, 2 * j + l] += f1 * f2 * vec(br)
    return float(np.abs(lhs - rhs).max())
