"""Elliptic current algebra, its classical r-matrix and the Baxter R-matrix.

Generators ``sigma_a^+(u)`` (``a = 1, 2, 3``) have kernels
``omega_1 = 1/sn``, ``omega_2 = dn/sn``, ``omega_3 = cn/sn`` evaluated at
``z - u``.  Plus points lie in ``-K' < Im u < 0``, minus points in
``0 < Im u < K'``, and ``sigma_a^-(u) = sigma_a^+(u - iK')``.  Brackets
are computed on plus representatives:

    [sigma_a(u1), sigma_b(u2)] = 2i (omega_a(u) sigma_c(u2) - omega_b(u) sigma_c(u1))
    [sigma_a(u1), sigma_a(u2)] = (c / K) d omega_a(u) / d tau

for cyclic ``(a, b, c)`` and ``u = u1 - u2``; the tau-derivative is taken
at fixed ``u``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CoincidentPointError, ConvergenceError, DomainError, PoleError
from .rmat_trig import cybe_residual
from .specfun import (EllipticModulus, d_omega_dtau, d_omega_dtau_closed, jacobi_sncndn,
                      modulus_from_tau, omega, sncndn_tau)
from .trigcur import Wedge

__all__ = [
    "SigmaTerm", "EllipticElement", "sgen", "sigma_kernel", "ell_bracket", "ell_cocycle",
    "ell_jacobi_residual", "ell_cobracket", "fourier_coeff", "sigma_fourier_series",
    "FourierCalibration", "calibrate_fourier_scale", "ell_mode_bracket", "EllModeBracket",
    "series_bracket_check", "mode_central_check", "ell_mode_cobracket",
    "mode_cobracket_consistency", "r_ell", "r_ell_tau", "dr_dtau", "ell_cybe_residual",
    "ell_ll_check", "baxter_matrix", "sklyanin_matrix", "BaxterSklyanin",
    "baxter_to_sklyanin", "ClassicalLimit", "ell_classical_limit", "PAULI",
]

STRIP_MARGIN = 1e-9
PAULI = {
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}
_SS = {a: np.kron(P, P) for a, P in PAULI.items()}
_NEXT = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


@dataclass(frozen=True)
class SigmaTerm:
    a: int
    branch: str
    point: complex
    coeff: complex = 1.0

    def __post_init__(self):
        if self.a not in (1, 2, 3):
            raise DomainError(f"sigma index must be 1, 2 or 3, got {self.a}")
        if self.branch not in ("plus", "minus"):
            raise DomainError(f"unknown branch {self.branch!r}")
        object.__setattr__(self, "point", complex(self.point))
        object.__setattr__(self, "coeff", complex(self.coeff))

    @property
    def key(self):
        return (self.a, self.branch, self.point)


class EllipticElement:
    """Finite combination of ``sigma_a^(+-)(u)`` plus a multiple of ``c``."""

    __slots__ = ("_terms", "central")

    def __init__(self, terms: Iterable[SigmaTerm] = (), central: complex = 0.0):
        acc: dict = {}
        for t in terms:
            acc[t.key] = acc.get(t.key, 0j) + t.coeff
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self.central = complex(central)

    @property
    def terms(self) -> list[SigmaTerm]:
        items = sorted(self._terms.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].real, kv[0][2].imag))
        return [SigmaTerm(a, b, p, c) for (a, b, p), c in items]

    def coeffs(self) -> dict:
        return dict(self._terms)

    def __add__(self, other):
        return EllipticElement(self.terms + other.terms, self.central + other.central)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s: complex) -> "EllipticElement":
        return EllipticElement((SigmaTerm(t.a, t.branch, t.point, s * t.coeff) for t in self.terms),
                               s * self.central)

    def max_abs(self) -> float:
        return max([abs(v) for v in self._terms.values()] + [abs(self.central)])

    def __repr__(self):
        parts = [f"{t.coeff:.6g}*s{t.a}{'+' if t.branch == 'plus' else '-'}({t.point:.6g})" for t in self.terms]
        if self.central:
            parts.append(f"{self.central:.6g}*c")
        return "EllipticElement(" + " + ".join(parts or ["0"]) + ")"


def sgen(a: int, branch: str, u: complex, coeff: complex = 1.0) -> EllipticElement:
    return EllipticElement([SigmaTerm(a, branch, u, coeff)])


def _check_strip(branch: str, u: complex, m: EllipticModulus) -> None:
    y = complex(u).imag
    ok = (-m.K_prime + STRIP_MARGIN < y < -STRIP_MARGIN) if branch == "plus" else \
        (STRIP_MARGIN < y < m.K_prime - STRIP_MARGIN)
    if not ok:
        raise DomainError(f"{branch} point {u} outside its strip (K'={m.K_prime:.6g})")


def _rep(t: SigmaTerm, m: EllipticModulus) -> complex:
    return t.point if t.branch == "plus" else t.point - 1j * m.K_prime


def sigma_kernel(a: int, branch: str, w: complex, m: EllipticModulus) -> complex:
    """Kernel of ``sigma_a^branch`` at ``w = z - u``; minus evaluates at ``w + iK'``."""
    if branch not in ("plus", "minus"):
        raise DomainError(f"unknown branch {branch!r}")
    w = complex(w)
    if branch == "minus":
        w = w + 1j * m.K_prime
    return omega(a, w, m)


def ell_cocycle(a: int, b: int, w: complex, m: EllipticModulus, mode: str = "closed") -> complex:
    """Central value ``delta_ab (1/K) d omega_a(w) / d tau`` at fixed ``w``.

    ``mode="closed"`` uses the modulus-derivative formulas, ``"numeric_tau_fd"``
    a Richardson-corrected central difference in ``tau``.
    """
    if a not in (1, 2, 3) or b not in (1, 2, 3):
        raise DomainError("sigma indices must be 1, 2 or 3")
    if a != b:
        return 0j
    if mode == "closed":
        d = d_omega_dtau_closed(a, w, m)
    elif mode == "numeric_tau_fd":
        d = d_omega_dtau(a, w, m.tau)
    else:
        raise DomainError(f"unknown cocycle mode {mode!r}")
    return complex(d / m.K)


def _term_bracket(t1: SigmaTerm, t2: SigmaTerm, c: float, m: EllipticModulus, mode: str) -> EllipticElement:
    _check_strip(t1.branch, t1.point, m)
    _check_strip(t2.branch, t2.point, m)
    w = _rep(t1, m) - _rep(t2, m)
    if abs(w) < 1e-12:
        raise CoincidentPointError(f"coincident points {t1.point} and {t2.point}")
    pref = t1.coeff * t2.coeff
    if t1.a == t2.a:
        return EllipticElement([], pref * c * ell_cocycle(t1.a, t1.a, w, m, mode))
    if _NEXT[t1.a][0] != t2.a:
        return _term_bracket(t2, t1, c, m, mode).scale(-1)
    a, b = t1.a, t2.a
    cc = _NEXT[a][1]
    return EllipticElement([SigmaTerm(cc, t2.branch, t2.point, pref * 2j * omega(a, w, m)),
                            SigmaTerm(cc, t1.branch, t1.point, -pref * 2j * omega(b, w, m))])


def ell_bracket(x: EllipticElement, y: EllipticElement, c: float, m: EllipticModulus,
                mode: str = "closed") -> EllipticElement:
    """Bracket of the centrally extended elliptic algebra (inputs' central parts are inert).

    Mixed-branch brackets use the representative difference
    ``u1 - u2 +- iK'`` in the structure functions and the cocycle.
    """
    acc = EllipticElement()
    for t1 in x.terms:
        for t2 in y.terms:
            acc = acc + _term_bracket(t1, t2, c, m, mode)
    return acc


def ell_jacobi_residual(x, y, z, c: float, m: EllipticModulus) -> float:
    reps = [_rep(t, m) for e in (x, y, z) for t in e.terms]
    if min((abs(p - q) for i, p in enumerate(reps) for q in reps[i + 1:]), default=1) < 1e-12:
        raise CoincidentPointError("Jacobi harness needs pairwise distinct points")
    J = (ell_bracket(ell_bracket(x, y, c, m), z, c, m)
         + ell_bracket(ell_bracket(y, z, c, m), x, c, m)
         + ell_bracket(ell_bracket(z, x, c, m), y, c, m))
    return J.max_abs()


def ell_cobracket(a: int, u: complex, branch: str = "plus", coeff: complex = 1.0) -> list[Wedge]:
    """Level-0 cobracket ``delta sigma_a(u) = sigma_b(u) ^ sigma_c(u)`` for cyclic ``(a, b, c)``."""
    if a not in (1, 2, 3):
        raise DomainError(f"sigma index must be 1, 2 or 3, got {a}")
    b, c = _NEXT[a]
    return [Wedge(complex(coeff), (b, branch, complex(u)), (c, branch, complex(u)))]


# ---------------------------------------------------------------------------
# Fourier modes
# ---------------------------------------------------------------------------

def _parity_ok(a: int, l: int) -> bool:
    return (l % 2 == 1) if a in (1, 2) else (l % 2 == 0)


def fourier_coeff(a: int, l: int, m: EllipticModulus) -> complex:
    """``(i pi / K) p^l / (p^l - 1)`` for a=1 and ``(i pi / K) p^l / (p^l + 1)`` for a=2, 3."""
    if not _parity_ok(a, l):
        return 0j
    pl = m.nome_p ** l
    den = pl - 1 if a == 1 else pl + 1
    if abs(den) < 1e-300:
        raise PoleError(f"Fourier coefficient pole at l={l}")
    return complex(1j * math.pi / m.K * pl / den)


def _auto_N(w: complex, m: EllipticModulus, scale: float) -> int:
    y = complex(w).imag
    g = 2 * math.pi * scale
    # decay per step for l -> -inf and l -> +inf
    r_neg = math.exp(g * y)
    r_pos = abs(m.nome_p) * math.exp(-g * y)
    r = max(r_neg, r_pos)
    if r >= 1:
        raise ConvergenceError(f"Fourier series diverges at w={w}")
    return int(min(20000, max(8, math.ceil(math.log(1e-13) / math.log(r)))))


def sigma_fourier_series(a: int, w: complex, N: int | None, m: EllipticModulus,
                         scale: float | None = None) -> complex:
    """Partial sum ``sum_{|l|<=N} C_a(l) exp(2 pi i l scale w)`` with the parity selection.

    With the natural scale ``1/(4K)`` (the default) the series equals
    ``omega_a(w)`` for ``-2K' < Im w < 0``.  ``N=None`` picks the truncation
    from the geometric decay rates.  Raises :class:`ConvergenceError` when the
    terms grow with ``|l|``.
    """
    if a not in (1, 2, 3):
        raise DomainError(f"sigma index must be 1, 2 or 3, got {a}")
    scale = 1.0 / (4 * m.K) if scale is None else float(scale)
    w = complex(w)
    if N is None:
        N = _auto_N(w, m, scale)
    if N < 1:
        raise DomainError("N must be at least 1")
    ls = np.array([l for l in range(-N, N + 1) if _parity_ok(a, l)])
    pl = m.nome_p ** ls.astype(float)
    den = pl - 1 if a == 1 else pl + 1
    with np.errstate(over="ignore", invalid="ignore"):
        terms = (1j * math.pi / m.K) * pl / den * np.exp(2j * math.pi * ls * scale * w)
    mags = np.abs(terms)
    if not np.all(np.isfinite(mags)):
        raise ConvergenceError("Fourier terms overflow")
    if N >= 4 and max(mags[0], mags[-1]) >= 0.5 * mags.max() > 0:
        raise ConvergenceError(f"Fourier terms grow with |l| at w={w}")
    return complex(terms.sum())


@dataclass(frozen=True)
class FourierCalibration:
    """Fitted argument scale, its ratio to ``1/(4K)`` and the max residual on the grid."""

    scale: float
    ratio_to_quarter_period: float
    residual: float


def calibrate_fourier_scale(a: int, m: EllipticModulus, grid: Sequence[complex] | None = None,
                            N: int = 80) -> FourierCalibration:
    """Fit the scale ``s`` in ``exp(2 pi i l s w)`` so the series matches ``omega_a``.

    A coarse logarithmic scan over four decades is refined by bounded scalar
    minimisation of the max residual on ``grid`` (default: points with
    ``Im w = -K'/2``).
    """
    from scipy.optimize import minimize_scalar

    if grid is None:
        grid = [x - 0.5j * m.K_prime for x in np.linspace(-0.9 * m.K, 0.9 * m.K, 7)]
    target = np.array([omega(a, w, m) for w in grid])

    def err(s):
        try:
            vals = np.array([sigma_fourier_series(a, w, N, m, s) for w in grid])
        except (ConvergenceError, OverflowError, FloatingPointError):
            return math.inf
        r = float(np.abs(vals - target).max())
        return r if math.isfinite(r) else math.inf

    cands = np.geomspace(1e-2 / m.K, 10.0 / m.K, 400)
    errs = [err(s) for s in cands]
    i = int(np.argmin(errs))
    lo, hi = cands[max(i - 1, 0)], cands[min(i + 1, len(cands) - 1)]
    with np.errstate(all="ignore"):
        opt = minimize_scalar(err, bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-14 / m.K, "maxiter": 200})
    s = float(opt.x)
    return FourierCalibration(s, s * 4 * m.K, err(s))


@dataclass(frozen=True)
class EllModeBracket:
    """``[sigma_a^k, sigma_b^l] = coeff * sigma_index^mode + central``."""

    index: int | None
    mode: int
    coeff: complex
    central: float


def ell_mode_bracket(a: int, k: int, b: int, l: int, c: float) -> EllModeBracket:
    """Loop-algebra relations ``2 i eps_abc sigma_c^{k+l} + c k delta_ab delta_{k,-l}``."""
    if a not in (1, 2, 3) or b not in (1, 2, 3):
        raise DomainError("sigma indices must be 1, 2 or 3")
    if a == b:
        return EllModeBracket(None, k + l, 0j, c * k if k == -l else 0.0)
    cc = 6 - a - b
    eps = 1.0 if _NEXT[a][0] == b else -1.0
    return EllModeBracket(cc, k + l, 2j * eps, 0.0)


def series_bracket_check(a: int, b: int, u1: complex, u2: complex, m: EllipticModulus,
                         modes: Iterable[int] = (-3, -2, -1, 0, 1, 2, 3), N: int | None = None) -> float:
    """Bracket of truncated Fourier series against the generating-function bracket.

    ``(a, b)`` must be cyclically ordered and ``-2K' < Im(u1 - u2) < 0`` so
    that both sides have convergent expansions.

    For each output mode ``n`` the coefficient of ``sigma_c^n`` in
    ``sum_{k,l} C_a(k) C_b(l) E_k(u1) E_l(u2) [sigma_a^k, sigma_b^l]`` is
    compared with that of ``2i (omega_a(u) sigma_c(u2) - omega_b(u) sigma_c(u1))``.
    """
    if a not in (1, 2, 3) or b != _NEXT.get(a, (None,))[0]:
        raise DomainError("series bracket check needs a cyclic pair (a, b)")
    s = 1.0 / (4 * m.K)
    E = lambda l, x: cmath.exp(2j * math.pi * l * s * x)
    u = complex(u1) - complex(u2)
    if not -2 * m.K_prime < u.imag < 0:
        raise DomainError("series bracket needs -2K' < Im(u1 - u2) < 0")
    if N is None:
        N = max(_auto_N(u, m, s), 40)
    mb = ell_mode_bracket(a, 1, b, 1, 0.0)
    cc = mb.index
    worst = 0.0
    for n in modes:
        if not _parity_ok(cc, n):
            continue
        ks = np.array([k for k in range(-N, N + 1) if _parity_ok(a, k) and _parity_ok(b, n - k)])
        lhs = sum(fourier_coeff(a, int(k), m) * fourier_coeff(b, int(n - k), m)
                  * E(k, u1) * E(n - k, u2) for k in ks) * mb.coeff
        rhs = 2j * fourier_coeff(cc, n, m) * (omega(a, u, m) * E(n, u2) - omega(b, u, m) * E(n, u1))
        worst = max(worst, abs(lhs - rhs))
    return worst


def mode_central_check(a: int, u: complex, m: EllipticModulus, N: int = 120,
                       step: float = 1e-4) -> tuple[float, complex, complex]:
    """The standard mode cocycle summed against the series coefficients.

    ``sum_k k C_a(k) C_a(-k) E_k(u)`` equals ``K^-2 d(K omega_a)/d tau`` at
    fixed ``v = pi u / (2K)``, which differs from the fixed-``u`` derivative
    used by :func:`ell_cocycle` by a multiple of ``omega_a``.  Returns
    ``(residual, series value, derivative value)``.
    """
    s = 1.0 / (4 * m.K)
    u = complex(u)
    val = sum(k * fourier_coeff(a, k, m) * fourier_coeff(a, -k, m) * cmath.exp(2j * math.pi * k * s * u)
              for k in range(-N, N + 1) if _parity_ok(a, k))
    v = math.pi * u / (2 * m.K)

    def Kw(t):
        mm = modulus_from_tau(t)
        return mm.K * omega(a, 2 * mm.K * v / math.pi, mm)

    h = step * m.tau.imag
    D = lambda hh: (Kw(m.tau + 1j * hh) - Kw(m.tau - 1j * hh)) / (2j * hh)
    d = (4 * D(h / 2) - D(h)) / 3 / m.K ** 2
    return float(abs(val - d)), complex(val), complex(d)


_COB = {1: (2, 3, -1, 1, 1), 2: (3, 1, 1, 1, -1), 3: (1, 2, 1, -1, 1)}


def ell_mode_cobracket(a: int, k: int, p: complex, Ncut: int) -> dict:
    """Coefficients of ``sigma_b^i ^ sigma_c^j`` (``i + j = k``) in ``delta sigma_a^k``.

    ``delta sigma_1^k``: ``(p^k - 1)/((p^i + 1)(p^j + 1))``;
    ``delta sigma_2^k``: ``(p^k + 1)/((p^i + 1)(p^j - 1))``;
    ``delta sigma_3^k``: ``(p^k + 1)/((p^i - 1)(p^j + 1))``.
    Only index pairs with the parities of the Fourier modes of ``b`` and
    ``c`` appear.  Returns ``{(i, j): coefficient}``.
    """
    if a not in (1, 2, 3):
        raise DomainError(f"sigma index must be 1, 2 or 3, got {a}")
    if abs(p) >= 1:
        raise DomainError("nome must satisfy |p| < 1")
    b, c, sk, si, sj = _COB[a]
    out = {}
    for i in range(-Ncut, Ncut + 1):
        j = k - i
        if abs(j) > Ncut or not (_parity_ok(b, i) and _parity_ok(c, j)):
            continue
        di = p ** i + si
        dj = p ** j + sj
        if abs(di) < 1e-15 or abs(dj) < 1e-15:
            raise PoleError(f"denominator vanishes at i={i}, j={j}")
        out[(i, j)] = complex((p ** k + sk) / (di * dj))
    return out


def mode_cobracket_consistency(a: int, k: int, m: EllipticModulus, Ncut: int = 9) -> float:
    """Compare the mode cobracket with the pointwise one on Fourier coefficients.

    Substituting the series into ``sigma_b(u) ^ sigma_c(u)`` gives the
    coefficient ``C_b(i) C_c(j)`` on ``sigma_b^i ^ sigma_c^j``; the mode
    cobracket gives ``C_a(k) * coeff(i, j)``.  The two agree up to the
    constant factor ``i pi / K`` of the series normalisation.
    """
    b, c = _NEXT[a]
    if not _parity_ok(a, k):
        raise DomainError(f"mode {k} does not occur in sigma_{a}")
    tab = ell_mode_cobracket(a, k, m.nome_p, Ncut)
    f = 1j * math.pi / m.K
    worst = 0.0
    for (i, j), coef in tab.items():
        lhs = f * fourier_coeff(a, k, m) * coef
        rhs = fourier_coeff(b, i, m) * fourier_coeff(c, j, m)
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    return worst


# ---------------------------------------------------------------------------
# classical r-matrix
# ---------------------------------------------------------------------------

def r_ell(u: complex, m: EllipticModulus) -> np.ndarray:
    """``sum_a omega_a(u) sigma_a (x) sigma_a``."""
    sn, cn, dn = jacobi_sncndn(u, m.k)
    if abs(sn) < 1e-14:
        raise PoleError(f"r has a pole at u={u}")
    w = {1: 1 / sn, 2: dn / sn, 3: cn / sn}
    return sum(w[a] * _SS[a] for a in (1, 2, 3))


def r_ell_tau(u: complex, tau: complex) -> np.ndarray:
    """Same as :func:`r_ell` for a general (possibly complex-modulus) ``tau``."""
    sn, cn, dn, _ = sncndn_tau(u, tau)
    if abs(sn) < 1e-14:
        raise PoleError(f"r has a pole at u={u}")
    w = {1: 1 / sn, 2: dn / sn, 3: cn / sn}
    return sum(w[a] * _SS[a] for a in (1, 2, 3))


def dr_dtau(u: complex, m: EllipticModulus, mode: str = "closed") -> np.ndarray:
    if mode == "closed":
        return sum(d_omega_dtau_closed(a, u, m) * _SS[a] for a in (1, 2, 3))
    if mode == "numeric_tau_fd":
        return sum(d_omega_dtau(a, u, m.tau) * _SS[a] for a in (1, 2, 3))
    raise DomainError(f"unknown derivative mode {mode!r}")


def ell_cybe_residual(u: complex, v: complex, m: EllipticModulus) -> float:
    return cybe_residual(lambda z: r_ell(z, m), u, v)


def ell_ll_check(u1: complex, u2: complex, m: EllipticModulus, c: float,
                 derivative: str = "numeric_tau_fd") -> float:
    """``[L1(u1), L2(u2)] = [L1 + L2, r(u)] + (c/K) dr(u)/dtau`` with ``L = sum_a sigma_a^+ P_a``.

    The right side is expanded with symbolic entries over the basis
    ``sigma_1..3(u1), sigma_1..3(u2), c``; the left side comes from
    :func:`ell_bracket`.  ``dr/dtau`` is by default a finite difference, so
    the central terms are compared against an independent evaluation.
    """
    _check_strip("plus", u1, m)
    _check_strip("plus", u2, m)
    u = complex(u1) - complex(u2)
    if abs(u) < 1e-12:
        raise CoincidentPointError("ell_ll_check needs distinct points")
    I2 = np.eye(2)
    L1 = np.zeros((4, 4, 7), dtype=complex)
    L2 = np.zeros((4, 4, 7), dtype=complex)
    for a in (1, 2, 3):
        L1[:, :, a - 1] = np.kron(PAULI[a], I2)
        L2[:, :, 3 + a - 1] = np.kron(I2, PAULI[a])
    A = L1 + L2
    r = r_ell(u, m)
    rhs = np.einsum("abn,bc->acn", A, r) - np.einsum("ab,bcn->acn", r, A)
    rhs[:, :, 6] += c / m.K * dr_dtau(u, m, derivative)

    lhs = np.zeros((4, 4, 7), dtype=complex)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            br = ell_bracket(sgen(a, "plus", u1), sgen(b, "plus", u2), c, m)
            v = np.zeros(7, dtype=complex)
            for t in br.terms:
                v[(0 if t.point == complex(u1) else 3) + t.a - 1] += t.coeff
            v[6] = br.central
            lhs += np.kron(PAULI[a], PAULI[b])[:, :, None] * v[None, None, :]
    return float(np.abs(lhs - rhs).max())


# ---------------------------------------------------------------------------
# Baxter and Sklyanin R-matrices
# ---------------------------------------------------------------------------

def baxter_matrix(v: float, hbar: float, k_tilde: float) -> np.ndarray:
    """Eight-vertex matrix with ``a = sn(hbar + iv)``, ``b = sn(iv)``, ``c = sn(hbar)``,
    ``d = k sn(hbar) sn(iv) sn(hbar + iv)`` at modulus ``k_tilde`` (no scalar factor)."""
    sn = lambda x: jacobi_sncndn(x, k_tilde)[0]
    a = sn(hbar + 1j * v)
    b = sn(1j * v)
    c = sn(hbar)
    d = k_tilde * c * b * a
    return np.array([[a, 0, 0, d], [0, b, c, 0], [0, c, b, 0], [d, 0, 0, a]], dtype=complex)


def _W(u: complex, zeta: float, tau: complex):
    s, c_, d, _ = sncndn_tau(u + zeta, tau)
    sz, cz, dz, _ = sncndn_tau(zeta, tau)
    if abs(s) < 1e-14:
        raise PoleError(f"sn(u + zeta) vanishes at u={u}")
    return sz / s, sz * d / (s * dz), sz * c_ / (s * cz)


def sklyanin_matrix(u: complex, zeta: float, tau: complex) -> np.ndarray:
    """``1 + sum_a W_a(u) sigma_a (x) sigma_a`` (no scalar factor); ``tau`` may be complex."""
    W = _W(u, zeta, tau)
    return np.eye(4, dtype=complex) + sum(W[a - 1] * _SS[a] for a in (1, 2, 3))


@dataclass(frozen=True)
class BaxterSklyanin:
    baxter: np.ndarray
    sklyanin: np.ndarray
    residual: float
    k: float
    u: complex
    zeta: float


def _projective(M: np.ndarray) -> np.ndarray:
    if abs(M[0, 0]) < 1e-14:
        raise PoleError("reference entry (1,1) vanishes")
    return M / M[0, 0]


def baxter_to_sklyanin(v: float, hbar: float, k_tilde: float) -> BaxterSklyanin:
    """Map the Baxter matrix to the Sklyanin form and compare projectively.

    ``k' = (1 - k~)/(1 + k~)``, ``k = sqrt(1 - k'^2)``, ``zeta = hbar (1 + k~)/2``,
    ``u = i (1 + k~) v``.  The residual is the largest entrywise difference
    after dividing each matrix by its (1,1) entry.
    """
    if not (0 < k_tilde < 1):
        raise DomainError("k_tilde must lie in (0, 1)")
    B = baxter_matrix(v, hbar, k_tilde)
    kp = (1 - k_tilde) / (1 + k_tilde)
    k = math.sqrt((1 - kp) * (1 + kp))
    m = EllipticModulus.from_k(k)
    zeta = hbar * (1 + k_tilde) / 2
    u = 1j * (1 + k_tilde) * v
    S = sklyanin_matrix(u, zeta, m.tau)
    res = float(np.abs(_projective(B) - _projective(S)).max())
    return BaxterSklyanin(B, S, res, k, u, zeta)


@dataclass(frozen=True)
class ClassicalLimit:
    """Residual curves of the two zeta -> 0 statements and their successive ratios.

    ``b_extrapolated`` is the residual of the one-step Richardson combination
    ``2 D(zeta/2) - D(zeta)`` of the last two difference quotients (``None``
    unless the last two grid points halve); it removes the O(zeta) term that
    dominates the raw residual.
    """

    zetas: tuple
    a: tuple
    b: tuple
    a_ratios: tuple
    b_ratios: tuple
    b_extrapolated: float | None = None


def ell_classical_limit(u: complex, m: EllipticModulus, zetas: Sequence[float],
                        c: float = 1.0) -> ClassicalLimit:
    """(a) ``|(R/s - 1)/zeta - r|`` with ``s = tr(R)/4``;
    (b) ``|(R(tau + zeta c/K) - R(tau))/zeta^2 - (c/K) dr/dtau|``.

    The shifted ``tau`` has a real part, so the Sklyanin matrix is evaluated
    through theta functions at a complex modulus.
    """
    zetas = tuple(float(z) for z in zetas)
    if not zetas or any(z <= 0 for z in zetas) or any(b >= a for a, b in zip(zetas, zetas[1:])):
        raise DomainError("zeta grid must be positive and strictly decreasing")
    r = r_ell(u, m)
    dr = dr_dtau(u, m) * (c / m.K)
    ra, rb, quots = [], [], []
    I4 = np.eye(4)
    for z in zetas:
        R = sklyanin_matrix(u, z, m.tau)
        R = R / (np.trace(R) / 4)
        ra.append(float(np.abs((R - I4) / z - r).max()))
        Rs = sklyanin_matrix(u, z, m.tau + z * c / m.K)
        Rs = Rs / (np.trace(Rs) / 4)
        quots.append((Rs - R) / z ** 2)
        rb.append(float(np.abs(quots[-1] - dr).max()))
    rat = lambda xs: tuple(xs[i] / xs[i + 1] if xs[i + 1] > 0 else math.inf for i in range(len(xs) - 1))
    extra = None
    if len(zetas) >= 2 and abs(zetas[-2] - 2 * zetas[-1]) < 1e-12 * zetas[-2]:
        extra = float(np.abs(2 * quots[-1] - quots[-2] - dr).max())
    return ClassicalLimit(zetas, tuple(ra), tuple(rb), rat(ra), rat(rb), extra)
