"""Complex special functions used by the kernels.

Gamma comes from :mod:`scipy.special`, which already handles complex
arguments.  Jacobi elliptic functions of a complex argument are built from
SciPy's real-argument ``ellipj`` with the imaginary-argument addition
formula; a theta-series evaluator covers complex modular parameters, where
the modulus itself becomes complex.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "EllipticModulus",
    "gamma",
    "loggamma",
    "jacobi_sncndn",
    "elliptic_K",
    "modulus_from_tau",
    "sncndn_tau",
    "omega",
    "omega_tau",
    "d_omega_dtau",
    "d_omega_dtau_details",
    "FDResult",
    "jacobi_epsilon",
    "addition_residual",
    "d_omega_dtau_closed",
]

_POLE_TOL = 1e-14


def _is_nonpositive_integer(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and float(z.real).is_integer()


def gamma(z: complex) -> complex:
    """Gamma function at a complex point.

    Raises :class:`PoleError` at the non-positive integers.
    """
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at z={z}")
    return complex(special.gamma(complex(z)))


def loggamma(z: complex) -> complex:
    """Principal branch of log Gamma (continuous away from the negative axis)."""
    if _is_nonpositive_integer(z):
        raise PoleError(f"loggamma has a pole at z={z}")
    return complex(special.loggamma(complex(z)))


# ---------------------------------------------------------------------------
# Jacobi elliptic functions
# ---------------------------------------------------------------------------

def _check_modulus(k: float) -> float:
    k = float(k)
    if not (0.0 <= k < 1.0) or math.isnan(k):
        raise DomainError(f"modulus k={k} outside [0, 1)")
    return k


def jacobi_sncndn(u: complex, k: float) -> tuple[complex, complex, complex]:
    """Return ``(sn, cn, dn)`` of complex argument ``u`` and real modulus ``k``.

    Writes ``u = x + i y`` and combines the real-argument values at modulus
    ``k`` (for ``x``) with those at the complementary modulus (for ``y``)
    through Jacobi's imaginary transformation and the addition theorem.
    """
    k = _check_modulus(k)
    u = complex(u)
    m = k * k
    x, y = u.real, u.imag
    s, c, d, _ = special.ellipj(x, m)
    if y == 0.0:
        return complex(s), complex(c), complex(d)
    # complementary parameter 1 - m, computed without cancellation
    s1, c1, d1, _ = special.ellipj(y, 1.0 - m)
    den = c1 * c1 + m * s * s * s1 * s1
    if abs(den) < _POLE_TOL:
        raise PoleError(f"sn/cn/dn pole at u={u}, k={k}")
    sn = complex(s * d1, c * d * s1 * c1) / den
    cn = complex(c * c1, -s * d * s1 * d1) / den
    dn = complex(d * c1 * d1, -m * s * c * s1) / den
    return sn, cn, dn


def elliptic_K(k: float) -> tuple[float, float]:
    """Complete elliptic integrals ``(K(k), K(k'))`` with ``k' = sqrt(1-k^2)``."""
    k = float(k)
    if not (0.0 < k < 1.0):
        raise DomainError(f"elliptic_K needs 0 < k < 1, got k={k}")
    m = k * k
    return float(special.ellipk(m)), float(special.ellipkm1(m))


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus data: ``k``, ``k'``, quarter periods, ``tau = iK'/K`` and nome ``p``."""

    k: float
    k_prime: float
    K: float
    K_prime: float
    tau: complex
    nome_p: complex

    @classmethod
    def from_k(cls, k: float) -> "EllipticModulus":
        K, Kp = elliptic_K(k)
        kp = math.sqrt((1.0 - k) * (1.0 + k))
        tau = 1j * Kp / K
        return cls(float(k), kp, K, Kp, tau, cmath.exp(1j * math.pi * tau))

    @classmethod
    def from_tau(cls, tau: complex) -> "EllipticModulus":
        return modulus_from_tau(tau)


def _theta_constants(q: complex) -> tuple[complex, complex, complex]:
    """theta_2(0), theta_3(0), theta_4(0) for nome q, |q| < 1."""
    if abs(q) >= 1.0:
        raise ConvergenceError(f"theta series diverges for |p|={abs(q)} >= 1")
    t2 = 0j
    t3 = 1.0 + 0j
    t4 = 1.0 + 0j
    n = 0
    while True:
        a2 = 2.0 * q ** ((n + 0.5) ** 2)
        t2 += a2
        if n >= 1:
            a3 = 2.0 * q ** (n * n)
            t3 += a3
            t4 += a3 * (-1) ** n
        else:
            a3 = 0.0
        if n >= 1 and abs(a2) + abs(a3) < 1e-17 * abs(t3):
            break
        n += 1
        if n > 100000:
            raise ConvergenceError("theta-constant series did not converge")
    return t2, t3, t4


def modulus_from_tau(tau: complex) -> EllipticModulus:
    """Build the modulus record from a purely imaginary modular parameter.

    ``k = theta_2^2/theta_3^2`` and ``K = pi theta_3^2 / 2``.  Complex moduli
    (non-imaginary ``tau``) are handled by :func:`sncndn_tau` instead.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError(f"tau must lie in the upper half plane, got {tau}")
    if abs(tau.real) > 1e-14 * max(1.0, abs(tau)):
        raise DomainError("a real modulus needs purely imaginary tau; use sncndn_tau")
    q = cmath.exp(1j * math.pi * tau)
    t2, t3, t4 = _theta_constants(q)
    k = (t2 * t2 / (t3 * t3)).real
    kp = (t4 * t4 / (t3 * t3)).real
    K = (math.pi / 2.0) * (t3 * t3).real
    Kp = K * tau.imag
    return EllipticModulus(k, kp, K, Kp, 1j * tau.imag, q)


def _thetas(z: complex, q: complex) -> tuple[complex, complex, complex, complex]:
    """theta_1..theta_4 at argument z (half-period pi/2 convention)."""
    t1 = 0j
    t2 = 0j
    t3 = 1.0 + 0j
    t4 = 1.0 + 0j
    n = 0
    scale = 1.0
    while True:
        qh = q ** ((n + 0.5) ** 2)
        s = cmath.sin((2 * n + 1) * z)
        c = cmath.cos((2 * n + 1) * z)
        a1 = 2.0 * (-1) ** n * qh * s
        a2 = 2.0 * qh * c
        t1 += a1
        t2 += a2
        step = abs(a1) + abs(a2)
        if n >= 1:
            qn = q ** (n * n)
            c2 = cmath.cos(2 * n * z)
            a3 = 2.0 * qn * c2
            t3 += a3
            t4 += (-1) ** n * a3
            step += 2 * abs(a3)
        scale = max(scale, abs(t1), abs(t2), abs(t3), abs(t4))
        if n >= 2 and step < 1e-17 * scale:
            break
        n += 1
        if n > 10000:
            raise ConvergenceError("theta series did not converge")
    return t1, t2, t3, t4


def sncndn_tau(u: complex, tau: complex) -> tuple[complex, complex, complex, complex]:
    """Jacobi functions parametrised by the modular parameter ``tau``.

    Returns ``(sn, cn, dn, k)`` where ``k = theta_2^2/theta_3^2`` may be
    complex.  The argument is normalised so that ``K = pi theta_3(0)^2 / 2``,
    which agrees with :func:`jacobi_sncndn` whenever ``tau`` is imaginary.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError(f"tau must lie in the upper half plane, got {tau}")
    q = cmath.exp(1j * math.pi * tau)
    t2, t3, t4 = _theta_constants(q)
    z = complex(u) / (t3 * t3)
    th1, th2, th3, th4 = _thetas(z, q)
    if abs(th4) < _POLE_TOL:
        raise PoleError(f"pole of sn at u={u}")
    sn = (t3 / t2) * th1 / th4
    cn = (t4 / t2) * th2 / th4
    dn = (t4 / t3) * th3 / th4
    return sn, cn, dn, t2 * t2 / (t3 * t3)


def _omega_from(a: int, sn: complex, cn: complex, dn: complex, u) -> complex:
    if a not in (1, 2, 3):
        raise DomainError(f"omega index must be 1, 2 or 3, got {a}")
    if abs(sn) < _POLE_TOL:
        raise PoleError(f"omega_{a} has a pole at u={u}")
    return (1.0 / sn, dn / sn, cn / sn)[a - 1]


def omega(a: int, u: complex, m: EllipticModulus) -> complex:
    """Elliptic kernels ``omega_1 = 1/sn``, ``omega_2 = dn/sn``, ``omega_3 = cn/sn``."""
    sn, cn, dn = jacobi_sncndn(u, m.k)
    return _omega_from(a, sn, cn, dn, u)


def omega_tau(a: int, u: complex, tau: complex) -> complex:
    """Same kernels as :func:`omega`, parametrised directly by ``tau``."""
    sn, cn, dn, _ = sncndn_tau(u, tau)
    return _omega_from(a, sn, cn, dn, u)


@dataclass(frozen=True)
class FDResult:
    """Richardson-extrapolated finite difference with diagnostics."""

    value: complex
    err_estimate: float
    ratio: complex  # (D(h)-D(h/2)) / (D(h/2)-D(h/4)), about 4 for a 2nd-order stencil


def d_omega_dtau_details(a: int, u: complex, tau: complex, step: float | None = None) -> FDResult:
    """Central difference of ``omega_a(u)`` in ``tau`` at fixed ``u``.

    The step is taken along the imaginary direction so that an imaginary
    ``tau`` keeps a real modulus; by holomorphy in ``tau`` this is the
    complex derivative.
    """
    tau = complex(tau)
    if step is None:
        step = 1e-3 * abs(tau.imag)
    if not (0 < step < tau.imag):
        raise DomainError("step must be positive and keep tau in the upper half plane")

    def D(h):
        return (omega_tau(a, u, tau + 1j * h) - omega_tau(a, u, tau - 1j * h)) / (2j * h)

    d1, d2, d4 = D(step), D(step / 2), D(step / 4)
    r_coarse = (4 * d2 - d1) / 3
    r_fine = (4 * d4 - d2) / 3
    denom = d2 - d4
    ratio = (d1 - d2) / denom if denom != 0 else complex("inf")
    err = abs(r_fine - r_coarse)
    if not np.isfinite(err) or err > 1e-5 * max(1.0, abs(r_fine)):
        raise ConvergenceError(f"tau-derivative did not converge (estimate {err:.3g})")
    return FDResult(r_fine, float(err), ratio)


def d_omega_dtau(a: int, u: complex, tau: complex, step: float | None = None) -> complex:
    """``d omega_a(u) / d tau`` by a Richardson-corrected central difference."""
    return d_omega_dtau_details(a, u, tau, step).value


def jacobi_epsilon(u: complex, m: EllipticModulus) -> complex:
    """Jacobi's epsilon function ``E(u) = int_0^u dn^2``, via ``Z(u) + (E/K) u``.

    The zeta function is the logarithmic derivative of theta_4 in the
    variable ``v = pi u / (2K)``.
    """
    u = complex(u)
    E = float(special.ellipe(m.k * m.k))
    q = m.nome_p
    v = math.pi * u / (2 * m.K)
    num = 0j
    den = 1.0 + 0j
    n = 1
    while True:
        qn = q ** (n * n) * (-1) ** n
        a = 2 * qn * cmath.cos(2 * n * v)
        b = -4 * n * qn * cmath.sin(2 * n * v)
        den += a
        num += b
        if abs(a) + abs(b) < 1e-17 * (abs(den) + abs(num)):
            break
        n += 1
        if n > 10000:
            raise ConvergenceError("theta_4 series did not converge")
    if abs(den) < _POLE_TOL:
        raise PoleError(f"theta_4 vanishes at u={u}")
    return (math.pi / (2 * m.K)) * num / den + (E / m.K) * u


def d_omega_dtau_closed(a: int, u: complex, m: EllipticModulus) -> complex:
    """Closed form of ``d omega_a(u)/d tau`` at fixed ``u``.

    Uses the modulus derivatives of sn, cn, dn (with Jacobi's epsilon) and
    ``dk/dtau = 2 i k k'^2 K^2 / pi``.
    """
    k, kp2 = m.k, m.k_prime ** 2
    sn, cn, dn = jacobi_sncndn(u, k)
    g = jacobi_epsilon(u, m) - kp2 * complex(u)
    dsn = (k / kp2) * sn * cn * cn - cn * dn * g / (k * kp2)
    dcn = -(k / kp2) * sn * sn * cn + sn * dn * g / (k * kp2)
    ddn = -(k / kp2) * sn * sn * dn + k * sn * cn * g / kp2
    if abs(sn) < _POLE_TOL:
        raise PoleError(f"omega_{a} has a pole at u={u}")
    if a == 1:
        dw = -dsn / sn ** 2
    elif a == 2:
        dw = (ddn * sn - dn * dsn) / sn ** 2
    elif a == 3:
        dw = (dcn * sn - cn * dsn) / sn ** 2
    else:
        raise DomainError(f"omega index must be 1, 2 or 3, got {a}")
    dk_dtau = 2j * k * kp2 * m.K ** 2 / math.pi
    return complex(dw * dk_dtau)


def addition_residual(u: complex, v: complex, m: EllipticModulus) -> float:
    """Largest residual of ``omega_a(u-v) omega_c(v) - omega_b(u-v) omega_c(u) = omega_a(u) omega_b(v)``
    over the cyclic triples ``(a, b, c)``, relative to ``max(1, |rhs|)``."""
    worst = 0.0
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        lhs = omega(a, u - v, m) * omega(c, v, m) - omega(b, u - v, m) * omega(c, u, m)
        rhs = omega(a, u, m) * omega(b, v, m)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return worst
