"""Contour quadrature for the distribution pairings.

Three contour families are supported:

* straight lines parallel to the real axis (``line``),
* principal-value integrals across a simple pole at the origin, computed as
  the average of the two lines ``Im z = +delta`` and ``Im z = -delta``
  (exact for a simple pole by the residue theorem),
* the keyhole contour wrapping the positive real axis with the logarithmic
  weight ``ln(-lambda) / (2 pi i)``.

Integrands must accept numpy arrays of complex points.  Every integral is a
composite Gauss-Legendre rule whose panel count is doubled until two
successive levels agree to ``tol``; the reported error is that last change.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "ContourSpec",
    "QuadratureResult",
    "TestFunction",
    "integrate_line",
    "integrate_pv",
    "integrate_keyhole_log",
    "gauss_legendre",
]

Integrand = Callable[[np.ndarray], np.ndarray]

_GL_ORDER = 20
_GL_X, _GL_W = np.polynomial.legendre.leggauss(_GL_ORDER)


@dataclass(frozen=True)
class ContourSpec:
    """Numerical parameters of a contour.

    ``offset`` is the imaginary part of a line (for ``principal_value`` it is
    the half-distance ``delta`` between the two averaged lines).  ``cutoff``
    of ``None`` means: find the abscissa where the integrand envelope drops
    below 1e-16 of its peak.
    """

    kind: str = "line"
    offset: float = 0.0
    epsilon: float = 1e-4
    r0: float = 1e-3
    cutoff: float | None = None
    tol: float = 1e-10
    max_levels: int = 9

    def __post_init__(self):
        if self.kind not in ("line", "principal_value", "keyhole_log"):
            raise DomainError(f"unknown contour kind {self.kind!r}")
        if self.tol <= 0:
            raise DomainError("tol must be positive")
        if self.cutoff is not None and self.cutoff <= 0:
            raise DomainError("cutoff must be positive")
        if self.kind == "keyhole_log" and not (0 < self.epsilon < self.r0 < 1):
            raise DomainError("keyhole needs 0 < epsilon < r0 < 1")


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err_estimate: float
    evaluations: int
    r0_sensitive: bool = False


@dataclass(frozen=True)
class TestFunction:
    """Gaussian wave packet ``exp(-alpha (z - z0)^2) exp(i beta z)``."""

    alpha: float = 1.0
    beta: float = 0.0
    z0: complex = 0.0

    def __post_init__(self):
        if self.alpha <= 0:
            raise DomainError("alpha must be positive")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return np.exp(-self.alpha * (z - self.z0) ** 2 + 1j * self.beta * z)

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        return (-2 * self.alpha * (z - self.z0) + 1j * self.beta) * self(z)


def _call(f: Integrand, z: np.ndarray) -> np.ndarray:
    out = np.asarray(f(z), dtype=complex)
    if out.shape != z.shape:
        out = np.array([complex(f(zz)) for zz in z.ravel()]).reshape(z.shape)
    return out


def gauss_legendre(f: Integrand, a: float, b: float, tol: float = 1e-12,
                   panels: int = 4, max_levels: int = 10) -> QuadratureResult:
    """Composite Gauss-Legendre on ``[a, b]`` with panel doubling.

    ``f`` is a function of the real integration variable.
    """
    nev = 0
    prev = None
    err = math.inf
    for level in range(max_levels + 1):
        n = panels * 2 ** level
        edges = np.linspace(a, b, n + 1)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        x = (mid[:, None] + half[:, None] * _GL_X[None, :])
        vals = _call(f, x)
        nev += x.size
        with np.errstate(over="ignore", invalid="ignore"):
            val = complex(np.sum(vals * _GL_W[None, :] * half[:, None]))
        if not (math.isfinite(val.real) and math.isfinite(val.imag)):
            raise ConvergenceError(f"integrand overflows on [{a}, {b}]")
        if prev is not None:
            err = abs(val - prev)
            if err < tol * max(1.0, abs(val)):
                return QuadratureResult(val, err, nev)
        prev = val
    raise ConvergenceError(f"Gauss-Legendre did not converge on [{a}, {b}] (last change {err:.3g})")


def _auto_cutoff(f: Integrand, shift: complex, sides=(1, -1), start: float = 1.0,
                 floor: float = 1e-16) -> float:
    """Doubling radius beyond which |f| stays below ``floor`` times its peak."""
    peak = 0.0
    L = start / 2
    for _ in range(60):
        L *= 2
        probe = np.linspace(L / 2, L, 64)
        tail = 0.0
        for s in sides:
            v = np.abs(_call(f, s * probe + shift))
            v = np.where(np.isfinite(v), v, 0.0)
            peak = max(peak, float(np.max(v)))
            tail = max(tail, float(np.max(v[-16:])))
        if L > start and tail <= floor * max(peak, 1e-300):
            return L
    raise ConvergenceError("integrand does not decay along the contour")


def integrate_line(f: Integrand, spec: ContourSpec | None = None) -> QuadratureResult:
    """Integrate ``f(z)`` along ``Im z = spec.offset`` over the whole line."""
    spec = spec or ContourSpec()
    shift = 1j * spec.offset
    L = spec.cutoff if spec.cutoff is not None else _auto_cutoff(f, shift)
    panels = max(8, int(math.ceil(L)))
    return gauss_legendre(lambda x: f(x + shift), -L, L, tol=spec.tol,
                          panels=panels, max_levels=spec.max_levels)


def integrate_pv(f: Integrand, spec: ContourSpec | None = None) -> QuadratureResult:
    """Principal value of ``f`` over the real line; ``f`` may have a simple pole at 0.

    The value is the mean of the integrals along ``Im z = +delta`` and
    ``Im z = -delta`` with ``delta = spec.offset`` (0.5 if not positive),
    which equals the symmetric-excision limit when ``lambda f(lambda)`` is
    analytic in the strip ``|Im z| <= delta``.
    """
    spec = spec or ContourSpec(kind="principal_value")
    delta = spec.offset if spec.offset > 0 else 0.5
    # pole-order probe: lambda*f stays bounded for a simple pole
    theta = np.linspace(0.1, 2 * np.pi - 0.1, 16) + 0.05
    probe = []
    for rho in (delta * 1e-3, delta * 5e-4):
        z = rho * np.exp(1j * theta)
        probe.append(float(np.max(np.abs(z * _call(f, z)))))
    if probe[1] > 1.5 * probe[0] and probe[1] > 1e-8:
        raise DomainError("integrand has a pole of order > 1 at the origin")
    up = integrate_line(f, replace(spec, kind="line", offset=delta))
    dn = integrate_line(f, replace(spec, kind="line", offset=-delta))
    return QuadratureResult(0.5 * (up.value + dn.value),
                            0.5 * (up.err_estimate + dn.err_estimate),
                            up.evaluations + dn.evaluations)


def _keyhole_once(g: Integrand, spec: ContourSpec, r0: float, L: float) -> QuadratureResult:
    eps = spec.epsilon
    theta0 = math.asin(eps / r0)
    x0 = r0 * math.cos(theta0)
    weight = 1.0 / (2j * math.pi)

    def lip(sign):
        # lambda = x + i*sign*eps, x = exp(t); returns integrand in t, left-to-right
        def h(t):
            x = np.exp(t)
            lam = x + 1j * sign * eps
            return np.log(-lam) * weight * _call(g, lam) * x
        return h

    t0, t1 = math.log(x0), math.log(L)
    panels = max(8, int(math.ceil(2 * (t1 - t0))))
    upper = gauss_legendre(lip(+1), t0, t1, tol=spec.tol / 4, panels=panels,
                           max_levels=spec.max_levels)
    lower = gauss_legendre(lip(-1), t0, t1, tol=spec.tol / 4, panels=panels,
                           max_levels=spec.max_levels)

    def arc(th):
        lam = r0 * np.exp(1j * th)
        logm = math.log(r0) + 1j * (th - math.pi)
        return logm * weight * _call(g, lam) * 1j * lam

    circ = gauss_legendre(arc, theta0, 2 * math.pi - theta0, tol=spec.tol / 4,
                          panels=4, max_levels=spec.max_levels)
    value = -upper.value + circ.value + lower.value
    return QuadratureResult(value, upper.err_estimate + lower.err_estimate + circ.err_estimate,
                            upper.evaluations + lower.evaluations + circ.evaluations)


def integrate_keyhole_log(g: Integrand, spec: ContourSpec | None = None,
                          check_r0: bool = False) -> QuadratureResult:
    """``int_C ln(-lambda)/(2 pi i) g(lambda) d lambda`` over the keyhole contour.

    The contour comes in from ``+infinity`` above the positive axis
    (``ln(-lambda) = ln|lambda| - i pi``), circles the origin counterclockwise
    at radius ``r0`` and returns below the axis (``ln|lambda| + i pi``).  For
    pole-free ``g`` this collapses to ``int_0^inf g``.  With a simple pole at
    the origin the value depends on ``r0``; ``check_r0`` recomputes at
    ``r0/2`` and sets ``r0_sensitive`` when the two disagree beyond ``tol``.
    """
    spec = spec or ContourSpec(kind="keyhole_log")
    L = spec.cutoff if spec.cutoff is not None else _auto_cutoff(g, 0j, sides=(1,))
    res = _keyhole_once(g, spec, spec.r0, L)
    if not np.isfinite(res.value):
        raise ConvergenceError("keyhole integral is not finite")
    if check_r0:
        half = _keyhole_once(g, replace(spec, epsilon=spec.epsilon / 2), spec.r0 / 2, L)
        sensitive = abs(half.value - res.value) > spec.tol
        return replace(res, evaluations=res.evaluations + half.evaluations,
                       r0_sensitive=sensitive)
    return res
