"""Level-1 free-boson Fock representation.

Bosons obey ``[a_lam, a_mu] = a(lam) delta(lam + mu)`` with ``a(lam) = lam/2``.
The pairing of ``int g1 a`` (left) with ``int g2 a`` (right) is the keyhole
integral

    C(g1, g2) = int_C ln(-lam)/(2 pi i) a(lam) g1(lam) g2(-lam) dlam,

and a product of normal-ordered exponentials picks up ``exp(C)``.  Only
vacuum expectations are computed; operators are never applied to states.

The total currents are

    e(u) = e^gamma :exp( int e^{i lam u} 2 a_lam / lam ):
    f(u) = e^gamma :exp(-int e^{i lam u} 2 a_lam / lam ):
    h(u) = 2 int a_lam e^{i lam u}

and ``h_+(u) = pv int e^{i lam u} 2 a_lam / (1 - e^{lam/eta})``,
``h_-(u) = -pv int e^{i lam u} 2 a_lam / (1 - e^{-lam/eta})``.

Ordering: a contraction ``<X(u) Y(v)>`` of e, f or h converges on the
keyhole when ``Im(u - v) > 0`` (the left operator sits higher).  With
``continue_analytically=True`` the keyhole is rotated to a ray along which
the integrand decays, which gives the analytic continuation in the points.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence, Union

import numpy as np

from .errors import DomainError
from .quad import ContourSpec, TestFunction, gauss_legendre, integrate_keyhole_log, integrate_line
from .trigcur import TrigParams, kernel

__all__ = [
    "EULER_GAMMA", "ExponentTerm", "BosonExponent", "NormalOrderedOperator", "LinearBoson",
    "current", "contraction", "product_normal", "vacuum_expectation", "two_point",
    "ef_constant", "exponent_difference", "SmearedCommutator", "boundary_value_constant",
    "smeared_commutator_check", "HKernelResult", "h_action_kernel_check",
]

EULER_GAMMA = 0.5772156649015329
DEFAULT_SPEC = ContourSpec(kind="keyhole_log", epsilon=1e-4, r0=1e-3, tol=1e-12, max_levels=10)


def a_weight(lam):
    return lam / 2


def _inv_one_minus_exp(x):
    """``1 / (1 - e^x)`` without overflow for large ``Re x``."""
    x = np.asarray(x, dtype=complex)
    pos = x.real > 0
    t = np.exp(np.where(pos, -x, x))
    return np.where(pos, -t / (1 - t), 1 / (1 - t))


@dataclass(frozen=True)
class _Weight:
    """``coef e^{i lam u} / lam^m``, optionally times ``1/(1 - e^{s lam/eta})``."""

    coef: complex
    u: complex
    m: int = 0
    factor: int = 0          # s in {+1, -1}; 0 means no factor
    eta: float = 1.0

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        with np.errstate(over="ignore", invalid="ignore"):
            val = self.coef * np.exp(1j * lam * self.u)
            if self.m:
                val = val / lam ** self.m
            if self.factor:
                val = val * _inv_one_minus_exp(self.factor * lam / self.eta)
        return val


@dataclass(frozen=True)
class ExponentTerm:
    """``lam -> coef e^{i lam u} / lam^m`` with ``m`` in {0, 1}."""

    coef: complex
    u: complex
    m: int = 1

    def __post_init__(self):
        if self.m not in (0, 1):
            raise DomainError("pole order m must be 0 or 1")
        object.__setattr__(self, "coef", complex(self.coef))
        object.__setattr__(self, "u", complex(self.u))

    def weight(self) -> _Weight:
        return _Weight(self.coef, self.u, self.m)


@dataclass(frozen=True)
class BosonExponent:
    """Finite sum of :class:`ExponentTerm`; the exponent of a normal-ordered exponential."""

    terms: tuple = ()

    def __add__(self, other: "BosonExponent") -> "BosonExponent":
        return BosonExponent(tuple(self.terms) + tuple(other.terms))

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        return sum((t.weight()(lam) for t in self.terms), np.zeros_like(lam))

    def weights(self) -> list[_Weight]:
        return [t.weight() for t in self.terms]


@dataclass(frozen=True)
class NormalOrderedOperator:
    """``prefactor * :exp(int g(lam) a_lam dlam):``."""

    prefactor: complex
    exponent: BosonExponent = field(default_factory=BosonExponent)

    def weights(self) -> list[_Weight]:
        return self.exponent.weights()


@dataclass(frozen=True)
class LinearBoson:
    """Linear current ``h``, ``h_plus`` or ``h_minus`` at the point ``u``."""

    kind: str
    u: complex
    eta: float = 1.0

    def __post_init__(self):
        if self.kind not in ("h", "h_plus", "h_minus"):
            raise DomainError(f"unknown linear current {self.kind!r}")
        if self.eta <= 0:
            raise DomainError("eta must be positive")

    def weights(self) -> list[_Weight]:
        if self.kind == "h":
            return [_Weight(2.0, complex(self.u))]
        if self.kind == "h_plus":
            return [_Weight(2.0, complex(self.u), 0, +1, self.eta)]
        return [_Weight(-2.0, complex(self.u), 0, -1, self.eta)]


Operator = Union[NormalOrderedOperator, LinearBoson]


def current(kind: str, u: complex, eta: float = 1.0) -> Operator:
    """Total current ``e``, ``f`` or ``h``, or the half currents ``h_plus``/``h_minus``."""
    g = math.exp(EULER_GAMMA)
    if kind == "e":
        return NormalOrderedOperator(g, BosonExponent((ExponentTerm(2.0, u, 1),)))
    if kind == "f":
        return NormalOrderedOperator(g, BosonExponent((ExponentTerm(-2.0, u, 1),)))
    if kind in ("h", "h_plus", "h_minus"):
        return LinearBoson(kind, u, eta)
    raise DomainError(f"unknown current {kind!r}")


# ---------------------------------------------------------------------------
# contractions
# ---------------------------------------------------------------------------

def _pair_integrand(w1: _Weight, w2: _Weight):
    def G(lam):
        lam = np.asarray(lam, dtype=complex)
        return a_weight(lam) * w1(lam) * w2(-lam)
    return G


def _pole_order(w1: _Weight, w2: _Weight) -> int:
    return w1.m + w2.m + (w1.factor != 0) + (w2.factor != 0) - 1


def _decay_rate(w1: _Weight, w2: _Weight, phi: float) -> float:
    """Exponential decay rate of the pair integrand along ``lam = rho e^{i phi}``."""
    d = cmath.exp(1j * phi)
    rate = (d * (w1.u - w2.u)).imag
    # 1/(1 - e^{s lam/eta}) decays like e^{-s lam/eta} when Re(s lam) > 0
    for s, eta in ((w1.factor, w1.eta), (-w2.factor, w2.eta)):
        if s and s * d.real > 0:
            rate += abs(d.real) / eta
    return rate


def _residue(G, rho: float) -> complex:
    th = 2 * np.pi * (np.arange(64) + 0.5) / 64
    lam = rho * np.exp(1j * th)
    return complex(np.mean(lam * G(lam)))


def _pair_contraction(w1: _Weight, w2: _Weight, spec: ContourSpec, continue_analytically: bool) -> complex:
    order = _pole_order(w1, w2)
    if order > 1:
        raise DomainError("contraction integrand has a pole of order > 1 at the origin")
    G = _pair_integrand(w1, w2)
    has_factor = bool(w1.factor or w2.factor)
    scale = max(abs(w1.u - w2.u), 1e-3)
    if _decay_rate(w1, w2, 0.0) > 1e-9 * scale:
        phi = 0.0
    elif not continue_analytically:
        raise DomainError(f"contraction does not decay on the keyhole (Im(u1 - u2) = {(w1.u - w2.u).imag:.3g}); "
                          "reorder the points or request analytic continuation")
    else:
        lim = 1.3 if has_factor else math.pi - 0.05
        grid = np.linspace(-lim, lim, 105)
        rates = [_decay_rate(w1, w2, ph) for ph in grid]
        i = int(np.argmax(rates))
        if rates[i] <= 0.02 * scale:
            raise DomainError("no decaying ray for the analytic continuation")
        phi = float(grid[i])
    if phi == 0.0:
        return integrate_keyhole_log(G, spec).value
    d = cmath.exp(1j * phi)
    val = integrate_keyhole_log(lambda mu: d * G(d * np.asarray(mu, dtype=complex)), spec).value
    if order == 1:
        etas = [w.eta for w in (w1, w2) if w.factor]
        rho = 0.1 * min([1.0] + etas)
        val += 1j * phi * _residue(G, rho)
    return val


def contraction(left: Operator, right: Operator, spec: ContourSpec | None = None,
                continue_analytically: bool = False) -> complex:
    """Keyhole contraction ``C(left, right)`` of the linear exponents of two operators.

    Raises :class:`DomainError` when the integrand does not decay along the
    positive axis, unless ``continue_analytically`` is set, in which case
    the keyhole is rotated to angle ``phi`` and the jump of the rotated
    logarithm contributes ``i phi Res_0``.
    """
    spec = spec or DEFAULT_SPEC
    return sum((_pair_contraction(w1, w2, spec, continue_analytically)
                for w1 in left.weights() for w2 in right.weights()), 0j)


def product_normal(A: NormalOrderedOperator, B: NormalOrderedOperator, spec: ContourSpec | None = None,
                   continue_analytically: bool = False) -> NormalOrderedOperator:
    """``:e^{gA}: :e^{gB}: = exp(C(gA, gB)) :e^{gA + gB}:``."""
    if not B.exponent.terms or not A.exponent.terms:
        return NormalOrderedOperator(A.prefactor * B.prefactor, A.exponent + B.exponent)
    C = contraction(A, B, spec, continue_analytically)
    return NormalOrderedOperator(A.prefactor * B.prefactor * cmath.exp(C), A.exponent + B.exponent)


def _matchings(idx: list):
    """All partial matchings of ``idx`` as lists of pairs (order preserved)."""
    if not idx:
        yield []
        return
    first, rest = idx[0], idx[1:]
    for m in _matchings(rest):
        yield m
    for k, j in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, j)] + m


def vacuum_expectation(ops: Sequence[Operator], spec: ContourSpec | None = None,
                       continue_analytically: bool = False) -> complex:
    """``<vac| ops[0] ops[1] ... |vac>`` by Wick's theorem.

    Exponentials are folded left to right with :func:`product_normal`.
    Each linear current either contracts with another linear current or
    with the exponent of every exponential (one factor per linear current,
    summed over partner positions, order respected).
    """
    ops = list(ops)
    acc = NormalOrderedOperator(1.0)
    for op in ops:
        if isinstance(op, NormalOrderedOperator):
            acc = product_normal(acc, op, spec, continue_analytically)
    lin = [i for i, op in enumerate(ops) if isinstance(op, LinearBoson)]
    if not lin:
        return complex(acc.prefactor)
    ex = [i for i, op in enumerate(ops) if isinstance(op, NormalOrderedOperator)]
    C = lambda i, j: contraction(ops[i], ops[j], spec, continue_analytically)
    single = {i: sum((C(i, j) if j > i else C(j, i) for j in ex), 0j) for i in lin}
    pair = {(i, j): C(i, j) for i, j in combinations(lin, 2)}
    total = 0j
    for m in _matchings(lin):
        matched = {k for p in m for k in p}
        term = complex(np.prod([pair[p] for p in m])) if m else 1.0
        for i in lin:
            if i not in matched:
                term *= single[i]
        total += term
    return complex(acc.prefactor * total)


def two_point(typeA: str, u: complex, typeB: str, v: complex, spec: ContourSpec | None = None,
              eta: float = 1.0) -> complex:
    """``<X_A(u) X_B(v)>`` for total currents; requires ``Im(u - v) > 0``."""
    u, v = complex(u), complex(v)
    if not (u - v).imag > 0:
        raise DomainError(f"<{typeA}(u) {typeB}(v)> needs Im(u - v) > 0, got {(u - v).imag:.3g}")
    return vacuum_expectation([current(typeA, u, eta), current(typeB, v, eta)], spec)


@lru_cache(maxsize=None)
def _ef_constant(r0: float, eps: float, tol: float, ref: complex) -> complex:
    spec = ContourSpec(kind="keyhole_log", epsilon=eps, r0=r0, tol=tol, max_levels=10)
    return two_point("e", ref, "f", 0.0, spec) * ref ** 2


def ef_constant(spec: ContourSpec | None = None, ref: complex = 0.5j) -> complex:
    """Measured ``(u - v)^2 <e(u) f(v)>`` at ``u - v = ref``; cached per contour spec."""
    spec = spec or DEFAULT_SPEC
    return _ef_constant(spec.r0, spec.epsilon, spec.tol, complex(ref))


def exponent_difference(kind: str, w1: complex, w2: complex, spec: ContourSpec | None = None) -> tuple[float, complex]:
    """``I(w1) - I(w2)`` for the e-f (``kind="ef"``) or e-e contraction exponent.

    Returns ``(residual, difference)`` against ``-2 ln(w1/w2)`` (ef) or
    ``+2 ln(w1/w2)`` (ee); both ``w`` need positive imaginary part.
    """
    if kind not in ("ef", "ee"):
        raise DomainError("kind must be 'ef' or 'ee'")
    other = "f" if kind == "ef" else "e"
    I = lambda w: contraction(current("e", w), current(other, 0.0), spec)
    diff = I(complex(w1)) - I(complex(w2))
    law = (-2 if kind == "ef" else 2) * (cmath.log(-1j * w1) - cmath.log(-1j * w2))
    return float(abs(diff - law)), diff


# ---------------------------------------------------------------------------
# smeared commutator
# ---------------------------------------------------------------------------

def boundary_value_constant(s: TestFunction | None = None, v: float = 0.0, delta: float = 0.5,
                            tol: float = 1e-12) -> complex:
    """``int s(u) [1/(u-v+i0)^2 - 1/(u-v-i0)^2] du / s'(v)`` measured on shifted lines.

    The value is ``-2 pi i``; it does not touch the Fock machinery.
    """
    s = s or TestFunction(alpha=1.0, beta=0.7, z0=v + 0.3)
    up = integrate_line(lambda x: s(x + v + 1j * delta) / (x + 1j * delta) ** 2,
                        ContourSpec(tol=tol, cutoff=12 / math.sqrt(s.alpha))).value
    dn = integrate_line(lambda x: s(x + v - 1j * delta) / (x - 1j * delta) ** 2,
                        ContourSpec(tol=tol, cutoff=12 / math.sqrt(s.alpha))).value
    return (up - dn) / complex(s.derivative(v))


@dataclass(frozen=True)
class SmearedCommutator:
    """``value = int s(u) <[e(u), f(v)]> du``, its prediction and ``value / s'(v)``."""

    value: complex
    predicted: complex
    ratio: complex
    residual: float


@lru_cache(maxsize=4096)
def _ef_boundary(x: float, v: complex, delta: float, sign: int, r0: float, eps: float, tol: float) -> complex:
    spec = ContourSpec(kind="keyhole_log", epsilon=eps, r0=r0, tol=tol, max_levels=10)
    u = complex(x) + v + sign * 1j * delta
    if sign > 0:
        return two_point("e", u, "f", v, spec)
    return two_point("f", v, "e", u, spec)


def smeared_commutator_check(s: TestFunction, v: float, c_expect: float = 1.0, delta: float = 0.5,
                             spec: ContourSpec | None = None, tol: float = 1e-10) -> SmearedCommutator:
    """Smear ``<e(u) f(v)> - <f(v) e(u)>`` against ``s`` with the boundary-value orderings.

    ``<e(u) f(v)>`` is taken on ``Im(u - v) = +delta`` and ``<f(v) e(u)>`` on
    ``-delta``; both lines are exact for analytic ``s``.  The prediction is
    ``c_expect * A * kappa * s'(v)`` with ``A`` from :func:`ef_constant` and
    ``kappa`` from :func:`boundary_value_constant`.  ``residual`` is
    ``|value - predicted|`` relative to ``max(|predicted|, 1)``.
    """
    spec = spec or DEFAULT_SPEC
    v = float(v)
    # a fixed interval and two fixed panel levels keep the nodes (and the
    # cached two-point values) shared between test functions
    L = max(14.0, 12 / math.sqrt(s.alpha) + abs(complex(s.z0).real - v))
    key = (spec.r0, spec.epsilon, spec.tol)

    def line(sign):
        def f(x):
            x = np.asarray(x, dtype=float)
            F = np.array([_ef_boundary(float(xx), complex(v), delta, sign, *key) for xx in x.ravel()])
            return s(x + v + sign * 1j * delta) * F.reshape(x.shape)
        return gauss_legendre(f, -L, L, tol=tol, panels=16, max_levels=2).value

    value = line(+1) - line(-1)
    kappa = boundary_value_constant(v=v)
    pred = c_expect * ef_constant(spec) * kappa * complex(s.derivative(v))
    d = complex(s.derivative(v))
    ratio = value / d if abs(d) > 1e-300 else complex("nan")
    return SmearedCommutator(value, pred, ratio, float(abs(value - pred) / max(abs(pred), 1.0)))


# ---------------------------------------------------------------------------
# action of h_+ on e and f
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HKernelResult:
    """Kernel of ``[h_+(u), X(v)] = K X(v)`` from three-point functions.

    ``fock_kernel`` is ``(<Y(w) h_+ X> - <Y(w) X h_+>) / <Y(w) X>`` for each
    ``w``; ``algebra_kernel`` is ``+-2 pv int e^{i lam (u-v)}/(1 - e^{lam/eta})``
    (plus for e, minus for f).  ``residual`` compares the two directly,
    ``flipped_residual`` compares ``fock_kernel`` with ``-algebra_kernel``.
    """

    fock_kernel: complex
    algebra_kernel: complex
    residual: float
    flipped_residual: float
    w_spread: float


def h_action_kernel_check(u: complex, v: complex, w: complex | Sequence[complex], p: TrigParams,
                          target: str = "e", spec: ContourSpec | None = None) -> HKernelResult:
    """Extract the ``h_+`` action kernel by Wick single contractions.

    ``target`` is ``"e"`` (with ``f(w)`` on the left) or ``"f"`` (with
    ``e(w)`` on the left).  All contractions are analytically continued,
    since the two orderings of ``h_+(u)`` and ``X(v)`` converge in
    different half planes of ``u - v``.  The algebra kernel is the closed
    form of the principal-value Fourier integral from the trigonometric
    module.
    """
    if target not in ("e", "f"):
        raise DomainError("target must be 'e' or 'f'")
    ws = [complex(w)] if np.isscalar(w) else [complex(x) for x in w]
    other = "f" if target == "e" else "e"
    X = current(target, v)
    H = current("h_plus", u, p.eta)
    ks = []
    for wi in ws:
        Y = current(other, wi)
        base = vacuum_expectation([Y, X], spec, continue_analytically=True)
        a = vacuum_expectation([Y, H, X], spec, continue_analytically=True)
        b = vacuum_expectation([Y, X, H], spec, continue_analytically=True)
        ks.append((a - b) / base)
    K = ks[0]
    sign = 1.0 if target == "e" else -1.0
    alg = sign * 2 * kernel("H", "plus", complex(v) - complex(u), p)
    spread = max(abs(k - K) for k in ks)
    return HKernelResult(complex(K), complex(alg), float(abs(K - alg)), float(abs(K + alg)), float(spread))
