"""Named verification suites.

Every suite is a function ``suite(ctx) -> None`` that registers cases on a
:class:`RunContext`.  A case is a name, its inputs, a residual and a
tolerance; the case passes when ``residual <= tolerance``.  Random inputs
come from a generator seeded by ``(seed, crc32(case name))``, so each case
sees the same numbers whatever else runs.
"""
from __future__ import annotations

import math
import zlib
from typing import Callable

import numpy as np

from . import ellip, fock, ratlim, rmat_trig, trigcur
from .config import SuiteConfig
from .errors import CurrentAlgebraError
from .quad import ContourSpec, TestFunction
from .report import Case, VerificationReport
from .specfun import EllipticModulus, addition_residual, jacobi_sncndn, omega

__all__ = ["SUITES", "suite_names", "run_suite", "RunContext"]


class RunContext:
    def __init__(self, cfg: SuiteConfig, seed: int):
        self.cfg = cfg
        self.seed = seed
        self.cases: list[Case] = []
        self.params = cfg.params

    def rng(self, name: str) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([self.seed, zlib.crc32(name.encode())]))

    def samples(self, default: int) -> int:
        return self.cfg.samples if self.cfg.samples is not None else default

    def modulus(self) -> EllipticModulus:
        tau = self.params.get("tau")
        return EllipticModulus.from_tau(complex(tau)) if tau is not None else EllipticModulus.from_k(self.params["k"])

    def add(self, name: str, inputs: dict, compute: Callable[[], float], tol: float) -> None:
        """Evaluate ``compute`` and record the case; library errors become failed cases."""
        tol = self.cfg.tolerance(name, tol)
        try:
            res = float(compute())
            err = None
        except (CurrentAlgebraError, ArithmeticError) as exc:
            res, err = None, f"{type(exc).__name__}: {exc}"
        self.cases.append(Case(name, inputs, res, tol, err))


# ---------------------------------------------------------------------------
# sampling helpers (10% margins inside every strip)
# ---------------------------------------------------------------------------

def _trig_point(rng, branch: str, eta: float, re: float = 1.5) -> complex:
    xi = 1.0 / eta
    y = rng.uniform(0.1 * xi, 0.9 * xi)
    return complex(rng.uniform(-re, re), -y if branch == "plus" else y)


def _trig_element(rng, eta: float, nterms: int = 2) -> trigcur.CurrentElement:
    terms = []
    for _ in range(nterms):
        b = str(rng.choice(trigcur.BRANCHES))
        terms.append(trigcur.GeneratorTerm(str(rng.choice(trigcur.GTYPES)), b, _trig_point(rng, b, eta),
                                           complex(*rng.normal(size=2))))
    return trigcur.CurrentElement(terms)


def _ell_point(rng, branch: str, m: EllipticModulus) -> complex:
    y = rng.uniform(0.1, 0.9) * m.K_prime
    return complex(rng.uniform(-0.9, 0.9) * m.K, -y if branch == "plus" else y)


def _ell_element(rng, m: EllipticModulus, nterms: int = 2) -> ellip.EllipticElement:
    terms = []
    for _ in range(nterms):
        b = str(rng.choice(["plus", "minus"]))
        terms.append(ellip.SigmaTerm(int(rng.integers(1, 4)), b, _ell_point(rng, b, m), complex(*rng.normal(size=2))))
    return ellip.EllipticElement(terms)


def _element_inputs(*els) -> list:
    return [[[t.gtype if hasattr(t, "gtype") else t.a, t.branch, t.point, t.coeff] for t in e.terms] for e in els]


def _away(rng, draw, *checks, tries=200):
    for _ in range(tries):
        x = draw()
        if all(c(x) for c in checks):
            return x
    raise RuntimeError("sampler could not find an admissible point")


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def _box_point(rng, m: EllipticModulus) -> complex:
    return complex(rng.uniform(-0.9, 0.9) * m.K, rng.uniform(-0.8, 0.8) * m.K_prime)


def suite_specfun(ctx: RunContext) -> None:
    """Batches of 100 points; the residual of a batch is its worst point."""
    n = ctx.samples(1000)
    batches = [(i, min(100, n - i)) for i in range(0, n, 100)]
    for start, size in batches:
        name = f"specfun/unit/{start // 100:02d}"
        rng = ctx.rng(name)
        ks = rng.uniform(0.05, 0.95, size)
        pts = [complex(*rng.uniform(-3, 3, 2)) for _ in range(size)]

        def unit(ks=ks, pts=pts):
            worst = 0.0
            for k, u in zip(ks, pts):
                sn, cn, dn = jacobi_sncndn(u, k)
                scale = max(1.0, abs(sn) ** 2)
                worst = max(worst, abs(sn * sn + cn * cn - 1) / scale, abs(dn * dn + k * k * sn * sn - 1) / scale)
            return worst
        ctx.add(name, {"points": size, "k_range": [0.05, 0.95]}, unit, 1e-11)
    for start, size in batches:
        name = f"specfun/addition/{start // 100:02d}"
        rng = ctx.rng(name)

        def addition(rng=rng, size=size):
            worst = 0.0
            for _ in range(size):
                m = EllipticModulus.from_k(float(rng.uniform(0.05, 0.95)))
                u = _away(rng, lambda: _box_point(rng, m), lambda z: abs(z) > 0.1)
                v = _away(rng, lambda: _box_point(rng, m), lambda z: abs(z) > 0.1 and abs(u - z) > 0.1)
                worst = max(worst, addition_residual(u, v, m))
            return worst
        ctx.add(name, {"triples": size}, addition, 1e-10)


# ---------------------------------------------------------------------------
# trigonometric
# ---------------------------------------------------------------------------

def suite_trig_jacobi(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    n = ctx.samples(200)
    for c in (0.0, 1.0, 2.5):
        for i in range(n):
            name = f"jacobi/c={c:g}/{i:03d}"
            rng = ctx.rng(name)
            x, y, z = (_trig_element(rng, p.eta) for _ in range(3))
            ctx.add(name, {"c": c, "elements": _element_inputs(x, y, z)},
                    lambda: trigcur.jacobi_residual(x, y, z, c, p), 1e-9)
    for i in range(20):
        name = f"antisymmetry/{i:03d}"
        rng = ctx.rng(name)
        x, y = (_trig_element(rng, p.eta) for _ in range(2))
        ctx.add(name, {"elements": _element_inputs(x, y)},
                lambda: (trigcur.bracket(x, y, 1.0, p) + trigcur.bracket(y, x, 1.0, p)).max_abs(), 1e-13)


def suite_trig_cocycle(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    pairs = [("E", "F"), ("F", "E"), ("H", "H")]
    for i in range(ctx.samples(50)):
        name = f"cocycle/{i:03d}"
        rng = ctx.rng(name)
        g1, g2 = pairs[i % 3]
        b1, b2 = (str(rng.choice(trigcur.BRANCHES)) for _ in range(2))
        x = trigcur.GeneratorTerm(g1, b1, _trig_point(rng, b1, p.eta, 1.0))
        y = trigcur.GeneratorTerm(g2, b2, _trig_point(rng, b2, p.eta, 1.0))
        ctx.add(name, {"x": [g1, b1, x.point], "y": [g2, b2, y.point]},
                lambda: abs(trigcur.cocycle_B(x, y, p) - trigcur.numeric_B(x, y, p, tol=ctx.params["quad_tol"])),
                1e-6)


def suite_sokhotsky(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    for g in trigcur.GTYPES:
        for i in range(ctx.samples(20)):
            name = f"sokhotsky/{g}/{i:03d}"
            rng = ctx.rng(name)
            u = float(rng.uniform(-1, 1))
            s = TestFunction(float(rng.uniform(0.5, 2.0)), float(rng.uniform(-1, 1)), float(rng.uniform(-0.5, 0.5)))
            ctx.add(name, {"u": u, "alpha": s.alpha, "beta": s.beta, "z0": s.z0},
                    lambda: trigcur.sokhotsky_check(g, u, s, p), 1e-7)


def suite_fourier_kernels(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    xi = 1.0 / p.eta
    res = np.linspace(-1.0, 1.0, 5)
    ims = np.linspace(0.2, 0.8, 5) * xi
    for g in trigcur.GTYPES:
        for b in trigcur.BRANCHES:
            for i, x in enumerate(res):
                for j, y in enumerate(ims):
                    u = complex(x, -y if b == "plus" else y)
                    ctx.add(f"fourier/{g}/{b}/{i}{j}", {"u": u},
                            lambda: trigcur.fourier_kernel_check(g, b, u, p, tol=1e-11), 1e-7)


def suite_gauge(ctx: RunContext) -> None:
    eta = ctx.params["eta"]
    p = trigcur.TrigParams(eta)
    for i in range(ctx.samples(50)):
        name = f"gauge/{i:03d}"
        rng = ctx.rng(name)
        eta_new = float(eta * rng.uniform(0.5, 2.0))
        pn = trigcur.TrigParams(eta_new)
        c = float(rng.choice([0.0, 1.0]))
        # keep the mapped points inside the new strips
        x, y = (_trig_element(rng, max(eta, eta_new)) for _ in range(2))

        def compute():
            lhs = trigcur.gauge_map(trigcur.bracket(x, y, c, p), eta, eta_new)
            rhs = trigcur.bracket(trigcur.gauge_map(x, eta, eta_new), trigcur.gauge_map(y, eta, eta_new), c, pn)
            return (lhs - rhs).max_abs()
        ctx.add(name, {"eta_new": eta_new, "c": c, "elements": _element_inputs(x, y)}, compute, 1e-11)


def suite_modes_cobracket(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    for i in range(ctx.samples(100)):
        name = f"modes/{i:03d}"
        rng = ctx.rng(name)
        g = trigcur.GTYPES[i % 3]
        lam = float(rng.uniform(-3, 3))
        tau = float(_away(rng, lambda: rng.uniform(-3, 3), lambda t: abs(t) > 0.05, lambda t: abs(lam - t) > 0.05))
        c = float(rng.choice([0.0, 1.0, 2.5]))

        def compute():
            a = trigcur.mode_cobracket_kernel(g, lam, tau, p, c)
            b = trigcur.cobracket_from_r(g, lam, tau, p, c)
            return abs(a.kernel - b.kernel) + abs(a.central - b.central) + b.antisymmetry
        ctx.add(name, {"gtype": g, "lam": lam, "tau": tau, "c": c}, compute, 1e-9)


# ---------------------------------------------------------------------------
# rational
# ---------------------------------------------------------------------------

def suite_rational_limit(ctx: RunContext) -> None:
    etas = (0.02, 0.01, 0.005)
    for g in trigcur.GTYPES:
        for i in range(ctx.samples(5)):
            name = f"eta-rate/{g}/{i:02d}"
            rng = ctx.rng(name)
            w = complex(rng.uniform(-1.5, 1.5), -rng.uniform(0.2, 1.0))

            def compute():
                lim = ratlim.eta_to_zero_check(g, w, etas)
                return abs(math.log2(lim.ratios[-1]) - 2.0)
            ctx.add(name, {"w": w, "etas": list(etas)}, compute, 0.05)
    for b in ("plus", "minus"):
        for i in range(5):
            name = f"laplace/{b}/{i:02d}"
            rng = ctx.rng(name)
            y = rng.uniform(0.3, 1.5)
            u = complex(rng.uniform(-1, 1), -y if b == "plus" else y)
            ctx.add(name, {"u": u}, lambda: ratlim.laplace_check(b, u, (0.0, 0.4)), 1e-10)


def suite_rational_double(ctx: RunContext) -> None:
    for xt in trigcur.GTYPES:
        for yt in trigcur.GTYPES:
            for zt in trigcur.GTYPES:
                for side in (1, -1):
                    name = f"double/{xt}{yt}{zt}/{'pos' if side > 0 else 'neg'}"
                    rng = ctx.rng(name)
                    tests = [ratlim.HalfLineTest(s, int(rng.integers(1, 4)), float(rng.uniform(0.8, 1.5)),
                                                 float(rng.uniform(-0.3, 0.3))) for s in (side, -side, -side)]
                    ctx.add(name, {"side": side, "tests": [[t.n, t.a, t.shift] for t in tests]},
                            lambda: ratlim.duality_check(xt, yt, zt, side, *tests)[0], 1e-7)
    for c in (0.0, 1.0):
        for i in range(20):
            name = f"rat-jacobi/c={c:g}/{i:02d}"
            rng = ctx.rng(name)

            def el():
                ts = []
                for _ in range(2):
                    b = str(rng.choice(trigcur.BRANCHES))
                    y = rng.uniform(0.1, 1.5)
                    ts.append(ratlim.RatGeneratorTerm(str(rng.choice(trigcur.GTYPES)), b,
                                                      complex(rng.uniform(-1.5, 1.5), -y if b == "plus" else y),
                                                      complex(*rng.normal(size=2))))
                return trigcur.CurrentElement(ts)
            x, y, z = el(), el(), el()
            ctx.add(name, {"c": c, "elements": _element_inputs(x, y, z)},
                    lambda: ratlim.rat_jacobi_residual(x, y, z, c), 1e-9)


# ---------------------------------------------------------------------------
# trigonometric R-matrix
# ---------------------------------------------------------------------------

def _r_point(rng, eta):
    return _away(rng, lambda: complex(rng.uniform(-1, 1), rng.uniform(-0.4, 0.4) / eta),
                 lambda z: abs(z) > 0.1)


def suite_cybe_trig(ctx: RunContext) -> None:
    eta = ctx.params["eta"]
    for i in range(ctx.samples(100)):
        name = f"cybe/{i:03d}"
        rng = ctx.rng(name)
        u = _r_point(rng, eta)
        v = _away(rng, lambda: _r_point(rng, eta), lambda z: abs(u - z) > 0.1)
        ctx.add(name, {"u": u, "v": v, "eta": eta},
                lambda: rmat_trig.cybe_residual(lambda z: rmat_trig.r0(z, eta), u, v), 1e-10)


def suite_rmatrix_expansion(ctx: RunContext) -> None:
    eta = ctx.params["eta"]
    hbars = tuple(ctx.params["hbar_grid"])
    P = int(ctx.params["P"])
    rng = ctx.rng("expansion")
    u = complex(rng.uniform(0.2, 0.6), -rng.uniform(0.2, 0.4) / eta)
    holder = {}

    def result():
        if "r" not in holder:
            holder["r"] = rmat_trig.expansion_check(u, eta, hbars, 1.0, P)
        return holder["r"]

    inputs = {"u": u, "eta": eta, "hbars": list(hbars), "P": P, "c": 1.0}

    def order():
        r = result()
        if not r.a_monotone:
            return math.inf
        return max(abs(math.log2(a / b) - 1.0) for a, b in zip(r.a, r.a[1:]))
    ctx.add("expansion/a_order", inputs, order, 0.1)
    ctx.add("expansion/b_raw", inputs, lambda: result().b[-1], 1e-5)
    ctx.add("expansion/c_raw", inputs, lambda: result().c[-1], 1e-5)
    ctx.add("expansion/b_extrapolated", inputs, lambda: result().b_extrapolated, 1e-5)
    ctx.add("expansion/c_extrapolated", inputs, lambda: result().c_extrapolated, 1e-5)


def suite_eta_derivative(ctx: RunContext) -> None:
    us = (0.3 - 0.2j, -0.5 + 0.1j, 0.7 + 0.3j)
    for i, u in enumerate(us):
        for j, eta in enumerate((0.5, 1.0, 2.0)):
            uu = complex(u.real, u.imag / eta)
            ctx.add(f"eta-derivative/{i}{j}", {"u": uu, "eta": eta},
                    lambda: rmat_trig.eta_derivative_identity(uu, eta), 1e-7)


def suite_ll_structure(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    for c in (0.0, 1.0, 2.5):
        for i in range(ctx.samples(20)):
            name = f"ll/c={c:g}/{i:02d}"
            rng = ctx.rng(name)
            u1 = _trig_point(rng, "plus", p.eta, 1.0)
            u2 = _away(rng, lambda: _trig_point(rng, "plus", p.eta, 1.0), lambda z: abs(z - u1) > 0.1)
            ctx.add(name, {"u1": u1, "u2": u2, "c": c},
                    lambda: rmat_trig.ll_structure_check(u1, u2, p.eta, c), 1e-9)


# ---------------------------------------------------------------------------
# elliptic
# ---------------------------------------------------------------------------

def suite_elliptic_jacobi(ctx: RunContext) -> None:
    m = ctx.modulus()
    for c in (0.0, 1.0):
        for i in range(ctx.samples(100)):
            name = f"ell-jacobi/c={c:g}/{i:03d}"
            rng = ctx.rng(name)
            x, y, z = (_ell_element(rng, m) for _ in range(3))
            ctx.add(name, {"c": c, "k": m.k, "elements": _element_inputs(x, y, z)},
                    lambda: ellip.ell_jacobi_residual(x, y, z, c, m), 1e-8)
    for i in range(20):
        name = f"ell-antisymmetry/{i:02d}"
        rng = ctx.rng(name)
        x, y = _ell_element(rng, m), _ell_element(rng, m)
        ctx.add(name, {"elements": _element_inputs(x, y)},
                lambda: (ellip.ell_bracket(x, y, 1.0, m) + ellip.ell_bracket(y, x, 1.0, m)).max_abs(), 1e-13)


def suite_elliptic_cocycle(ctx: RunContext) -> None:
    m = ctx.modulus()
    for i in range(ctx.samples(50)):
        name = f"ell-cocycle/{i:03d}"
        rng = ctx.rng(name)
        a = int(rng.integers(1, 4))
        w = _away(rng, lambda: complex(rng.uniform(-1.5, 1.5) * m.K, rng.uniform(-1.5, 1.5) * m.K_prime),
                  lambda z: abs(z) > 0.1, lambda z: abs(z.imag) < 1.5 * m.K_prime)
        ctx.add(name, {"a": a, "w": w, "k": m.k},
                lambda: abs(ellip.ell_cocycle(a, a, w, m, "closed") - ellip.ell_cocycle(a, a, w, m, "numeric_tau_fd")),
                1e-6)


def suite_elliptic_series(ctx: RunContext) -> None:
    m = ctx.modulus()
    N = int(ctx.params["N"]) or None
    for a in (1, 2, 3):
        ctx.add(f"series/calibration/{a}", {"a": a, "k": m.k},
                lambda: ellip.calibrate_fourier_scale(a, m).residual, 1e-7)
        for i in range(5):
            name = f"series/omega/{a}/{i}"
            rng = ctx.rng(name)
            w = complex(rng.uniform(-1, 1) * m.K, -rng.uniform(0.3, 1.7) * m.K_prime)
            ctx.add(name, {"a": a, "w": w}, lambda: abs(ellip.sigma_fourier_series(a, w, N, m) - omega(a, w, m)),
                    1e-10)
    for a, b in ((1, 2), (2, 3), (3, 1)):
        for i in range(3):
            name = f"series/bracket/{a}{b}/{i}"
            rng = ctx.rng(name)
            u2 = complex(rng.uniform(-0.5, 0.5) * m.K, -rng.uniform(0.1, 0.3) * m.K_prime)
            u1 = u2 + complex(rng.uniform(-0.5, 0.5) * m.K, -rng.uniform(0.4, 0.8) * m.K_prime)
            ctx.add(name, {"a": a, "b": b, "u1": u1, "u2": u2},
                    lambda: ellip.series_bracket_check(a, b, u1, u2, m), 1e-10)
    for a in (1, 2, 3):
        for i in range(3):
            name = f"series/central/{a}/{i}"
            rng = ctx.rng(name)
            u = complex(rng.uniform(-0.5, 0.5) * m.K, -rng.uniform(0.5, 1.5) * m.K_prime)
            ctx.add(name, {"a": a, "u": u}, lambda: ellip.mode_central_check(a, u, m)[0], 1e-8)
        ks = (1, 3, -1) if a in (1, 2) else (0, 2, -2)
        for k in ks:
            ctx.add(f"series/cobracket/{a}/{k:+d}", {"a": a, "k": k},
                    lambda: ellip.mode_cobracket_consistency(a, k, m), 1e-12)


def _ell_r_point(rng, m):
    return _away(rng, lambda: complex(rng.uniform(-0.8, 0.8) * m.K, rng.uniform(-0.8, 0.8) * m.K_prime),
                 lambda z: abs(z) > 0.1)


def suite_cybe_elliptic(ctx: RunContext) -> None:
    m = ctx.modulus()
    for i in range(ctx.samples(100)):
        name = f"ell-cybe/{i:03d}"
        rng = ctx.rng(name)
        u = _ell_r_point(rng, m)
        v = _away(rng, lambda: _ell_r_point(rng, m), lambda z: abs(u - z) > 0.1)
        ctx.add(name, {"u": u, "v": v, "k": m.k}, lambda: ellip.ell_cybe_residual(u, v, m), 1e-9)


def suite_elliptic_ll(ctx: RunContext) -> None:
    m = ctx.modulus()
    for c in (0.0, 1.0):
        for i in range(ctx.samples(20)):
            name = f"ell-ll/c={c:g}/{i:02d}"
            rng = ctx.rng(name)
            u1 = _ell_point(rng, "plus", m)
            u2 = _away(rng, lambda: _ell_point(rng, "plus", m), lambda z: abs(z - u1) > 0.1)
            ctx.add(name, {"u1": u1, "u2": u2, "c": c, "k": m.k},
                    lambda: ellip.ell_ll_check(u1, u2, m, c), 1e-8)


def suite_baxter_sklyanin(ctx: RunContext) -> None:
    for i in range(ctx.samples(20)):
        name = f"baxter/{i:02d}"
        rng = ctx.rng(name)
        v = float(rng.uniform(-0.6, 0.6))
        hbar = float(rng.uniform(0.05, 0.5))
        kt = float(rng.uniform(0.1, 0.9))
        ctx.add(name, {"v": v, "hbar": hbar, "k_tilde": kt},
                lambda: ellip.baxter_to_sklyanin(v, hbar, kt).residual, 1e-8)


def suite_elliptic_limit(ctx: RunContext) -> None:
    m = ctx.modulus()
    zetas = tuple(ctx.params["zeta_grid"])
    rng = ctx.rng("elliptic-limit")
    u = complex(rng.uniform(0.2, 0.6) * m.K, -rng.uniform(0.2, 0.4) * m.K_prime)
    holder = {}

    def result():
        if "r" not in holder:
            holder["r"] = ellip.ell_classical_limit(u, m, zetas, 1.0)
        return holder["r"]

    inputs = {"u": u, "k": m.k, "zetas": list(zetas), "c": 1.0}
    ctx.add("limit/a_halving", inputs, lambda: max(abs(r - 2.0) for r in result().a_ratios), 0.1)
    # residual (b) at the grid point nearest 5e-3
    j = int(np.argmin([abs(z - 5e-3) for z in zetas]))
    ctx.add("limit/b_raw", dict(inputs, zeta=zetas[j]), lambda: result().b[j], 1e-4)
    ctx.add("limit/b_extrapolated", inputs,
            lambda: result().b_extrapolated if result().b_extrapolated is not None else math.nan, 1e-4)


# ---------------------------------------------------------------------------
# Fock
# ---------------------------------------------------------------------------

def suite_fock_two_point(ctx: RunContext) -> None:
    A = {}

    def const():
        if "A" not in A:
            A["A"] = fock.ef_constant()
        return A["A"]

    for i in range(ctx.samples(5)):
        name = f"fock/hh/{i}"
        rng = ctx.rng(name)
        v = complex(rng.uniform(-1, 1), -rng.uniform(0, 1))
        w = complex(rng.uniform(-1, 1), rng.uniform(0.2, 1.5))
        ctx.add(name, {"u": v + w, "v": v},
                lambda: abs(fock.two_point("h", v + w, "h", v) * w ** 2 + 2.0), 1e-7)
    for i in range(ctx.samples(5)):
        name = f"fock/ef-constant/{i}"
        rng = ctx.rng(name)
        v = complex(rng.uniform(-1, 1), -rng.uniform(0, 1))
        w = complex(rng.uniform(-1, 1), rng.uniform(0.2, 1.5))
        ctx.add(name, {"u": v + w, "v": v},
                lambda: abs(fock.two_point("e", v + w, "f", v) * w ** 2 - const()) / abs(const()), 1e-6)
    for kind in ("ef", "ee"):
        for i in range(ctx.samples(5)):
            name = f"fock/{kind}-law/{i}"
            rng = ctx.rng(name)
            w1, w2 = (complex(rng.uniform(-1, 1), rng.uniform(0.2, 1.5)) for _ in range(2))
            ctx.add(name, {"w1": w1, "w2": w2}, lambda: fock.exponent_difference(kind, w1, w2)[0], 1e-6)
    half = ContourSpec(kind="keyhole_log", epsilon=5e-5, r0=5e-4, tol=1e-12, max_levels=10)
    for i, (a, b) in enumerate((("e", "f"), ("e", "e"), ("f", "e"))):
        name = f"fock/r0-halving/{a}{b}"
        rng = ctx.rng(name)
        w1, w2 = (complex(rng.uniform(-1, 1), rng.uniform(0.2, 1.5)) for _ in range(2))

        def compute():
            r1 = fock.two_point(a, w1, b, 0.0) / fock.two_point(a, w2, b, 0.0)
            r2 = fock.two_point(a, w1, b, 0.0, half) / fock.two_point(a, w2, b, 0.0, half)
            return abs(r1 - r2) / abs(r1)
        ctx.add(name, {"w1": w1, "w2": w2}, compute, 1e-7)


def suite_fock_commutator(ctx: RunContext) -> None:
    v = 0.0
    for i in range(ctx.samples(5)):
        name = f"fock/smeared/{i}"
        rng = ctx.rng(name)
        s = TestFunction(float(rng.uniform(0.8, 2.0)), float(rng.uniform(-1, 1)), float(rng.uniform(-0.5, 0.5)))
        ctx.add(name, {"alpha": s.alpha, "beta": s.beta, "z0": s.z0, "v": v},
                lambda: fock.smeared_commutator_check(s, v).residual, 1e-6)
    s0 = TestFunction(1.0, 0.0, v)
    ctx.add("fock/smeared/stationary", {"alpha": 1.0, "beta": 0.0, "z0": v, "v": v},
            lambda: abs(fock.smeared_commutator_check(s0, v).value), 1e-8)


def suite_fock_h_kernel(ctx: RunContext) -> None:
    p = trigcur.TrigParams(ctx.params["eta"])
    xi = 1.0 / p.eta
    pts = [(-0.3j, -0.5j + 0.2, (-0.7j - 0.4, 0.5 - 0.1j))]
    for i in range(ctx.samples(4)):
        rng = ctx.rng(f"fock/h-kernel/point/{i}")
        # the continuation needs a decaying ray; draw ordered points until one admits it
        for _ in range(50):
            y = np.cumsum(rng.uniform(0.1, 0.25, 3) * xi) + 0.05 * xi
            u = complex(rng.uniform(-0.2, 0.2), -y[0])
            v = complex(rng.uniform(-0.4, 0.4), -y[1])
            ws = (complex(rng.uniform(-0.5, 0.5), -y[2]), complex(rng.uniform(-0.5, 0.5), -y[2] - 0.05 * xi))
            try:
                fock.h_action_kernel_check(u, v, ws[:1], p, "e")
                break
            except CurrentAlgebraError:
                continue
        pts.append((u, v, ws))
    for i, (u, v, ws) in enumerate(pts):
        holder = {}

        def res(target, u=u, v=v, ws=ws, holder=holder):
            if target not in holder:
                holder[target] = fock.h_action_kernel_check(u, v, ws, p, target)
            return holder[target]
        inputs = {"u": u, "v": v, "w": list(ws), "eta": p.eta}
        ctx.add(f"h-kernel/{i}/algebra", inputs, lambda res=res: res("e").residual, 1e-6)
        ctx.add(f"h-kernel/{i}/algebra_sign_flipped", inputs, lambda res=res: res("e").flipped_residual, 1e-6)
        ctx.add(f"h-kernel/{i}/w_independence", inputs, lambda res=res: res("e").w_spread, 1e-8)
        ctx.add(f"h-kernel/{i}/e_f_sign", inputs,
                lambda res=res: abs(res("e").fock_kernel + res("f").fock_kernel), 1e-8)


SUITES: dict[str, Callable[[RunContext], None]] = {
    "specfun": suite_specfun,
    "trig-jacobi": suite_trig_jacobi,
    "trig-cocycle": suite_trig_cocycle,
    "sokhotsky": suite_sokhotsky,
    "fourier-kernels": suite_fourier_kernels,
    "gauge": suite_gauge,
    "modes-cobracket": suite_modes_cobracket,
    "rational-limit": suite_rational_limit,
    "rational-double": suite_rational_double,
    "cybe-trig": suite_cybe_trig,
    "rmatrix-expansion": suite_rmatrix_expansion,
    "eta-derivative": suite_eta_derivative,
    "ll-structure": suite_ll_structure,
    "elliptic-jacobi": suite_elliptic_jacobi,
    "elliptic-cocycle": suite_elliptic_cocycle,
    "elliptic-series": suite_elliptic_series,
    "cybe-elliptic": suite_cybe_elliptic,
    "elliptic-ll": suite_elliptic_ll,
    "baxter-sklyanin": suite_baxter_sklyanin,
    "elliptic-limit": suite_elliptic_limit,
    "fock-two-point": suite_fock_two_point,
    "fock-commutator": suite_fock_commutator,
    "fock-h-kernel": suite_fock_h_kernel,
}


def suite_names() -> list[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, cfg: SuiteConfig, seed: int | None = None) -> VerificationReport:
    """Run one suite (or ``"all"``, the union of every suite's cases)."""
    if name not in SUITES and name != "all":
        raise KeyError(name)
    seed = cfg.seed if seed is None else seed
    ctx = RunContext(cfg, seed)
    for key in (SUITES if name == "all" else [name]):
        before = len(ctx.cases)
        SUITES[key](ctx)
        if name == "all":
            for c in ctx.cases[before:]:
                c.name = f"{key}::{c.name}"
    return VerificationReport(name, seed, ctx.cases, cfg.digest())
