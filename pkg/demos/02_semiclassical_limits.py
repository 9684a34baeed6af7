"""How R-matrices approach their classical r-matrices.

Both the trigonometric and the elliptic second-order statements converge
linearly in the small parameter.  The raw residual therefore sits well
above 1e-5 on a desk-scale grid, while a Richardson step on the same grid
removes the linear term.
"""
import math

from curalg import ellip, rmat_trig
from curalg.specfun import EllipticModulus

u, eta = 0.3 - 0.2j, 1.0
res = rmat_trig.expansion_check(u, eta, hbars=(1e-2, 5e-3, 2.5e-3))
print("trigonometric, u = 0.3-0.2i, eta = 1")
print(" hbar      (a) first order   (b) raw        (c) raw")
for h, a, b, c in zip(res.hbars, res.a, res.b, res.c):
    print(f" {h:<9g} {a:.3e}         {b:.3e}      {c:.3e}")
print(f" order of (a): {[round(math.log2(a / b), 3) for a, b in zip(res.a, res.a[1:])]}")
print(f" extrapolated (b) {res.b_extrapolated:.2e}, (c) {res.c_extrapolated:.2e}")
print(f" eta-derivative identity residual {rmat_trig.eta_derivative_identity(u, eta):.1e}")

m = EllipticModulus.from_k(0.6)
lim = ellip.ell_classical_limit(0.4 - 0.3j, m, (1e-2, 5e-3, 2.5e-3))
print("\nelliptic, k = 0.6")
print(" zeta      (R/s - 1)/zeta - r   tau-shift raw")
for z, a, b in zip(lim.zetas, lim.a, lim.b):
    print(f" {z:<9g} {a:.3e}            {b:.3e}")
print(f" halving ratios: a {[round(r, 3) for r in lim.a_ratios]}, b {[round(r, 3) for r in lim.b_ratios]}")
print(f" tau-shift after one Richardson step: {lim.b_extrapolated:.2e}")

bs = ellip.baxter_to_sklyanin(0.2, 0.1, 0.4)
print(f"\nBaxter's eight-vertex matrix is projectively Sklyanin's: residual {bs.residual:.1e} "
      f"(k = {bs.k:.6f}, zeta = {bs.zeta:.3f})")
