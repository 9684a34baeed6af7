"""The free-boson realisation of the currents.

Two-point functions come out of keyhole contour contractions.  Their
normalisations are measured rather than assumed, the smeared [e, f]
commutator reproduces the central term, and the h_+ action is read off
three-point functions.
"""
import math

from curalg import fock
from curalg.quad import TestFunction
from curalg.trigcur import TrigParams

w = 0.3 + 0.8j
print(f"<h(w) h(0)> w^2 = {fock.two_point('h', w, 'h', 0.0) * w ** 2:.10f}")
A = fock.ef_constant()
print(f"<e(w) f(0)> w^2 = {A:.10f}   (the same for every w)")
res, diff = fock.exponent_difference("ef", 0.4j, 1.1 + 0.7j)
print(f"e-f exponent difference law residual {res:.1e}")

s = TestFunction(alpha=1.3, beta=0.4, z0=0.2)
sc = fock.smeared_commutator_check(s, 0.0)
print(f"\nsmeared <[e(u), f(0)]> / s'(0) = {sc.ratio:.10f}  (2 pi i = {2j * math.pi:.10f})")
print(f"prediction residual {sc.residual:.1e}")

p = TrigParams(1.0)
hk = fock.h_action_kernel_check(-0.3j, 0.2 - 0.5j, [-0.4 - 0.7j, 0.5 - 0.1j], p, "e")
print(f"\n[h_+(u), e(v)] kernel from three-point functions: {hk.fock_kernel:.6f}")
print(f"algebra bracket kernel:                          {hk.algebra_kernel:.6f}")
print(f"the two differ by a sign: |K_fock + K_alg| = {hk.flipped_residual:.1e}; "
      f"spread over w = {hk.w_spread:.1e}")
