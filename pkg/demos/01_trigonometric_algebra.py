"""A walk through the trigonometric current algebra.

We build a few currents, bracket them, and watch the structural identities
hold: antisymmetry, Jacobi, invariance of the pairing, and agreement of the
closed-form central term with its boundary-integral definition.
"""
from curalg import trigcur as T

p = T.TrigParams(eta=1.0)
print(f"strip width xi = 1/eta = {p.xi}")

# Three currents on the plus strip (-xi < Im u < 0) and one on the minus strip.
h = T.gen("H", "plus", 0.2 - 0.3j)
e = T.gen("E", "plus", -0.4 - 0.6j)
f = T.gen("F", "minus", 0.1 + 0.5j)

print("\n[h, e]       =", T.bracket(h, e, 1.0, p))
print("[e, f] (c=1) =", T.bracket(e, f, 1.0, p))

x = h + e.scale(0.5)
y = f + T.gen("H", "minus", -0.3 + 0.2j)
z = T.gen("E", "plus", 0.7 - 0.1j) + T.gen("F", "plus", -0.2 - 0.8j)
print(f"\nJacobi residual at levels 0, 1, 2.5: "
      + ", ".join(f"{T.jacobi_residual(x, y, z, c, p):.1e}" for c in (0.0, 1.0, 2.5)))

lhs = T.pair(T.bracket(x, y, 1.0, p), z, p)
rhs = T.pair(x, T.bracket(y, z, 1.0, p), p)
print(f"pairing invariance: |<[x,y],z> - <x,[y,z]>| = {abs(lhs - rhs):.1e}")

# The central term: closed form against an eta-derivative boundary integral.
a = T.GeneratorTerm("E", "plus", 0.3 - 0.35j)
b = T.GeneratorTerm("F", "minus", -0.2 + 0.6j)
print(f"\ncocycle B(e+, f-): closed {T.cocycle_B(a, b, p):.10f}")
print(f"                  numeric {T.numeric_B(a, b, p):.10f}")

# Rescaling eta is an isomorphism of algebras.
eta_new = 2.0
lhs = T.gauge_map(T.bracket(x, y, 1.0, p), 1.0, eta_new)
rhs = T.bracket(T.gauge_map(x, 1.0, eta_new), T.gauge_map(y, 1.0, eta_new), 1.0, T.TrigParams(eta_new))
print(f"gauge map eta=1 -> 2 is a homomorphism: residual {(lhs - rhs).max_abs():.1e}")
