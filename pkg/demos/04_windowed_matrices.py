"""A look inside: the windowed matrices behind the determinant formulas.

The projections are determinants of finite perturbations of reflection
factors F^{R+-}(t, w); the conjugated shifts F U(z^n) F^-1 have closed
forms that stay polynomial in t even where F itself is not invertible.
"""

from fractions import Fraction

import whlaurent as wl
from whlaurent import matrices as mx
from whlaurent.matrices import Lattice
from whlaurent.series import LaurentSeries, laurent_ring

Q = wl.rational_ring()
Qw = laurent_ring(Q, "w")
w = LaurentSeries.monomial(Q, 1)
WIN = (-4, 4)

a = LaurentSeries(Q, {-1: Fraction(-1, 2), 0: Fraction(1), 1: Fraction(-1, 3)})
print("U(a) for a = %s:" % a)
print(mx.build_U(a, Lattice.INTEGER, WIN).dump())

print()
print("F^{R+}(1, w)  (upper chain on the negative rows):")
print(mx.build_F("R+", Qw, Qw.one, w, WIN).dump())

print()
print("F^{R-}(1, w)  (lower chain on the positive rows):")
print(mx.build_F("R-", Qw, Qw.one, w, WIN).dump())

print()
print("doubled matrix with -w / -w^-1 coupling and isolated center:")
print(mx.build_Utilde(a, Qw, w, Qw.const, WIN).dump())

# the conjugated shift, symbolic in t and w over nested Laurent rings
Qt = laurent_ring(Q, "t")
Qtw = laurent_ring(Qt, "w")
t_sym = LaurentSeries.const(Qt, LaurentSeries.monomial(Q, 1))
w_sym = LaurentSeries.monomial(Qt, 1)
print()
print("conjugated shift for n = 2 (finite block around the origin):")
u = mx.ur_monomial("R", 2, Qtw, t_sym, w_sym, WIN)
for r in range(-1, 4):
    for c in range(-4, 4):
        v = u.get(r, c)
        if not Qtw.is_zero(v):
            print("  (%+d, %+d): %s" % (r, c, Qtw.fmt(v)))
