"""
Roots of unity and their dual
=============================

mu_n is R[x]/(x^n - 1) with x grouplike.  Its linear dual is the algebra of
functions on Z/n, and B-points of mu_n line up with grouplikes of the dual
after base change to B.
"""

from cartier_kit import catalog
from cartier_kit.cartier import cartier_unit, duality_bijection, points, verify_cartier_equations
from cartier_kit.exactlin import Zmod
from cartier_kit.hopf import dual_hopf, grouplikes, hopf_iso_check, verify_hopf

F7 = Zmod(7)

# mu_3 over F_7: F_7 contains the cube roots of unity 1, 2, 4
h = catalog.mu_n(F7, 3)
print(verify_hopf(h))

# transposing every structure map gives the dual; it matches functions on Z/3
d = dual_hopf(h)
print("dual basis:", d.basis)
print("dual ~ const_3:", hopf_iso_check(d, catalog.constant_group(F7, [3]), catalog.character_basis_map(3, F7)))

# the canonical element of dual (x) h satisfies the four pairing identities
print(verify_cartier_equations(cartier_unit(h)))

# F_7-points of mu_3 are the algebra maps x -> a with a^3 = 1
for f in points(h, catalog.base_algebra(F7)):
    print("point x ->", f[0, 1])

# the same three elements appear as grouplikes of the dual
print("grouplikes of dual:", grouplikes(d))

# and the bijection holds after base change to a non-reduced algebra too
print(duality_bijection(h, catalog.dual_numbers(F7)))
