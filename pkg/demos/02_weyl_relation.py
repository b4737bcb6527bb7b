"""
A Weyl relation from a Hopf pairing
===================================

alpha_p = F_p[x]/(x^p) with x primitive pairs with a second copy (generator
y) through u(x^i (x) y^j) = delta_ij i!.  The smash product of the two is a
p^2-dimensional algebra where y x = x y + 1.
"""

from cartier_kit import catalog
from cartier_kit.motive import (mirror, smash, smash_swap_iso, verify_algebra_iso,
                                verify_hopf_pairing)

p = 5
pairing = catalog.exp_pairing(p)
print(verify_hopf_pairing(pairing))

s = smash(pairing)
x = s.basis_vector(s.basis.index("x#1"))
y = s.basis_vector(s.basis.index("1#y"))

lhs = s.product(y, x)
rhs = s.product(x, y) + s.unit
print("y x == x y + 1:", lhs == rhs)

# commutators [y, x^k] = k x^(k-1), the derivative rule
xk = s.unit
for k in range(1, p):
    prev = xk
    xk = s.product(xk, x)
    comm = s.product(y, xk) + s.product(xk, y).scale(p - 1)
    print(f"[y, x^{k}] == {k} x^{k - 1}:", comm == prev.scale(k))

# with the trivial pairing the same construction is just the tensor product
plain = smash(catalog.trivial_pairing(pairing.A, pairing.B))
print("trivial pairing commutes:", plain.is_commutative())

# the swap map identifies A # B with B # A for the mirrored pairing
phi = smash_swap_iso(pairing)
print("swap is an algebra isomorphism:", verify_algebra_iso(phi, s, smash(mirror(pairing))))
