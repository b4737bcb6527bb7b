import math

import pytest

from cartier_kit import catalog
from cartier_kit.errors import NotPrime, RingMismatch
from cartier_kit.exactlin import QQ, QQ_T, ZZ, SparseMatrix, Zmod, kron
from cartier_kit.hopf import dual_hopf, grouplikes, hopf_iso_check, verify_hopf
from cartier_kit.motive import verify_hopf_pairing

from _support import F3


def col(ring, vals):
    return SparseMatrix.column(ring, vals)


def test_mu1_is_trivial():
    assert catalog.mu_n(QQ, 1) == catalog.trivial_hopf(QQ)
    assert catalog.mu_n(QQ, 1).rank == 1


def test_mu2_structure():
    h = catalog.mu_n(ZZ, 2)
    x = col(ZZ, [0, 1])
    assert h.algebra().product(x, x) == col(ZZ, [1, 0])
    assert h.comul @ x == kron(x, x)
    assert h.counit @ x == SparseMatrix.identity(ZZ, 1)


def test_mu_n_antipode_inverts():
    h = catalog.mu_n(QQ, 5)
    assert h.antipode @ col(QQ, [0, 1, 0, 0, 0]) == col(QQ, [0, 0, 0, 0, 1])


def test_mu6_over_z4_is_hopf():
    assert verify_hopf(catalog.mu_n(Zmod(4), 6)).is_hopf


@pytest.mark.parametrize("ring", [ZZ, QQ, QQ_T, Zmod(4)], ids=str)
def test_mu_n_over_all_rings(ring):
    assert verify_hopf(catalog.mu_n(ring, 3)).is_hopf


def test_constant_group_order_one_is_trivial():
    assert catalog.constant_group(QQ, [1]).rank == 1
    assert verify_hopf(catalog.constant_group(QQ, [1])).is_hopf


def test_constant_group_convolution():
    h = catalog.constant_group(F3, [2])
    assert h.basis == ("d(0)", "d(1)")
    d0 = col(F3, [1, 0])
    d1 = col(F3, [0, 1])
    assert h.comul @ d0 == kron(d0, d0) + kron(d1, d1)
    assert h.algebra().product(d0, d0) == d0 and h.algebra().product(d0, d1).is_zero()


def test_constant_group_mixed_radix():
    h = catalog.constant_group(QQ, [2, 3])
    assert h.basis[4] == "d(1,1)"
    r = verify_hopf(h)
    assert r.is_hopf and r.commutative and r.cocommutative


def test_alpha_structure():
    h = catalog.alpha(2, 1)
    x = col(h.ring, [0, 1])
    assert h.rank == 2
    assert h.algebra().product(x, x).is_zero()
    assert h.comul @ x == kron(x, h.unit) + kron(h.unit, x)
    a3 = catalog.alpha(3, 1)
    x2 = col(a3.ring, [0, 0, 1])
    x1 = col(a3.ring, [0, 1, 0])
    assert a3.comul @ x2 == kron(x2, a3.unit) + kron(x1, x1).scale(2) + kron(a3.unit, x2)


def test_alpha_binomial_coproduct():
    h = catalog.alpha(5, 1)
    for m in range(5):
        for j in range(m + 1):
            assert h.comul[j * 5 + (m - j), m] == math.comb(m, j) % 5


def test_alpha_checks_prime():
    with pytest.raises(NotPrime):
        catalog.alpha(4)
    assert verify_hopf(catalog.alpha(5, 1)).is_hopf


def test_exp_pairing_values():
    p = catalog.exp_pairing(3)
    assert p.value(0, 0) == 1 and p.value(1, 1) == 1 and p.value(2, 2) == 2
    assert all(p.value(i, j) == 0 for i in range(3) for j in range(3) if i != j)
    assert verify_hopf_pairing(catalog.exp_pairing(5)).ok
    with pytest.raises(NotPrime):
        catalog.exp_pairing(9)


def test_tensor_with_trivial_is_original():
    h = catalog.mu_n(F3, 3)
    t = catalog.tensor_hopf(h, catalog.trivial_hopf(F3))
    assert (t.mul, t.unit, t.comul, t.counit, t.antipode) == (h.mul, h.unit, h.comul, h.counit, h.antipode)


def test_tensor_flags_are_conjunctions():
    t = catalog.tensor_hopf(catalog.mu_n(F3, 2), catalog.alpha(3, 1))
    r = verify_hopf(t)
    assert r.is_hopf and r.commutative and r.cocommutative
    assert len(grouplikes(catalog.tensor_hopf(catalog.mu_n(F3, 2), catalog.mu_n(F3, 2)))) == 4


def test_tensor_needs_one_ring():
    with pytest.raises(RingMismatch):
        catalog.tensor_hopf(catalog.mu_n(F3, 2), catalog.mu_n(QQ, 2))


@pytest.mark.parametrize("ring", [ZZ, QQ, F3, Zmod(4), Zmod(6), QQ_T], ids=str)
@pytest.mark.parametrize("n", range(1, 9))
def test_dual_mu_is_constant_group(ring, n):
    d = dual_hopf(catalog.mu_n(ring, n))
    assert hopf_iso_check(d, catalog.constant_group(ring, [n]), catalog.character_basis_map(n, ring))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_alpha_is_self_dual(p):
    h = catalog.alpha(p, 1)
    assert hopf_iso_check(h, dual_hopf(h), catalog.alpha_self_duality_map(p))


def test_test_algebras_are_associative_and_unital():
    for ring in (QQ, F3):
        for a in (catalog.base_algebra(ring), catalog.dual_numbers(ring), catalog.split_algebra(ring, 3),
                  catalog.truncated_polynomials(ring, 4), catalog.upper_triangular(ring, 3)):
            assert a.is_associative() and a.is_unital()
    assert not catalog.upper_triangular(QQ, 2).is_commutative()
