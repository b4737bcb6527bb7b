import pytest

from cartier_kit import catalog
from cartier_kit.cartier import (CartierPairing, base_change_grouplikes,
                                 cartier_unit, duality_bijection, points,
                                 point_to_grouplike, verify_cartier_equations)
from cartier_kit.errors import InfiniteRing, NotAHopfAlgebra, RingMismatch, ShapeError
from cartier_kit.exactlin import QQ, ZZ, SparseMatrix, Zmod, kron_apply
from cartier_kit.hopf import dual_hopf, grouplikes

from _support import (F2, F3, F5, brute_base_change_grouplikes, brute_points,
                      catalog_hopf_corpus, dfs_base_change_grouplikes,
                      finite_test_algebras, mutations)


def test_unit_vectors():
    assert cartier_unit(catalog.trivial_hopf(QQ)).unit_vec.as_vector() == (1,)
    u = cartier_unit(catalog.mu_n(ZZ, 2)).unit_vec
    assert u.as_vector() == (1, 0, 0, 1)
    u3 = cartier_unit(catalog.mu_n(QQ, 3)).unit_vec
    assert u3.nnz == 3 and set(u3.as_vector()) == {0, 1}


def test_cartier_unit_rejects_non_hopf():
    _, bad = mutations(catalog.mu_n(F3, 2))[2]
    with pytest.raises(NotAHopfAlgebra):
        cartier_unit(bad)


def test_equations_on_small_examples():
    assert verify_cartier_equations(cartier_unit(catalog.trivial_hopf(QQ))).ok
    assert verify_cartier_equations(cartier_unit(catalog.mu_n(ZZ, 2))).ok


def test_mu2_equations_by_hand():
    # (1 (x) Delta) unit lists e_i^v (x) x^i (x) x^i; both sides put 1 at flat indices 0 and 7
    p = cartier_unit(catalog.mu_n(ZZ, 2))
    lhs = kron_apply(SparseMatrix.identity(ZZ, 2), p.source.comul, p.unit_vec)
    assert lhs.as_vector() == (1, 0, 0, 0, 0, 0, 0, 1)


@pytest.mark.parametrize("name,h", catalog_hopf_corpus()[::3])
def test_equations_hold_on_catalog(name, h):
    assert verify_cartier_equations(cartier_unit(h)).ok


def test_tampered_dual_fails():
    p = cartier_unit(catalog.mu_n(F3, 3))
    bad = CartierPairing(p.source, p.dual.replace(comul=SparseMatrix.zeros(F3, 9, 3)), p.unit_vec)
    r = verify_cartier_equations(bad)
    assert not r.ok and not r.mul_eq


@pytest.mark.parametrize("field", ["mul", "unit", "comul", "counit"])
def test_each_tampered_dual_map_is_caught(field):
    p = cartier_unit(catalog.mu_n(F5, 3))
    m = getattr(p.dual, field)
    bad = CartierPairing(p.source, p.dual.replace(**{field: m.scale(2)}), p.unit_vec)
    assert not verify_cartier_equations(bad).ok


def test_unit_shape_checked():
    p = cartier_unit(catalog.mu_n(F3, 2))
    with pytest.raises(ShapeError):
        verify_cartier_equations(CartierPairing(p.source, p.dual, SparseMatrix.zeros(F3, 3, 1)))


def test_points_examples():
    pts = points(catalog.mu_n(F3, 2), catalog.base_algebra(F3))
    assert [f.to_dense() for f in pts] == [[[1, 1]], [[1, 2]]]
    assert len(points(catalog.trivial_hopf(F2), catalog.dual_numbers(F2))) == 1
    assert [f.to_dense() for f in points(catalog.mu_n(F2, 3), catalog.base_algebra(F2))] == [[[1, 1, 1]]]


def test_points_reject_infinite_and_mixed_rings():
    with pytest.raises(InfiniteRing):
        points(catalog.mu_n(QQ, 2), catalog.base_algebra(QQ))
    with pytest.raises(RingMismatch):
        points(catalog.mu_n(F3, 2), catalog.base_algebra(F2))


@pytest.mark.parametrize("h", [catalog.mu_n(F3, 2), catalog.mu_n(Zmod(4), 2), catalog.alpha(2, 1),
                               catalog.constant_group(F2, [2]), catalog.mu_n(F5, 3), catalog.alpha(3, 1)])
def test_points_and_grouplikes_match_brute_force(h):
    for b in finite_test_algebras(h.ring):
        assert points(h, b) == brute_points(h, b)
        brute = brute_base_change_grouplikes(h, b)
        assert base_change_grouplikes(h, b) == sorted(brute, key=lambda g: g.as_vector())
        # the depth-first oracle used at larger ranks must agree with full enumeration
        assert dfs_base_change_grouplikes(h, b) == brute


def test_bijection_examples():
    assert duality_bijection(catalog.mu_n(F3, 2), catalog.base_algebra(F3)).as_dict() == \
        {"points_count": 2, "grouplikes_count": 2, "bijection_verified": True}
    assert duality_bijection(catalog.trivial_hopf(F2), catalog.base_algebra(F2)).as_dict() == \
        {"points_count": 1, "grouplikes_count": 1, "bijection_verified": True}
    assert duality_bijection(catalog.constant_group(F3, [2]), catalog.base_algebra(F3)).as_dict() == \
        {"points_count": 2, "grouplikes_count": 2, "bijection_verified": True}


def test_point_to_grouplike_entries():
    h = catalog.mu_n(F3, 2)
    b = catalog.split_algebra(F3)
    p = cartier_unit(h)
    for f in points(h, b):
        g = point_to_grouplike(p, f)
        for i in range(2):
            for k in range(2):
                assert g[i * 2 + k, 0] == f[k, i]


@pytest.mark.parametrize("ring", [F2, F3], ids=str)
def test_points_multiplicative_under_tensor(ring):
    h1, h2 = catalog.mu_n(ring, 2), catalog.alpha(ring.modulus, 1)
    h = catalog.tensor_hopf(h1, h2)
    for b in finite_test_algebras(ring):
        assert len(points(h, b)) == len(points(h1, b)) * len(points(h2, b))


def test_grouplikes_of_mu_count_points():
    for m in (2, 3, 4, 5, 6):
        ring = Zmod(m)
        for n in (1, 2, 3, 4):
            h = catalog.mu_n(ring, n)
            assert len(grouplikes(dual_hopf(h))) == len(points(h, catalog.base_algebra(ring)))
