import pytest

from cartier_kit import catalog
from cartier_kit.errors import InfiniteRing, NotAHopfAlgebra, ShapeError
from cartier_kit.exactlin import QQ, ZZ, SparseMatrix, Zmod, kron
from cartier_kit.hopf import (HopfAlgebraData, dual_hopf, grouplikes,
                              hopf_iso_check, is_grouplike, tensor_algebra,
                              verify_hopf)

from _support import F3, brute_grouplikes, catalog_hopf_corpus, mutations

CORPUS = catalog_hopf_corpus()


@pytest.mark.parametrize("name,h", CORPUS, ids=[n for n, _ in CORPUS])
def test_catalog_objects_are_hopf(name, h):
    assert verify_hopf(h).is_hopf


@pytest.mark.parametrize("name,h", CORPUS[::7], ids=[n for n, _ in CORPUS[::7]])
def test_double_dual_is_identity(name, h):
    assert dual_hopf(dual_hopf(h)) == h


def test_dual_transposes_structure_maps():
    h = catalog.mu_n(F3, 3)
    d = dual_hopf(h)
    assert d.mul == h.comul.T and d.comul == h.mul.T
    assert d.unit == h.counit.T and d.counit == h.unit.T
    assert d.antipode == h.antipode.T
    assert d.basis == ("1*", "x*", "x^2*")


@pytest.mark.parametrize("h", [catalog.mu_n(Zmod(5), 3), catalog.alpha(3, 1), catalog.constant_group(QQ, [2, 2])])
def test_each_mutation_breaks_an_axiom(h):
    for name, bad in mutations(h):
        assert not verify_hopf(bad).is_hopf, name


def test_dual_of_non_hopf_rejected():
    _, bad = mutations(catalog.mu_n(F3, 2))[0]
    with pytest.raises(NotAHopfAlgebra):
        dual_hopf(bad)


def test_shape_validation():
    h = catalog.mu_n(F3, 2)
    with pytest.raises(ShapeError):
        h.replace(unit=SparseMatrix.identity(F3, 2))


def test_commutativity_flags():
    r = verify_hopf(catalog.mu_n(ZZ, 4))
    assert r.commutative and r.cocommutative


@pytest.mark.parametrize("h", [catalog.mu_n(F3, 2), catalog.mu_n(Zmod(4), 4), catalog.constant_group(F3, [2]),
                               catalog.alpha(2, 1), catalog.alpha(3, 1), catalog.mu_n(Zmod(5), 4),
                               catalog.tensor_hopf(catalog.mu_n(F3, 2), catalog.mu_n(F3, 2))])
def test_grouplikes_match_brute_force(h):
    assert grouplikes(h) == brute_grouplikes(h)
    for g in grouplikes(h):
        assert is_grouplike(h, g)


def test_grouplikes_of_mu2_squared():
    h = catalog.tensor_hopf(catalog.mu_n(F3, 2), catalog.mu_n(F3, 2))
    assert len(grouplikes(h)) == 4


def test_grouplikes_need_finite_ring():
    with pytest.raises(InfiniteRing):
        grouplikes(catalog.mu_n(QQ, 2))


def test_iso_check_identity_and_non_invertible():
    h = catalog.mu_n(F3, 3)
    assert hopf_iso_check(h, h, SparseMatrix.identity(F3, 3))
    assert not hopf_iso_check(h, h, SparseMatrix.zeros(F3, 3, 3))


def test_tensor_algebra_componentwise_product():
    a, b = catalog.dual_numbers(QQ), catalog.split_algebra(QQ)
    t = tensor_algebra(a, b)
    e = a.basis_vector(1)
    p = b.basis_vector(0)
    x = SparseMatrix.column(QQ, [0, 0, 1, 0])  # e (x) p0
    assert t.product(x, x).is_zero()
    assert t.product(kron(a.unit, p), kron(e, b.unit)) == kron(e, p)
    assert t.is_associative() and t.is_unital()


def test_hopf_data_requires_basis():
    with pytest.raises(ShapeError):
        HopfAlgebraData(F3, (), SparseMatrix.zeros(F3, 0, 0), SparseMatrix.zeros(F3, 0, 1),
                        SparseMatrix.zeros(F3, 0, 0), SparseMatrix.zeros(F3, 1, 0), SparseMatrix.zeros(F3, 0, 0))
