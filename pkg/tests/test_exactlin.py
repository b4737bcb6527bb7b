import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartier_kit.errors import (DimensionMismatch, NonUnit, NotInvertible,
                                ParseError, RingMismatch, UnsupportedRing)
from cartier_kit.exactlin import (QQ, QQ_T, ZZ, BaseRing, Scalar, SparseMatrix,
                                  Zmod, canonical_row_form, image_subset, invert,
                                  is_invertible, kron, kron_apply, mat_mul,
                                  nullspace, rank, ring_ops, same_image, solve,
                                  swap, tensor_permutation, tensor_permutation_map,
                                  unvectorize, vectorize)

from _support import span_mod_n

T = QQ_T.coerce([0, 1])
T2 = QQ_T.coerce([0, 0, 1])


def m(ring, rows):
    return SparseMatrix.from_dense(ring, rows)


# -- scalars -----------------------------------------------------------------------------

def test_inverse_of_five_mod_six():
    assert ring_ops(Scalar(Zmod(6), 5), None, "inv") == Scalar(Zmod(6), 5)


def test_unit_search_mod_six_matches_gcd():
    units = [a for a in range(6) if any(a * b % 6 == 1 for b in range(6))]
    assert units == [a for a in range(6) if Zmod(6).is_unit(a)] == [1, 5]


def test_fraction_addition():
    half, third = Scalar(QQ, QQ.coerce(Fraction(1, 2))), Scalar(QQ, QQ.coerce(Fraction(1, 3)))
    assert ring_ops(half, third, "add").value == Fraction(5, 6)


@pytest.mark.parametrize("ring,value", [(QQ_T, T), (ZZ, 2), (Zmod(6), 3)])
def test_non_units_refuse_inverse(ring, value):
    with pytest.raises(NonUnit):
        ring_ops(Scalar(ring, value), None, "inv")


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch):
        ring_ops(Scalar(ZZ, 1), Scalar(QQ, QQ.one), "add")


def test_residues_are_canonical():
    assert Zmod(6).coerce(-1) == 5
    assert Scalar(Zmod(6), Zmod(6).coerce(13)) == Scalar(Zmod(6), 1)


def test_ring_parsing():
    assert BaseRing.parse("F3") == Zmod(3)
    assert BaseRing.parse("Z/6") == Zmod(6)
    assert BaseRing.parse("Q[t]") == QQ_T
    assert str(Zmod(12)) == "Z/12"
    with pytest.raises(ParseError):
        BaseRing.parse("F4")
    with pytest.raises(UnsupportedRing):
        Zmod(1)


def test_prime_flag_is_derived():
    assert Zmod(7).is_field and not Zmod(6).is_field
    assert Zmod(6).is_finite and not QQ.is_finite


def _ring_elements(ring):
    if ring == ZZ:
        return st.integers(-50, 50)
    if ring == QQ:
        return st.fractions(max_denominator=7).map(lambda f: f.limit_denominator(7))
    if ring == QQ_T:
        return st.lists(st.fractions(max_denominator=3), max_size=3).map(QQ_T.coerce)
    return st.integers(0, ring.modulus - 1)


RINGS = [ZZ, QQ, QQ_T, Zmod(6), Zmod(7), Zmod(12)]


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_ring_axioms(ring, data):
    a, b, c = (ring.coerce(data.draw(_ring_elements(ring))) for _ in range(3))
    add, mul = ring.add, ring.mul
    assert add(a, add(b, c)) == add(add(a, b), c)
    assert mul(a, mul(b, c)) == mul(mul(a, b), c)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, ring.zero) == a and mul(a, ring.one) == a
    assert mul(a, b) == mul(b, a)
    assert add(a, ring.neg(a)) == ring.zero
    if ring.is_unit(a):
        assert mul(a, ring.inv(a)) == ring.one


# -- matrices ----------------------------------------------------------------------------

def test_matrix_products():
    assert mat_mul(SparseMatrix.identity(ZZ, 2), SparseMatrix.identity(ZZ, 2)) == SparseMatrix.identity(ZZ, 2)
    assert m(QQ_T, [[T]]) @ m(QQ_T, [[T]]) == m(QQ_T, [[T2]])
    assert m(ZZ, [[1, 1], [0, 1]]) @ m(ZZ, [[1, 0], [1, 1]]) == m(ZZ, [[2, 1], [1, 1]])


def test_product_shape_and_ring_checks():
    with pytest.raises(DimensionMismatch):
        SparseMatrix.identity(ZZ, 2) @ SparseMatrix.identity(ZZ, 3)
    with pytest.raises(RingMismatch):
        SparseMatrix.identity(ZZ, 2) @ SparseMatrix.identity(QQ, 2)


def test_no_stored_zeros():
    a = m(ZZ, [[1, 0], [0, -1]])
    assert (a + SparseMatrix.identity(ZZ, 2)).nnz == 1


def test_kron_examples():
    assert kron(SparseMatrix.identity(ZZ, 2), SparseMatrix.identity(ZZ, 2)) == SparseMatrix.identity(ZZ, 4)
    assert kron(m(ZZ, [[2]]), m(ZZ, [[3]])) == m(ZZ, [[6]])
    block_swap = m(ZZ, [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert kron(m(ZZ, [[0, 1], [1, 0]]), SparseMatrix.identity(ZZ, 2)) == block_swap


def test_kron_flat_index_convention():
    e = [SparseMatrix.basis_column(ZZ, 3, i) for i in range(3)]
    f = [SparseMatrix.basis_column(ZZ, 2, j) for j in range(2)]
    for i, j in itertools.product(range(3), range(2)):
        assert kron(e[i], f[j]) == SparseMatrix.basis_column(ZZ, 6, i * 2 + j)


def small_matrices(ring, max_dim=3):
    return st.integers(1, max_dim).flatmap(lambda r: st.integers(1, max_dim).flatmap(
        lambda c: st.lists(st.lists(_ring_elements(ring), min_size=c, max_size=c), min_size=r, max_size=r)
    )).map(lambda rows: SparseMatrix.from_dense(ring, [[ring.coerce(x) for x in row] for row in rows]))


@settings(max_examples=30, deadline=None)
@given(small_matrices(ZZ), small_matrices(ZZ), small_matrices(ZZ))
def test_kron_associative_and_mixed_product(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))
    if a.cols == a.rows:
        assert kron(a, b) @ kron(SparseMatrix.identity(ZZ, a.cols), SparseMatrix.identity(ZZ, b.cols)) == kron(a, b)


@settings(max_examples=30, deadline=None)
@given(small_matrices(QQ), small_matrices(QQ), st.data())
def test_kron_apply_matches_kron(left, right, data):
    vals = data.draw(st.lists(st.integers(-3, 3), min_size=left.cols * right.cols, max_size=left.cols * right.cols))
    v = SparseMatrix.column(QQ, vals)
    assert kron_apply(left, right, v) == kron(left, right) @ v


def test_tensor_permutation_moves_factors():
    dims = (2, 3, 4)
    perm = (2, 0, 1)
    p = tensor_permutation(ZZ, dims, perm)
    mapping = tensor_permutation_map(dims, perm)
    for a, b, c in itertools.product(range(2), range(3), range(4)):
        src = (a * 3 + b) * 4 + c
        dst = (c * 2 + a) * 3 + b
        assert mapping[src] == dst
        assert p @ SparseMatrix.basis_column(ZZ, 24, src) == SparseMatrix.basis_column(ZZ, 24, dst)


def test_swap_matrix():
    s = swap(ZZ, 2, 3)
    x = SparseMatrix.column(ZZ, [1, 2])
    y = SparseMatrix.column(ZZ, [3, 4, 5])
    assert s @ kron(x, y) == kron(y, x)


def test_vectorize_roundtrip():
    a = m(ZZ, [[1, 2, 3], [4, 5, 6]])
    v = vectorize(a)
    assert v.as_vector() == (1, 2, 3, 4, 5, 6)
    assert unvectorize(v, 2, 3) == a


# -- canonical forms ----------------------------------------------------------------------

def test_canonical_form_examples():
    assert canonical_row_form(m(QQ_T, [[T], [T2]])) == m(QQ_T, [[T]])
    assert canonical_row_form(m(ZZ, [[2], [3]])) == m(ZZ, [[1]])
    assert canonical_row_form(SparseMatrix.zeros(ZZ, 3, 2)).rows == 0


def test_howell_form_mod_twelve():
    assert canonical_row_form(m(Zmod(12), [[4, 6], [3, 3]])) == m(Zmod(12), [[1, 3], [0, 6]])


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_canonical_form_idempotent(ring, data):
    a = data.draw(small_matrices(ring, 4))
    c = canonical_row_form(a)
    assert canonical_row_form(c) == c


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_howell_form_decides_spans(n, data):
    ring = Zmod(n)
    width = data.draw(st.integers(1, 3))
    rows_a = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=width, max_size=width), min_size=1, max_size=3))
    rows_b = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=width, max_size=width), min_size=1, max_size=3))
    a, b = m(ring, rows_a), m(ring, rows_b)
    span_a, span_b = span_mod_n(rows_a, n), span_mod_n(rows_b, n)
    assert (canonical_row_form(a) == canonical_row_form(b)) == (span_a == span_b)
    # the canonical rows generate the same module
    c = canonical_row_form(a)
    assert span_mod_n([list(r) for r in c.to_dense()], n, width) == span_a


def test_image_subset_examples():
    assert image_subset(m(ZZ, [[2]]), m(ZZ, [[1]]))
    assert not image_subset(m(ZZ, [[1]]), m(ZZ, [[2]]))
    assert image_subset(m(QQ_T, [[T2]]), m(QQ_T, [[T]]))
    assert image_subset(m(Zmod(6), [[2]]), m(Zmod(6), [[4]]))


def test_image_subset_needs_same_target():
    with pytest.raises(DimensionMismatch):
        image_subset(SparseMatrix.identity(ZZ, 2), SparseMatrix.identity(ZZ, 3))


@pytest.mark.parametrize("ring", [ZZ, QQ_T, Zmod(6)], ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_mutual_containment_is_equal_forms(ring, data):
    rows = data.draw(st.integers(1, 3))
    a = data.draw(small_matrices(ring, 3).filter(lambda x: x.rows == rows))
    b = data.draw(small_matrices(ring, 3).filter(lambda x: x.rows == rows))
    both = image_subset(a, b) and image_subset(b, a)
    assert both == same_image(a, b)


# -- inversion ---------------------------------------------------------------------------

def test_invert_examples():
    assert invert(SparseMatrix.identity(QQ, 3)) == SparseMatrix.identity(QQ, 3)
    assert invert(m(Zmod(6), [[5]])) == m(Zmod(6), [[5]])
    assert invert(m(ZZ, [[2, 1], [1, 1]])) == m(ZZ, [[1, -1], [-1, 2]])
    with pytest.raises(NotInvertible):
        invert(m(ZZ, [[2]]))
    with pytest.raises(NotInvertible):
        invert(m(QQ_T, [[T]]))
    assert not is_invertible(m(Zmod(6), [[2, 0], [0, 1]]))


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_inverse_is_two_sided(ring, data):
    n = data.draw(st.integers(1, 3))
    a = data.draw(small_matrices(ring, 3).filter(lambda x: x.rows == x.cols == n))
    try:
        inv = invert(a)
    except NotInvertible:
        return
    eye = SparseMatrix.identity(ring, n)
    assert a @ inv == eye and inv @ a == eye


# -- field helpers -----------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(small_matrices(QQ, 4))
def test_rank_nullity_and_solve(a):
    k = nullspace(a)
    assert rank(a) + k.cols == a.cols
    assert (a @ k).is_zero()
    b = a @ SparseMatrix.column(QQ, list(range(1, a.cols + 1)))
    x = solve(a, b)
    assert x is not None and a @ x == b
