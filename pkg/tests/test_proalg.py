import pytest

from cartier_kit import catalog
from cartier_kit.errors import (BracketingMismatch, InsufficientHeadroom,
                                InvalidPresentation, NotAField)
from cartier_kit.exactlin import QQ, ZZ, SparseMatrix, kron, rank
from cartier_kit.proalg import (ProAlgebraPresentation, factorization_report,
                                mu3, presentation_from_filtration,
                                quotient_subspace, stage_quotient,
                                stage_quotients, verify_factorization)

from _support import F3, proalg_fixtures, two_sided_ideal


def m(ring, rows):
    return SparseMatrix.from_dense(ring, rows)


def constant_presentation(alg, stages):
    ring, n = alg.ring, alg.rank
    eye = SparseMatrix.identity(ring, n)
    return ProAlgebraPresentation(ring, [n] * stages, [eye] * (stages - 1),
                                  [alg.mul] * (stages - 1), [alg.unit] * stages)


def kernel_killing():
    """Q[x]/(x^3) with V_0 = span(x) and V_1 = V_2 = 0; M_0 has basis (1, x^2)."""
    a = catalog.truncated_polynomials(QQ, 3)
    zero = SparseMatrix.zeros(QQ, 0, 3)
    return a, presentation_from_filtration(a, [m(QQ, [[0, 1, 0]]), zero, zero])


def test_mu3_of_constant_field():
    p = constant_presentation(catalog.base_algebra(QQ), 3)
    assert mu3(p, 0, 2) == SparseMatrix.identity(QQ, 1)


def test_mu3_by_hand_composition():
    # M_2 = M_1 = Q^2 with componentwise product, M_0 = Q, phi projections onto the first coordinate
    split = catalog.split_algebra(QQ)
    proj = m(QQ, [[1, 0]])
    p = ProAlgebraPresentation(QQ, [1, 2, 2], [proj, SparseMatrix.identity(QQ, 2)],
                               [proj @ split.mul, split.mul], [m(QQ, [[1]]), split.unit, split.unit])
    expected = (proj @ split.mul) @ kron(split.mul, SparseMatrix.identity(QQ, 2))
    assert mu3(p, 0, 2) == expected
    assert expected.to_dense() == [[1, 0, 0, 0, 0, 0, 0, 0]]


def test_mu3_headroom():
    p = constant_presentation(catalog.dual_numbers(QQ), 4)
    with pytest.raises(InsufficientHeadroom):
        mu3(p, 0, 1)
    with pytest.raises(InsufficientHeadroom):
        mu3(p, 2, 4)


def test_multiplicative_transitions_give_identity_quotients():
    p = constant_presentation(catalog.upper_triangular(QQ, 2), 4)
    for q in stage_quotients(p):
        assert q.quotient_rank == 3
        assert q.projection == SparseMatrix.identity(QQ, 3)
        assert q.subspace.rows == 0
    assert verify_factorization(p)


def test_kernel_killing_example():
    _, p = kernel_killing()
    assert p.ranks == (2, 3, 3)
    q = stage_quotient(p, 0)
    assert q.quotient_rank == 1
    assert q.subspace.to_dense() == [[0, 1]]
    assert q.projection.to_dense() == [[1, 0]]
    assert q.induced_mul.to_dense() == [[1]] and q.induced_unit.to_dense() == [[1]]
    assert verify_factorization(p)


def test_non_surjective_transition_rejected():
    a = catalog.base_algebra(QQ)
    zero = SparseMatrix.zeros(QQ, 1, 1)
    with pytest.raises(InvalidPresentation, match="surjective"):
        ProAlgebraPresentation(QQ, [1, 1], [zero], [a.mul], [a.unit, a.unit])


def test_inconsistent_products_rejected():
    split = catalog.split_algebra(QQ)
    other = split.mul.permute_rows([1, 0])
    eye = SparseMatrix.identity(QQ, 2)
    with pytest.raises(InvalidPresentation):
        ProAlgebraPresentation(QQ, [2, 2, 2], [eye, eye], [split.mul, other], [split.unit] * 3)


def test_field_required():
    a = catalog.base_algebra(ZZ)
    with pytest.raises(NotAField):
        ProAlgebraPresentation(ZZ, [1], [], [], [a.unit])


def test_bracketing_mismatch_detected():
    # basis 1, a, b with a*a = b, a*b = a, everything else zero: unital, not associative
    n = 3
    entries = {}
    for i in range(n):
        entries[(i, 0 * n + i)] = 1
        entries[(i, i * n + 0)] = 1
    entries[(2, 1 * n + 1)] = 1
    entries[(1, 1 * n + 2)] = 1
    mul = SparseMatrix(QQ, n, n * n, entries)
    unit = SparseMatrix.basis_column(QQ, n, 0)
    eye = SparseMatrix.identity(QQ, n)
    p = ProAlgebraPresentation(QQ, [n] * 3, [eye] * 2, [mul] * 2, [unit] * 3)
    with pytest.raises(BracketingMismatch):
        mu3(p, 0, 2)


def test_too_few_stages():
    with pytest.raises(InsufficientHeadroom):
        stage_quotients(constant_presentation(catalog.base_algebra(QQ), 2))


FIXTURES4 = proalg_fixtures(stages=4, count=12, seed=3)
FIXTURES6 = proalg_fixtures(stages=6, count=12, seed=5)


def test_fixture_corpus_shape():
    assert len(FIXTURES4) >= 10
    assert {f[1].ring for f in FIXTURES4} == {QQ, F3}
    assert all(max(f[3].ranks) <= 6 and len(f[3].ranks) == 4 for f in FIXTURES4)
    nontrivial = [f for f in FIXTURES4 if any(q.subspace.rows for q in stage_quotients(f[3]))]
    assert len(nontrivial) >= 5


def test_six_stage_factorization_is_not_vacuous():
    checked = [f for f in FIXTURES6 if any(quotient_subspace(f[3], b).rows for b in (2, 3))]
    assert len(checked) >= 3


@pytest.mark.parametrize("name,alg,vs,p", FIXTURES4 + FIXTURES6, ids=[f[0] for f in FIXTURES4 + FIXTURES6])
def test_beta_independence(name, alg, vs, p):
    for alpha in range(p.top - 1):
        base = quotient_subspace(p, alpha)
        for beta in range(alpha + 3, p.top + 1):
            assert quotient_subspace(p, alpha, beta) == base


@pytest.mark.parametrize("name,alg,vs,p", FIXTURES4 + FIXTURES6, ids=[f[0] for f in FIXTURES4 + FIXTURES6])
def test_quotients_match_ideal_oracle(name, alg, vs, p):
    for q in stage_quotients(p):
        ideal = two_sided_ideal(alg, vs[q.alpha]) if vs[q.alpha].rows else vs[q.alpha]
        assert q.quotient_rank == alg.rank - ideal.rows
        assert q.well_defined
        a_alpha = q.algebra
        assert a_alpha.is_associative() and a_alpha.is_unital()
        # A -> M_alpha -> A_alpha is a surjective algebra map
        f = q.projection @ _quotient_map(alg, vs[q.alpha])
        assert rank(f) == q.quotient_rank
        assert f @ alg.mul == q.induced_mul @ kron(f, f)
        assert f @ alg.unit == q.induced_unit


def _quotient_map(alg, v):
    """``A -> A / V`` in the coordinates used by the filtration presentation."""
    p = presentation_from_filtration(alg, [v, SparseMatrix.zeros(alg.ring, 0, alg.rank)])
    return p.transitions[0]


@pytest.mark.parametrize("name,alg,vs,p", FIXTURES6, ids=[f[0] for f in FIXTURES6])
def test_factorization_on_six_stages(name, alg, vs, p):
    report = factorization_report(p)
    assert sorted(report) == [0, 1]
    assert all(report.values())
    assert verify_factorization(p)


@pytest.mark.parametrize("name,alg,vs,p", FIXTURES4, ids=[f[0] for f in FIXTURES4])
def test_factorization_on_four_stages(name, alg, vs, p):
    assert verify_factorization(p)
