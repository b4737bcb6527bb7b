"""Concrete group schemes, pairings and small test algebras.

Basis conventions are fixed so serialized objects are stable:

* ``mu_n``: monomials ``1, x, ..., x^(n-1)``.
* ``constant_group(orders)``: delta functions ``d(g)``; the element
  ``g = (g_0, ..., g_{k-1})`` sits at the mixed-radix index
  ``sum_i g_i * prod_{j > i} orders[j]`` (first coordinate most significant).
* ``alpha(p, k)``: monomials ``1, x, ..., x^(p^k - 1)`` over ``Z/p``.
"""
from __future__ import annotations

import itertools
import math

from .errors import NotPrime, RingMismatch, ShapeError
from .exactlin import BaseRing, SparseMatrix, Zmod, is_prime, kron, tensor_permutation_map
from .hopf import AssocAlgebraData, HopfAlgebraData, dual_hopf
from .motive import HopfPairing


def _monomial_labels(var: str, n: int) -> tuple[str, ...]:
    return tuple("1" if i == 0 else var if i == 1 else f"{var}^{i}" for i in range(n))


def mu_n(ring: BaseRing, n: int, var: str = "x") -> HopfAlgebraData:
    """Coordinate ring ``R[x]/(x^n - 1)`` of the n-th roots of unity."""
    if n < 1:
        raise ShapeError("mu_n needs n >= 1")
    one = ring.one
    mul = SparseMatrix(ring, n, n * n, {((i + j) % n, i * n + j): one for i in range(n) for j in range(n)})
    unit = SparseMatrix.basis_column(ring, n, 0)
    comul = SparseMatrix(ring, n * n, n, {(i * n + i, i): one for i in range(n)})
    counit = SparseMatrix(ring, 1, n, {(0, i): one for i in range(n)})
    antipode = SparseMatrix(ring, n, n, {((-i) % n, i): one for i in range(n)})
    return HopfAlgebraData(ring, _monomial_labels(var, n), mul, unit, comul, counit, antipode)


def trivial_hopf(ring: BaseRing) -> HopfAlgebraData:
    return mu_n(ring, 1)


def _group_elements(orders: list[int]) -> list[tuple[int, ...]]:
    return list(itertools.product(*(range(o) for o in orders)))


def constant_group(ring: BaseRing, orders) -> HopfAlgebraData:
    """Functions on the finite abelian group ``Z/n_1 x ... x Z/n_k``."""
    orders = list(orders)
    if not orders or any(o < 1 for o in orders):
        raise ShapeError("constant_group needs a nonempty list of orders >= 1")
    elems = _group_elements(orders)
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    one = ring.one

    def add(g, h):
        return tuple((a + b) % o for a, b, o in zip(g, h, orders))

    zero = tuple(0 for _ in orders)
    mul = SparseMatrix(ring, n, n * n, {(i, i * n + i): one for i in range(n)})
    unit = SparseMatrix(ring, n, 1, {(i, 0): one for i in range(n)})
    comul = SparseMatrix(ring, n * n, n, {(index[h] * n + index[k], index[add(h, k)]): one
                                          for h in elems for k in elems})
    counit = SparseMatrix(ring, 1, n, {(0, index[zero]): one})
    antipode = SparseMatrix(ring, n, n, {(index[tuple((-a) % o for a, o in zip(g, orders))], index[g]): one
                                         for g in elems})
    labels = tuple("d(" + ",".join(map(str, g)) + ")" for g in elems)
    return HopfAlgebraData(ring, labels, mul, unit, comul, counit, antipode)


def alpha(p: int, k: int = 1, var: str = "x") -> HopfAlgebraData:
    """``F_p[x]/(x^(p^k))`` with ``x`` primitive, over ``Z/p``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ShapeError("alpha needs k >= 1")
    ring = Zmod(p)
    n = p ** k
    one = ring.one
    mul = SparseMatrix(ring, n, n * n, {(a + b, a * n + b): one
                                        for a in range(n) for b in range(n) if a + b < n})
    unit = SparseMatrix.basis_column(ring, n, 0)
    comul = SparseMatrix(ring, n * n, n, {(j * n + (m - j), m): math.comb(m, j)
                                          for m in range(n) for j in range(m + 1)})
    counit = SparseMatrix(ring, 1, n, {(0, 0): one})
    antipode = SparseMatrix(ring, n, n, {(m, m): (-1) ** m for m in range(n)})
    return HopfAlgebraData(ring, _monomial_labels(var, n), mul, unit, comul, counit, antipode)


def tensor_hopf(h1: HopfAlgebraData, h2: HopfAlgebraData) -> HopfAlgebraData:
    """Hopf algebra of the product group scheme, on the Kronecker basis."""
    if h1.ring != h2.ring:
        raise RingMismatch(f"{h1.ring} vs {h2.ring}")
    m, n = h1.rank, h2.rank
    # (h1 (x) h2)^(x)2 is reordered to h1 (x) h1 (x) h2 (x) h2 and back
    mid = tensor_permutation_map((m, n, m, n), (0, 2, 1, 3))
    back = [0] * len(mid)
    for i, j in enumerate(mid):
        back[j] = i
    mul = kron(h1.mul, h2.mul).permute_cols(back)
    comul = kron(h1.comul, h2.comul).permute_rows(back)
    labels = tuple(f"{a}(x){b}" for a in h1.basis for b in h2.basis)
    return HopfAlgebraData(h1.ring, labels, mul, kron(h1.unit, h2.unit), comul,
                           kron(h1.counit, h2.counit), kron(h1.antipode, h2.antipode))


def character_basis_map(n: int, ring: BaseRing) -> SparseMatrix:
    """Map ``dual(mu_n) -> constant_group([n])`` sending ``(x^k)*`` to ``d(k)``.

    Both sides index the same group element ``k`` at position ``k``, so the
    map is the identity matrix.
    """
    return SparseMatrix.identity(ring, n)


def alpha_self_duality_map(p: int) -> SparseMatrix:
    """``alpha(p, 1) -> dual(alpha(p, 1))``, ``x^m -> m! (x^m)*``."""
    ring = Zmod(p)
    return SparseMatrix(ring, p, p, {(m, m): math.factorial(m) for m in range(p)})


# -- pairings ----------------------------------------------------------------

def exp_pairing(p: int) -> HopfPairing:
    """Truncated exponential pairing ``u(x^i (x) y^j) = delta_ij i!`` on ``alpha_p``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    a, b = alpha(p, 1, "x"), alpha(p, 1, "y")
    u = SparseMatrix(a.ring, 1, p * p, {(0, i * p + i): math.factorial(i) for i in range(p)})
    return HopfPairing(a, b, u)


def trivial_pairing(a: HopfAlgebraData, b: HopfAlgebraData) -> HopfPairing:
    """``u = counit_A (x) counit_B``."""
    return HopfPairing(a, b, kron(a.counit, b.counit))


def canonical_pairing(h: HopfAlgebraData) -> HopfPairing:
    """Evaluation pairing between ``h`` and its linear dual, ``u(a (x) xi) = xi(a)``."""
    d = dual_hopf(h)
    n = h.rank
    u = SparseMatrix(h.ring, 1, n * n, {(0, i * n + i): h.ring.one for i in range(n)})
    return HopfPairing(h, d, u)


# -- finite test algebras ------------------------------------------------------

def base_algebra(ring: BaseRing) -> AssocAlgebraData:
    """The base ring as a rank-1 algebra."""
    one = SparseMatrix.identity(ring, 1)
    return AssocAlgebraData(ring, ("1",), one, one)


def dual_numbers(ring: BaseRing) -> AssocAlgebraData:
    """``R[e]/(e^2)``."""
    mul = SparseMatrix(ring, 2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1})
    return AssocAlgebraData(ring, ("1", "e"), mul, SparseMatrix.basis_column(ring, 2, 0))


def split_algebra(ring: BaseRing, k: int = 2) -> AssocAlgebraData:
    """Functions on a ``k``-element set, ``R x ... x R``."""
    mul = SparseMatrix(ring, k, k * k, {(i, i * k + i): 1 for i in range(k)})
    unit = SparseMatrix(ring, k, 1, {(i, 0): 1 for i in range(k)})
    return AssocAlgebraData(ring, tuple(f"p{i}" for i in range(k)), mul, unit)


def truncated_polynomials(ring: BaseRing, n: int, var: str = "s") -> AssocAlgebraData:
    """``R[s]/(s^n)``."""
    mul = SparseMatrix(ring, n, n * n, {(a + b, a * n + b): 1
                                        for a in range(n) for b in range(n) if a + b < n})
    return AssocAlgebraData(ring, _monomial_labels(var, n), mul, SparseMatrix.basis_column(ring, n, 0))


def upper_triangular(ring: BaseRing, n: int) -> AssocAlgebraData:
    """Upper triangular ``n x n`` matrices on the matrix units ``E_ij``, ``i <= j``."""
    units = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {e: k for k, e in enumerate(units)}
    r = len(units)
    entries = {}
    for (i, j), a in pos.items():
        for (k, l), b in pos.items():
            if j == k:
                entries[(pos[(i, l)], a * r + b)] = 1
    mul = SparseMatrix(ring, r, r * r, entries)
    unit = SparseMatrix(ring, r, 1, {(pos[(i, i)], 0): 1 for i in range(n)})
    return AssocAlgebraData(ring, tuple(f"E{i}{j}" for i, j in units), mul, unit)
