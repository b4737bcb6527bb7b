"""The Cartier pairing at finite rank.

For a finite free Hopf algebra ``A`` of rank ``n`` the unit element
``unit_A`` of ``A^v (x) A`` is the vectorized ``n x n`` identity.  It is
grouplike for the Hopf structures on both tensor factors, and
``f -> (1 (x) f) unit_A`` carries algebra maps ``A -> B`` onto the grouplike
elements of ``A^v (x) B``.  Everything here makes those statements exact
matrix identities or finite enumerations.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._search import SymMatrix, solve_system
from .errors import InfiniteRing, NotAHopfAlgebra, RingMismatch, ShapeError
from .exactlin import SparseMatrix, identity_vector, kron_apply, tensor_permutation_map
from .hopf import AssocAlgebraData, HopfAlgebraData, dual_hopf, verify_hopf


@dataclass(frozen=True)
class CartierPairing:
    source: HopfAlgebraData
    dual: HopfAlgebraData
    unit_vec: SparseMatrix

    @property
    def rank(self) -> int:
        return self.source.rank


def cartier_unit(h: HopfAlgebraData) -> CartierPairing:
    report = verify_hopf(h)
    if not report.is_hopf:
        raise NotAHopfAlgebra("fails: " + ", ".join(report.failures()))
    return CartierPairing(h, dual_hopf(h), identity_vector(h.ring, h.rank))


@dataclass(frozen=True)
class CartierReport:
    comul_eq: bool     # (1 (x) Delta) unit_A == (Delta^v (x) 1) unit_{A(x)A}
    unit_eq: bool      # (1 (x) eta) unit_R == (eta^v (x) 1) unit_A
    mul_eq: bool       # (1 (x) mul) unit_{A(x)A} == (mul^v (x) 1) unit_A
    counit_eq: bool    # (1 (x) eps) unit_A == (eps^v (x) 1) unit_R

    @property
    def ok(self) -> bool:
        return self.comul_eq and self.unit_eq and self.mul_eq and self.counit_eq

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


def verify_cartier_equations(p: CartierPairing) -> CartierReport:
    """The four grouplike identities satisfied by the unit element."""
    A, D = p.source, p.dual
    ring, n = A.ring, A.rank
    if D.rank != n or D.ring != ring:
        raise ShapeError("dual must have the rank and ring of the source")
    if p.unit_vec.shape != (n * n, 1):
        raise ShapeError(f"unit_vec has shape {p.unit_vec.shape}, expected ({n * n}, 1)")
    u = p.unit_vec
    eye_n = SparseMatrix.identity(ring, n)
    eye_nn = SparseMatrix.identity(ring, n * n)
    one = SparseMatrix.identity(ring, 1)
    unit_aa = identity_vector(ring, n * n)
    unit_r = identity_vector(ring, 1)

    comul_eq = kron_apply(eye_n, A.comul, u) == kron_apply(D.mul, eye_nn, unit_aa)
    unit_eq = kron_apply(one, A.unit, unit_r) == kron_apply(D.counit, eye_n, u)
    mul_eq = kron_apply(eye_nn, A.mul, unit_aa) == kron_apply(D.comul, eye_n, u)
    counit_eq = kron_apply(eye_n, A.counit, u) == kron_apply(D.unit, one, unit_r)
    return CartierReport(comul_eq, unit_eq, mul_eq, counit_eq)


def _modulus(h: HopfAlgebraData, b: AssocAlgebraData) -> int:
    if h.ring != b.ring:
        raise RingMismatch(f"{h.ring} vs {b.ring}")
    if not h.ring.is_finite:
        raise InfiniteRing(f"enumeration needs a finite ring, got {h.ring}")
    return h.ring.modulus


def _from_flat(ring, rows: int, cols: int, values) -> SparseMatrix:
    return SparseMatrix(ring, rows, cols, {divmod(i, cols): v for i, v in enumerate(values) if v})


def points(h: HopfAlgebraData, b: AssocAlgebraData) -> list[SparseMatrix]:
    """Algebra maps ``h -> b`` as ``rank_b x rank_h`` matrices, ordered by row-major entries."""
    mod = _modulus(h, b)
    n, m = h.rank, b.rank
    f = SymMatrix.unknowns(mod, m, n, lambda k, i: k * n + i)
    residuals = [
        f @ SymMatrix.constant(h.mul) - SymMatrix.constant(b.mul) @ f.kron(f),
        f @ SymMatrix.constant(h.unit) - SymMatrix.constant(b.unit),
    ]
    eqs = [q for r in residuals for q in r.polys()]
    # image of x_i is fixed before x_{i+1}, so product constraints prune early
    order = [k * n + i for i in range(n) for k in range(m)]
    return [_from_flat(h.ring, m, n, sol) for sol in solve_system(mod, m * n, eqs, order)]


def base_change_grouplikes(h: HopfAlgebraData, b: AssocAlgebraData) -> list[SparseMatrix]:
    """Grouplikes of the ``b``-coalgebra ``dual(h) (x) b``, as columns of length ``rank_h * rank_b``.

    ``g`` is grouplike when ``(Delta^v (x) 1) g`` equals ``g (x)_b g`` and
    ``(eps^v (x) 1) g`` equals the unit of ``b``.
    """
    mod = _modulus(h, b)
    d = dual_hopf(h)
    n, m = h.rank, b.rank
    g = SymMatrix.unknowns(mod, n * m, 1, lambda r, _: r)
    eye_m = SparseMatrix.identity(h.ring, m)
    # (i, k, j, l) -> (i, j, k, l) before multiplying the b-factors
    perm = tensor_permutation_map((n, m, n, m), (0, 2, 1, 3))
    gg = g.kron(g).permute_rows(perm)
    lhs = SymMatrix.constant(d.comul.kron(eye_m)) @ g
    rhs = SymMatrix.constant(SparseMatrix.identity(h.ring, n * n).kron(b.mul)) @ gg
    residuals = [
        lhs - rhs,
        SymMatrix.constant(d.counit.kron(eye_m)) @ g - SymMatrix.constant(b.unit),
    ]
    eqs = [q for r in residuals for q in r.polys()]
    return [_from_flat(h.ring, n * m, 1, sol) for sol in solve_system(mod, n * m, eqs)]


def point_to_grouplike(p: CartierPairing, f: SparseMatrix) -> SparseMatrix:
    """``(1 (x) f) unit_A``."""
    return kron_apply(SparseMatrix.identity(p.source.ring, p.rank), f, p.unit_vec)


@dataclass(frozen=True)
class BijectionReport:
    points_count: int
    grouplikes_count: int
    bijection_verified: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def duality_bijection(h: HopfAlgebraData, b: AssocAlgebraData) -> BijectionReport:
    pts = points(h, b)
    gls = base_change_grouplikes(h, b)
    p = cartier_unit(h)
    images = [point_to_grouplike(p, f) for f in pts]
    ok = len(set(images)) == len(pts) and set(images) == set(gls)
    return BijectionReport(len(pts), len(gls), ok)


__all__ = [
    "CartierPairing", "CartierReport", "BijectionReport", "cartier_unit",
    "verify_cartier_equations", "points", "base_change_grouplikes",
    "point_to_grouplike", "duality_bijection",
]
