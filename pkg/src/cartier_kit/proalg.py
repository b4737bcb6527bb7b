"""Algebra quotients of a surjective pro-system carrying a stagewise product.

A presentation is a chain ``M_0 <- M_1 <- ... <- M_k`` of finite-dimensional
vector spaces with surjections ``phi_i: M_{i+1} -> M_i``, products
``mu_i: M_{i+1} (x) M_{i+1} -> M_i`` and units ``u_i in M_i``.  The product
only lands one stage down, so the stages need not be algebras; the largest
algebra quotient ``A_alpha`` of ``M_alpha`` compatible with the tower is

    A_alpha = M_alpha / mu3_{alpha, beta}(M_beta (x) ker(phi_{alpha beta}) (x) M_beta),

with ``beta = alpha + 2``.  Over a field every step is exact row reduction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (BracketingMismatch, InsufficientHeadroom,
                     InvalidPresentation, NotAField, RingMismatch, ShapeError)
from .exactlin import (BaseRing, SparseMatrix, kron, nullspace, rank,
                       reduce_modulo, rref, solve)
from .hopf import AssocAlgebraData


@dataclass(frozen=True)
class ProAlgebraPresentation:
    ring: BaseRing
    ranks: tuple[int, ...]
    transitions: tuple[SparseMatrix, ...]   # phi_i: M_{i+1} -> M_i
    mults: tuple[SparseMatrix, ...]         # mu_i: M_{i+1} (x) M_{i+1} -> M_i
    units: tuple[SparseMatrix, ...]         # u_i: column of length r_i

    def __post_init__(self):
        for name in ("ranks", "transitions", "mults", "units"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        ring, r = self.ring, self.ranks
        if not ring.is_field:
            raise NotAField(f"pro-algebra quotients need a field, got {ring}")
        k = len(r) - 1
        if k < 0:
            raise ShapeError("a presentation needs at least one stage")
        if len(self.transitions) != k or len(self.mults) != k or len(self.units) != k + 1:
            raise ShapeError(f"{k + 1} stages need {k} transitions, {k} products and {k + 1} units")
        for i in range(k):
            self._shape(f"transition {i}", self.transitions[i], (r[i], r[i + 1]))
            self._shape(f"product {i}", self.mults[i], (r[i], r[i + 1] ** 2))
        for i in range(k + 1):
            self._shape(f"unit {i}", self.units[i], (r[i], 1))

        for i, phi in enumerate(self.transitions):
            if rank(phi) != r[i]:
                raise InvalidPresentation(f"transition {i} is not surjective")
            if phi @ self.units[i + 1] != self.units[i]:
                raise InvalidPresentation(f"transition {i} does not preserve units")
            eye = SparseMatrix.identity(ring, r[i + 1])
            mu = self.mults[i]
            if mu @ kron(self.units[i + 1], eye) != phi or mu @ kron(eye, self.units[i + 1]) != phi:
                raise InvalidPresentation(f"unit law fails for product {i}")
        for i in range(k - 1):
            phi, phi_up = self.transitions[i], self.transitions[i + 1]
            if phi @ self.mults[i + 1] != self.mults[i] @ kron(phi_up, phi_up):
                raise InvalidPresentation(f"products {i} and {i + 1} are not compatible")

    def _shape(self, name, m, shape):
        if m.ring != self.ring:
            raise RingMismatch(f"{name} is over {m.ring}, expected {self.ring}")
        if m.shape != shape:
            raise ShapeError(f"{name} has shape {m.shape}, expected {shape}")

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def phi(self, alpha: int, beta: int) -> SparseMatrix:
        """Composite surjection ``M_beta -> M_alpha``."""
        if not 0 <= alpha <= beta <= self.top:
            raise ShapeError(f"no map M_{beta} -> M_{alpha}")
        m = SparseMatrix.identity(self.ring, self.ranks[beta])
        for i in range(beta - 1, alpha - 1, -1):
            m = self.transitions[i] @ m
        return m

    def mu(self, alpha: int, beta: int) -> SparseMatrix:
        """``M_beta (x) M_beta -> M_alpha`` for ``beta > alpha``."""
        if beta <= alpha:
            raise InsufficientHeadroom(f"a product into M_{alpha} needs beta > alpha, got {beta}")
        down = self.phi(alpha + 1, beta)
        return self.mults[alpha] @ kron(down, down)


def mu3(p: ProAlgebraPresentation, alpha: int, beta: int) -> SparseMatrix:
    """Triple product ``M_beta^(x)3 -> M_alpha``; both bracketings must agree."""
    if beta < alpha + 2:
        raise InsufficientHeadroom(f"triple product needs beta >= alpha + 2, got alpha={alpha}, beta={beta}")
    if beta > p.top:
        raise InsufficientHeadroom(f"stage {beta} is past the top stage {p.top}")
    inner = p.mu(alpha + 1, beta)
    down = p.phi(alpha + 1, beta)
    left = p.mults[alpha] @ kron(inner, down)
    right = p.mults[alpha] @ kron(down, inner)
    if left != right:
        raise BracketingMismatch(f"left and right triple products differ at alpha={alpha}, beta={beta}")
    return left


def quotient_subspace(p: ProAlgebraPresentation, alpha: int, beta: int | None = None) -> SparseMatrix:
    """Row-reduced basis (as rows) of ``mu3(M_beta (x) ker (x) M_beta)`` inside ``M_alpha``."""
    beta = alpha + 2 if beta is None else beta
    m3 = mu3(p, alpha, beta)
    ring, rb = p.ring, p.ranks[beta]
    ker = nullspace(p.phi(alpha, beta))
    gens = []
    for c in range(ker.cols):
        kvec = ker.submatrix(range(ker.rows), [c])
        for i in range(rb):
            left = kron(SparseMatrix.basis_column(ring, rb, i), kvec)
            for j in range(rb):
                gens.append(m3 @ kron(left, SparseMatrix.basis_column(ring, rb, j)))
    if not gens:
        return SparseMatrix.zeros(ring, 0, p.ranks[alpha])
    return rref(SparseMatrix.hstack(gens).T)[0]


@dataclass(frozen=True)
class StageQuotient:
    alpha: int
    beta: int
    quotient_rank: int
    projection: SparseMatrix      # M_alpha -> A_alpha
    induced_mul: SparseMatrix     # A_alpha (x) A_alpha -> A_alpha
    induced_unit: SparseMatrix
    subspace: SparseMatrix        # rows span the kernel of the projection
    well_defined: bool            # two lift choices gave the same product

    @property
    def algebra(self) -> AssocAlgebraData:
        labels = tuple(f"a{i}" for i in range(self.quotient_rank))
        return AssocAlgebraData(self.projection.ring, labels, self.induced_mul, self.induced_unit)


def _projection(ring, n: int, form: SparseMatrix, pivots: list[int]) -> tuple[SparseMatrix, list[int]]:
    free = [j for j in range(n) if j not in set(pivots)]
    cols = []
    for j in range(n):
        r = reduce_modulo(form, pivots, SparseMatrix.basis_column(ring, n, j))
        cols.append(r.submatrix(free, [0]))
    if not cols:
        return SparseMatrix.zeros(ring, 0, 0), free
    return SparseMatrix.hstack(cols), free


def stage_quotient(p: ProAlgebraPresentation, alpha: int, beta: int | None = None) -> StageQuotient:
    beta = alpha + 2 if beta is None else beta
    ring = p.ring
    n = p.ranks[alpha]
    form, pivots = rref(quotient_subspace(p, alpha, beta))
    proj, free = _projection(ring, n, form, pivots)
    q = len(free)
    phi = p.phi(alpha, beta)
    ker = nullspace(phi)
    shift = SparseMatrix.hstack([ker.submatrix(range(ker.rows), [c]) for c in range(ker.cols)] or
                                [SparseMatrix.zeros(ring, p.ranks[beta], 1)])
    shift = shift @ SparseMatrix(ring, shift.cols, 1, {(c, 0): ring.one for c in range(shift.cols)})
    lifts, alt = [], []
    for j in free:
        x = solve(phi, SparseMatrix.basis_column(ring, n, j))
        lifts.append(x)
        alt.append(x + shift)
    mu = p.mu(alpha, beta)

    def table(vs):
        cols = [proj @ (mu @ kron(a, b)) for a in vs for b in vs]
        return SparseMatrix.hstack(cols) if cols else SparseMatrix.zeros(ring, q, 0)

    induced = table(lifts)
    return StageQuotient(alpha, beta, q, proj, induced, proj @ p.units[alpha], form,
                         induced == table(alt))


def stage_quotients(p: ProAlgebraPresentation) -> list[StageQuotient]:
    """``A_alpha`` for every stage with two stages of headroom above it."""
    if p.top < 2:
        raise InsufficientHeadroom(f"need at least 3 stages, got {p.top + 1}")
    return [stage_quotient(p, a) for a in range(p.top - 1)]


def factorization_report(p: ProAlgebraPresentation) -> dict[int, bool]:
    """For each ``alpha`` with ``beta = alpha + 2`` and ``beta + 2`` in range:
    whether ``phi_{alpha beta}`` kills the kernel of ``M_beta -> A_beta``."""
    out = {}
    for alpha in range(p.top - 3):
        beta = alpha + 2
        sub = quotient_subspace(p, beta)
        out[alpha] = (p.phi(alpha, beta) @ sub.T).is_zero()
    return out


def verify_factorization(p: ProAlgebraPresentation) -> bool:
    """``M_beta -> M_alpha`` factors through ``A_beta`` for every checkable ``alpha``.

    Presentations with fewer than five stages have no such ``alpha`` and pass.
    """
    return all(factorization_report(p).values())


# -- presentations built from a filtered algebra ----------------------------------

def presentation_from_filtration(a: AssocAlgebraData, subspaces: list[SparseMatrix]) -> ProAlgebraPresentation:
    """Stages ``M_i = A / V_i`` for subspaces ``V_0 ⊇ V_1 ⊇ ... ⊇ V_k`` of ``A`` (rows span ``V_i``).

    Requires ``A V_{i+1} + V_{i+1} A ⊆ V_i`` so the product of ``A`` descends
    to ``M_{i+1} (x) M_{i+1} -> M_i``.  Each ``M_i`` uses the non-pivot
    coordinates of the reduced ``V_i`` as its basis.
    """
    ring, n = a.ring, a.rank
    projs, sections = [], []
    for v in subspaces:
        form, pivots = rref(v) if v.rows else (SparseMatrix.zeros(ring, 0, n), [])
        proj, free = _projection(ring, n, form, pivots)
        projs.append(proj)
        sections.append(SparseMatrix(ring, n, len(free), {(j, c): ring.one for c, j in enumerate(free)}))
    k = len(subspaces) - 1
    trans = [projs[i] @ sections[i + 1] for i in range(k)]
    mults = [projs[i] @ a.mul @ kron(sections[i + 1], sections[i + 1]) for i in range(k)]
    units = [pr @ a.unit for pr in projs]
    return ProAlgebraPresentation(ring, [pr.rows for pr in projs], trans, mults, units)


__all__ = [
    "ProAlgebraPresentation", "StageQuotient", "mu3", "quotient_subspace", "stage_quotient",
    "stage_quotients", "factorization_report", "verify_factorization",
    "presentation_from_filtration",
]
