"""Hopf pairings, smash products, and the swap isomorphism between them.

For Hopf algebras ``A``, ``B`` and a pairing ``u: A (x) B -> R`` the smash
product ``A #_u B`` lives on ``A (x) B`` (basis ``a_i # b_k`` at flat index
``i * rank(B) + k``) with product

    (a # b)(a' # b') = sum u(a'_(1) (x) b_(1)) a a'_(2) # b_(2) b'.

The swap map ``phi(a # b) = sum u(a_(1) (x) S b_(1)) S b_(2) # a_(2)``, with
``S`` the antipode of ``B``, identifies ``A #_u B`` with ``B #_{u.tau} A``.
Both constructions assume commutative Hopf algebras, which covers every
object in :mod:`cartier_kit.catalog`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (AssociativityFailure, IsoVerificationFailure,
                     NotAHopfAlgebra, NotAHopfPairing, RingMismatch, ShapeError)
from .exactlin import (SparseMatrix, kron, swap,
                       tensor_permutation_map)
from .exactlin.normal_forms import is_invertible
from .hopf import AssocAlgebraData, HopfAlgebraData, verify_hopf


@dataclass(frozen=True)
class HopfPairing:
    A: HopfAlgebraData
    B: HopfAlgebraData
    u: SparseMatrix

    def __post_init__(self):
        if self.A.ring != self.B.ring or self.u.ring != self.A.ring:
            raise RingMismatch("pairing data must share one ring")
        if self.u.shape != (1, self.A.rank * self.B.rank):
            raise ShapeError(f"u has shape {self.u.shape}, expected (1, {self.A.rank * self.B.rank})")

    @property
    def ring(self):
        return self.A.ring

    def value(self, i: int, k: int):
        """``u(a_i (x) b_k)``."""
        return self.u[0, i * self.B.rank + k]


@dataclass(frozen=True)
class PairingReport:
    product_A: bool   # u(aa' (x) b) = sum u(a (x) b_(1)) u(a' (x) b_(2))
    product_B: bool   # u(a (x) bb') = sum u(a_(1) (x) b) u(a_(2) (x) b')
    unit_A: bool      # u(1 (x) b) = counit_B(b)
    unit_B: bool      # u(a (x) 1) = counit_A(a)

    @property
    def ok(self) -> bool:
        return self.product_A and self.product_B and self.unit_A and self.unit_B

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)

    def failures(self) -> list[str]:
        return [k for k, v in self.__dict__.items() if not v]


def verify_hopf_pairing(p: HopfPairing) -> PairingReport:
    A, B, u = p.A, p.B, p.u
    ring, m, n = p.ring, A.rank, B.rank
    eye_a = SparseMatrix.identity(ring, m)
    eye_b = SparseMatrix.identity(ring, n)
    uu = kron(u, u)
    middle = tensor_permutation_map((m, m, n, n), (0, 2, 1, 3))  # A A B B -> A B A B

    lhs_a = u @ kron(A.mul, eye_b)
    rhs_a = uu @ kron(kron(eye_a, eye_a), B.comul).permute_rows(middle)
    lhs_b = u @ kron(eye_a, B.mul)
    rhs_b = uu @ kron(A.comul, kron(eye_b, eye_b)).permute_rows(middle)
    unit_a = u @ kron(A.unit, eye_b) == B.counit
    unit_b = u @ kron(eye_a, B.unit) == A.counit
    return PairingReport(lhs_a == rhs_a, lhs_b == rhs_b, unit_a, unit_b)


def mirror(p: HopfPairing) -> HopfPairing:
    """The same pairing seen as ``B (x) A -> R``, i.e. ``u . tau``."""
    return HopfPairing(p.B, p.A, p.u @ swap(p.ring, p.B.rank, p.A.rank))


def _columns(m: SparseMatrix) -> dict[int, dict[int, object]]:
    cols: dict[int, dict[int, object]] = {}
    for i, j, v in m.items():
        cols.setdefault(j, {})[i] = v
    return cols


def _smash_mul(p: HopfPairing) -> SparseMatrix:
    A, B = p.A, p.B
    ring = p.ring
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    m, n = A.rank, B.rank
    N = m * n
    mul_a, mul_b = _columns(A.mul), _columns(B.mul)
    # Sweedler terms: col j of comul lists (first, second, coeff)
    sw_a = {j: [(divmod(r, m), c) for r, c in col.items()] for j, col in _columns(A.comul).items()}
    sw_b = {k: [(divmod(r, n), c) for r, c in col.items()] for k, col in _columns(B.comul).items()}
    uvals = {j: v for _, j, v in p.u.items()}

    entries: dict[tuple[int, int], object] = {}
    for k in range(n):
        for (q, r), cb in sw_b.get(k, ()):
            for j in range(m):
                for (s, t), ca in sw_a.get(j, ()):
                    uv = uvals.get(s * n + q)
                    if uv is None:
                        continue
                    coef = mul(mul(ca, cb), uv)
                    if is_zero(coef):
                        continue
                    for i in range(m):
                        left = mul_a.get(i * m + t)
                        if not left:
                            continue
                        for l in range(n):
                            right = mul_b.get(r * n + l)
                            if not right:
                                continue
                            col = (i * n + k) * N + (j * n + l)
                            for x, va in left.items():
                                cx = mul(coef, va)
                                for y, vb in right.items():
                                    key = (x * n + y, col)
                                    val = mul(cx, vb)
                                    entries[key] = add(entries[key], val) if key in entries else val
    return SparseMatrix(ring, N, N * N, {k: v for k, v in entries.items() if not is_zero(v)})


def smash(p: HopfPairing, check: bool = True) -> AssocAlgebraData:
    """The smash product algebra ``A #_u B``.

    Raises NotAHopfAlgebra if either side fails the Hopf axioms,
    NotAHopfPairing unless all four pairing diagrams commute, and
    AssociativityFailure if the assembled product is not associative and
    unital (which valid commutative input never triggers).
    """
    if check:
        require_hopf(p.A, p.B)
        report = verify_hopf_pairing(p)
        if not report.ok:
            raise NotAHopfPairing("pairing diagrams fail: " + ", ".join(report.failures()))
    labels = tuple(f"{a}#{b}" for a in p.A.basis for b in p.B.basis)
    alg = AssocAlgebraData(p.ring, labels, _smash_mul(p), kron(p.A.unit, p.B.unit))
    if not alg.is_associative():
        raise AssociativityFailure("smash product is not associative")
    if not alg.is_unital():
        raise AssociativityFailure("smash product unit law fails")
    return alg


def _swap_matrix(p: HopfPairing) -> SparseMatrix:
    A, B = p.A, p.B
    ring = p.ring
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    m, n = A.rank, B.rank
    S = _columns(B.antipode)
    sw_a = {j: [(divmod(r, m), c) for r, c in col.items()] for j, col in _columns(A.comul).items()}
    sw_b = {k: [(divmod(r, n), c) for r, c in col.items()] for k, col in _columns(B.comul).items()}
    uvals = {j: v for _, j, v in p.u.items()}

    def u_with_antipode(c, q):
        # u(a_c (x) S b_q)
        acc = ring.zero
        for s, v in S.get(q, {}).items():
            uv = uvals.get(c * n + s)
            if uv is not None:
                acc = add(acc, mul(v, uv))
        return acc

    entries: dict[tuple[int, int], object] = {}
    for i in range(m):
        for k in range(n):
            col = i * n + k
            for (c, d), ca in sw_a.get(i, ()):
                for (q, r), cb in sw_b.get(k, ()):
                    w = u_with_antipode(c, q)
                    if is_zero(w):
                        continue
                    coef = mul(mul(ca, cb), w)
                    for out_b, sv in S.get(r, {}).items():
                        key = (out_b * m + d, col)
                        val = mul(coef, sv)
                        entries[key] = add(entries[key], val) if key in entries else val
    return SparseMatrix(ring, m * n, m * n, {k: v for k, v in entries.items() if not is_zero(v)})


def smash_swap_iso(p: HopfPairing) -> SparseMatrix:
    """Matrix of ``phi: A #_u B -> B #_{u.tau} A``, verified to be an algebra isomorphism."""
    report = verify_hopf_pairing(p)
    if not report.ok:
        raise NotAHopfPairing("pairing diagrams fail: " + ", ".join(report.failures()))
    phi = _swap_matrix(p)
    if not verify_algebra_iso(phi, smash(p, check=False), smash(mirror(p), check=False)):
        raise IsoVerificationFailure("phi is not an algebra isomorphism")
    return phi


def psi1_matrix(p: HopfPairing) -> SparseMatrix:
    """``a # b -> b # a``."""
    return swap(p.ring, p.A.rank, p.B.rank)


def psi2_matrix(p: HopfPairing) -> SparseMatrix:
    """``b # a -> a . S(b)`` computed inside ``B #_{u.tau} A``."""
    q = mirror(p)
    target = smash(q, check=False)
    ring, m, n = p.ring, p.A.rank, p.B.rank
    cols = []
    for w in range(n):
        sb = p.B.antipode @ SparseMatrix.basis_column(ring, n, w)
        right = kron(sb, p.A.unit)
        for d in range(m):
            left = kron(p.B.unit, SparseMatrix.basis_column(ring, m, d))
            cols.append(target.product(left, right))
    return SparseMatrix.hstack(cols)


def verify_algebra_iso(f: SparseMatrix, a1: AssocAlgebraData, a2: AssocAlgebraData) -> bool:
    """True iff ``f`` is invertible, multiplicative and unital."""
    if f.ring != a1.ring or a1.ring != a2.ring:
        raise RingMismatch("map and algebras must share a ring")
    if f.shape != (a2.rank, a1.rank):
        raise ShapeError(f"map shape {f.shape} does not match ranks {a1.rank} -> {a2.rank}")
    if not is_invertible(f):
        return False
    return f @ a1.mul == a2.mul @ kron(f, f) and f @ a1.unit == a2.unit


def is_antimultiplicative(f: SparseMatrix, a1: AssocAlgebraData, a2: AssocAlgebraData) -> bool:
    """``f(xy) == f(y) f(x)`` for all basis pairs."""
    tau = swap(f.ring, a2.rank, a2.rank)
    return f @ a1.mul == a2.mul @ tau @ kron(f, f)


def is_trivial_pairing(p: HopfPairing) -> bool:
    return p.u == kron(p.A.counit, p.B.counit)


def require_hopf(*hs: HopfAlgebraData) -> None:
    for h in hs:
        r = verify_hopf(h)
        if not r.is_hopf:
            raise NotAHopfAlgebra("fails: " + ", ".join(r.failures()))


__all__ = [
    "HopfPairing", "PairingReport", "verify_hopf_pairing", "mirror", "smash",
    "smash_swap_iso", "psi1_matrix", "psi2_matrix", "verify_algebra_iso",
    "is_antimultiplicative", "is_trivial_pairing",
]
