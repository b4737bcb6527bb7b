"""Finite free Hopf algebras as structure-constant matrices.

A Hopf algebra of rank ``n`` is stored as five matrices over its base
ring, all using the flat tensor index of :mod:`cartier_kit.exactlin`:

* ``mul``      ``n x n^2``   product
* ``unit``     ``n x 1``     unit
* ``comul``    ``n^2 x n``   coproduct
* ``counit``   ``1 x n``     counit
* ``antipode`` ``n x n``     antipode

Every axiom becomes an exact matrix identity, which is what
:func:`verify_hopf` checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._search import SymMatrix, solve_system
from .errors import InfiniteRing, NotAHopfAlgebra, RingMismatch, ShapeError
from .exactlin import (BaseRing, SparseMatrix, kron, swap,
                       tensor_permutation_map)
from .exactlin.normal_forms import is_invertible


def _check_shape(name: str, m: SparseMatrix, ring: BaseRing, shape: tuple[int, int]) -> None:
    if not isinstance(m, SparseMatrix):
        raise ShapeError(f"{name} must be a SparseMatrix")
    if m.ring != ring:
        raise RingMismatch(f"{name} is over {m.ring}, expected {ring}")
    if m.shape != shape:
        raise ShapeError(f"{name} has shape {m.shape}, expected {shape}")


def dual_label(label: str) -> str:
    """Label of the dual basis vector; applying it twice returns the label."""
    return label[:-1] if label.endswith("*") else label + "*"


@dataclass(frozen=True)
class AssocAlgebraData:
    """A finite free associative unital algebra (product and unit only)."""

    ring: BaseRing
    basis: tuple[str, ...]
    mul: SparseMatrix
    unit: SparseMatrix

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        n = len(self.basis)
        _check_shape("mul", self.mul, self.ring, (n, n * n))
        _check_shape("unit", self.unit, self.ring, (n, 1))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def product(self, x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
        """Product of two elements given as column vectors."""
        return self.mul @ kron(x, y)

    def basis_vector(self, i: int) -> SparseMatrix:
        return SparseMatrix.basis_column(self.ring, self.rank, i)

    def is_associative(self) -> bool:
        eye = SparseMatrix.identity(self.ring, self.rank)
        return self.mul @ kron(self.mul, eye) == self.mul @ kron(eye, self.mul)

    def is_unital(self) -> bool:
        eye = SparseMatrix.identity(self.ring, self.rank)
        return (self.mul @ kron(self.unit, eye) == eye
                and self.mul @ kron(eye, self.unit) == eye)

    def is_commutative(self) -> bool:
        return self.mul @ swap(self.ring, self.rank, self.rank) == self.mul


def tensor_algebra(a: AssocAlgebraData, b: AssocAlgebraData) -> AssocAlgebraData:
    """``a (x) b`` with componentwise product."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    m, n = a.rank, b.rank
    # (a (x) b) (x) (a (x) b) -> a (x) a (x) b (x) b, then mul_a (x) mul_b
    mid = tensor_permutation_map((m, n, m, n), (0, 2, 1, 3))
    mul = kron(a.mul, b.mul).permute_cols(_inverse_perm(mid))
    labels = tuple(f"{x}(x){y}" for x in a.basis for y in b.basis)
    return AssocAlgebraData(a.ring, labels, mul, kron(a.unit, b.unit))


def _inverse_perm(p: list[int]) -> list[int]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


@dataclass(frozen=True)
class HopfAlgebraData:
    ring: BaseRing
    basis: tuple[str, ...]
    mul: SparseMatrix
    unit: SparseMatrix
    comul: SparseMatrix
    counit: SparseMatrix
    antipode: SparseMatrix

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        n = len(self.basis)
        if n == 0:
            raise ShapeError("a Hopf algebra needs a nonempty basis")
        _check_shape("mul", self.mul, self.ring, (n, n * n))
        _check_shape("unit", self.unit, self.ring, (n, 1))
        _check_shape("comul", self.comul, self.ring, (n * n, n))
        _check_shape("counit", self.counit, self.ring, (1, n))
        _check_shape("antipode", self.antipode, self.ring, (n, n))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def algebra(self) -> AssocAlgebraData:
        return AssocAlgebraData(self.ring, self.basis, self.mul, self.unit)

    def identity(self) -> SparseMatrix:
        return SparseMatrix.identity(self.ring, self.rank)

    def replace(self, **changes) -> "HopfAlgebraData":
        fields = dict(ring=self.ring, basis=self.basis, mul=self.mul, unit=self.unit,
                      comul=self.comul, counit=self.counit, antipode=self.antipode)
        fields.update(changes)
        return HopfAlgebraData(**fields)


@dataclass(frozen=True)
class HopfReport:
    assoc: bool
    unit_law: bool
    coassoc: bool
    counit_law: bool
    bialgebra_compat: bool
    antipode_law: bool
    commutative: bool
    cocommutative: bool

    @property
    def is_hopf(self) -> bool:
        """All axioms hold; commutativity flags are descriptive only."""
        return all((self.assoc, self.unit_law, self.coassoc, self.counit_law,
                    self.bialgebra_compat, self.antipode_law))

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)

    def failures(self) -> list[str]:
        axioms = ("assoc", "unit_law", "coassoc", "counit_law", "bialgebra_compat", "antipode_law")
        return [k for k in axioms if not getattr(self, k)]


def _swap_rows_square(m: SparseMatrix, n: int) -> SparseMatrix:
    # tau . m  for m with n^2 rows
    return m.permute_rows(tensor_permutation_map((n, n), (1, 0)))


def verify_hopf(h: HopfAlgebraData) -> HopfReport:
    """Check every Hopf axiom as an exact matrix identity."""
    ring, n = h.ring, h.rank
    eye = h.identity()
    one = SparseMatrix.identity(ring, 1)
    mul, unit, comul, counit, s = h.mul, h.unit, h.comul, h.counit, h.antipode

    assoc = mul @ kron(mul, eye) == mul @ kron(eye, mul)
    unit_law = mul @ kron(unit, eye) == eye and mul @ kron(eye, unit) == eye
    coassoc = kron(comul, eye) @ comul == kron(eye, comul) @ comul
    counit_law = kron(counit, eye) @ comul == eye and kron(eye, counit) @ comul == eye

    # Delta . mul == (mul (x) mul) . (1 (x) tau (x) 1) . (Delta (x) Delta)
    middle = tensor_permutation_map((n, n, n, n), (0, 2, 1, 3))
    rhs = kron(mul, mul) @ kron(comul, comul).permute_rows(middle)
    compat = (comul @ mul == rhs
              and counit @ mul == kron(counit, counit)
              and comul @ unit == kron(unit, unit)
              and counit @ unit == one)

    eta_eps = unit @ counit
    antipode_law = (mul @ kron(s, eye) @ comul == eta_eps
                    and mul @ kron(eye, s) @ comul == eta_eps)

    commutative = mul @ swap(ring, n, n) == mul
    cocommutative = _swap_rows_square(comul, n) == comul
    return HopfReport(assoc, unit_law, coassoc, counit_law, compat, antipode_law,
                      commutative, cocommutative)


def dual_hopf(h: HopfAlgebraData) -> HopfAlgebraData:
    """Linear dual Hopf algebra on the dual basis: every structure map transposes."""
    report = verify_hopf(h)
    if not report.is_hopf:
        raise NotAHopfAlgebra("input fails: " + ", ".join(report.failures()))
    return _transpose_all(h)


def _transpose_all(h: HopfAlgebraData) -> HopfAlgebraData:
    return HopfAlgebraData(
        ring=h.ring,
        basis=tuple(dual_label(b) for b in h.basis),
        mul=h.comul.T,
        unit=h.counit.T,
        comul=h.mul.T,
        counit=h.unit.T,
        antipode=h.antipode.T,
    )


def _as_column(h: HopfAlgebraData, g) -> SparseMatrix:
    if isinstance(g, SparseMatrix):
        if g.shape != (h.rank, 1):
            raise ShapeError(f"vector has shape {g.shape}, expected ({h.rank}, 1)")
        return g
    g = list(g)
    if len(g) != h.rank:
        raise ShapeError(f"vector has length {len(g)}, expected {h.rank}")
    return SparseMatrix.column(h.ring, g)


def is_grouplike(h: HopfAlgebraData, g) -> bool:
    """``Delta g == g (x) g`` and ``epsilon g == 1``."""
    v = _as_column(h, g)
    return h.comul @ v == kron(v, v) and h.counit @ v == SparseMatrix.identity(h.ring, 1)


def grouplikes(h: HopfAlgebraData) -> list[tuple]:
    """All grouplike vectors of ``h`` over a finite ring, in lexicographic order.

    The search is exhaustive over ``Z/n``-valued coordinate vectors; it prunes
    a branch as soon as one coordinate of ``Delta g - g (x) g`` or of
    ``epsilon g - 1`` is fully determined and nonzero.
    """
    if not h.ring.is_finite:
        raise InfiniteRing(f"grouplike enumeration needs a finite ring, got {h.ring}")
    n = h.ring.modulus
    g = SymMatrix.unknowns(n, h.rank, 1, lambda i, j: i)
    residuals = [
        SymMatrix.constant(h.comul) @ g - g.kron(g),
        SymMatrix.constant(h.counit) @ g - SymMatrix.constant(SparseMatrix.identity(h.ring, 1)),
    ]
    eqs = [p for r in residuals for p in r.polys()]
    return solve_system(n, h.rank, eqs)


def hopf_iso_check(h1: HopfAlgebraData, h2: HopfAlgebraData, f: SparseMatrix) -> bool:
    """True iff ``f`` is an invertible map intertwining all five structure maps."""
    if h1.ring != h2.ring or f.ring != h1.ring:
        raise RingMismatch("Hopf algebras and map must share a ring")
    if h1.rank != h2.rank or f.shape != (h2.rank, h1.rank):
        raise ShapeError(f"map shape {f.shape} incompatible with ranks {h1.rank}, {h2.rank}")
    if not is_invertible(f):
        return False
    ff = kron(f, f)
    return (f @ h1.mul == h2.mul @ ff
            and f @ h1.unit == h2.unit
            and ff @ h1.comul == h2.comul @ f
            and h2.counit @ f == h1.counit
            and f @ h1.antipode == h2.antipode @ f)
