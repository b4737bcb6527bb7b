"""Immutable sparse matrices over a :class:`BaseRing`.

Tensor conventions used everywhere in the package: the basis vector
``e_i (x) e_j`` of ``F (x) G`` has flat index ``i * rank(G) + j``, and
``kron`` follows the same rule, so ``kron(a, b) @ kron(x, y) ==
kron(a @ x, b @ y)`` holds on the nose.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from ..errors import DimensionMismatch, RingMismatch
from .rings import BaseRing


class SparseMatrix:
    """A ``rows x cols`` matrix storing only nonzero canonical entries.

    Values are raw ring elements (see :mod:`cartier_kit.exactlin.rings`).
    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("ring", "rows", "cols", "_data", "_hash")

    def __init__(self, ring: BaseRing, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative shape {rows}x{cols}")
        data: dict[int, dict[int, object]] = {}
        if entries:
            items = entries.items() if hasattr(entries, "items") else entries
            for key, v in items:
                i, j = key
                if not (0 <= i < rows and 0 <= j < cols):
                    raise DimensionMismatch(f"entry ({i}, {j}) outside {rows}x{cols}")
                v = ring.coerce(v)
                if ring.is_zero(v):
                    data.get(i, {}).pop(j, None)
                    continue
                data.setdefault(i, {})[j] = v
            data = {i: r for i, r in data.items() if r}
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def _wrap(cls, ring, rows, cols, data) -> "SparseMatrix":
        # data must already be canonical with no zero entries or empty rows
        m = cls.__new__(cls)
        m.ring, m.rows, m.cols, m._data, m._hash = ring, rows, cols, data, None
        return m

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, ring: BaseRing, rows: int, cols: int) -> "SparseMatrix":
        return cls._wrap(ring, rows, cols, {})

    @classmethod
    def identity(cls, ring: BaseRing, n: int) -> "SparseMatrix":
        one = ring.one
        return cls._wrap(ring, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_dense(cls, ring: BaseRing, rows: Sequence[Sequence], cols: int | None = None) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged dense matrix")
        return cls(ring, len(rows), cols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    @classmethod
    def column(cls, ring: BaseRing, values: Iterable) -> "SparseMatrix":
        values = list(values)
        return cls(ring, len(values), 1, {(i, 0): v for i, v in enumerate(values)})

    @classmethod
    def row_vector(cls, ring: BaseRing, values: Iterable) -> "SparseMatrix":
        values = list(values)
        return cls(ring, 1, len(values), {(0, j): v for j, v in enumerate(values)})

    @classmethod
    def basis_column(cls, ring: BaseRing, n: int, i: int) -> "SparseMatrix":
        return cls._wrap(ring, n, 1, {i: {0: ring.one}})

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def __getitem__(self, key):
        i, j = key
        return self._data.get(i, {}).get(j, self.ring.zero)

    def row(self, i: int) -> dict:
        """Read-only view of the nonzero entries of row ``i``."""
        return self._data.get(i, {})

    def nonzero_rows(self) -> list[int]:
        return sorted(self._data)

    def items(self) -> Iterator[tuple[int, int, object]]:
        for i in sorted(self._data):
            r = self._data[i]
            for j in sorted(r):
                yield i, j, r[j]

    def to_dense(self) -> list[list]:
        z = self.ring.zero
        out = [[z] * self.cols for _ in range(self.rows)]
        for i, j, v in self.items():
            out[i][j] = v
        return out

    def as_vector(self) -> tuple:
        """Entries of an ``n x 1`` matrix as a tuple."""
        if self.cols != 1:
            raise DimensionMismatch(f"not a column vector: {self.rows}x{self.cols}")
        z = self.ring.zero
        return tuple(self._data.get(i, {}).get(0, z) for i in range(self.rows))

    def column_vector(self, j: int) -> tuple:
        z = self.ring.zero
        return tuple(self._data.get(i, {}).get(j, z) for i in range(self.rows))

    def is_zero(self) -> bool:
        return not self._data

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self._data == other._data)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, tuple(self.items())))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = [[self.ring.pretty(v) for v in r] for r in self.to_dense()]
            return f"SparseMatrix({self.ring}, {body})"
        return f"SparseMatrix({self.ring}, {self.rows}x{self.cols}, nnz={self.nnz})"

    # -- arithmetic ------------------------------------------------------

    def _same_ring(self, other: "SparseMatrix") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._same_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        ring = self.ring
        add, is_zero = ring.add, ring.is_zero
        data = {i: dict(r) for i, r in self._data.items()}
        for i, r in other._data.items():
            row = data.setdefault(i, {})
            for j, v in r.items():
                s = add(row[j], v) if j in row else v
                if is_zero(s):
                    row.pop(j, None)
                else:
                    row[j] = s
            if not row:
                del data[i]
        return SparseMatrix._wrap(ring, self.rows, self.cols, data)

    def __neg__(self) -> "SparseMatrix":
        neg = self.ring.neg
        data = {i: {j: neg(v) for j, v in r.items()} for i, r in self._data.items()}
        return SparseMatrix._wrap(self.ring, self.rows, self.cols, data)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        ring = self.ring
        c = ring.coerce(c)
        mul, is_zero = ring.mul, ring.is_zero
        data = {}
        for i, r in self._data.items():
            row = {}
            for j, v in r.items():
                p = mul(c, v)
                if not is_zero(p):
                    row[j] = p
            if row:
                data[i] = row
        return SparseMatrix._wrap(ring, self.rows, self.cols, data)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        return mat_mul(self, other)

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def transpose(self) -> "SparseMatrix":
        data: dict[int, dict[int, object]] = {}
        for i, r in self._data.items():
            for j, v in r.items():
                data.setdefault(j, {})[i] = v
        return SparseMatrix._wrap(self.ring, self.cols, self.rows, data)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        return kron(self, other)

    # -- structural ------------------------------------------------------

    def permute_rows(self, perm: Sequence[int]) -> "SparseMatrix":
        """Row ``i`` of ``self`` becomes row ``perm[i]`` of the result."""
        data = {perm[i]: dict(r) for i, r in self._data.items()}
        return SparseMatrix._wrap(self.ring, self.rows, self.cols, data)

    def permute_cols(self, perm: Sequence[int]) -> "SparseMatrix":
        """Column ``j`` of ``self`` becomes column ``perm[j]`` of the result."""
        data = {i: {perm[j]: v for j, v in r.items()} for i, r in self._data.items()}
        return SparseMatrix._wrap(self.ring, self.rows, self.cols, data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        col_pos = {c: k for k, c in enumerate(cols)}
        data = {}
        for a, i in enumerate(rows):
            r = self._data.get(i)
            if not r:
                continue
            row = {col_pos[j]: v for j, v in r.items() if j in col_pos}
            if row:
                data[a] = row
        return SparseMatrix._wrap(self.ring, len(rows), len(cols), data)

    @staticmethod
    def hstack(blocks: Sequence["SparseMatrix"]) -> "SparseMatrix":
        ring, rows = blocks[0].ring, blocks[0].rows
        data: dict[int, dict[int, object]] = {}
        off = 0
        for b in blocks:
            b._same_ring(blocks[0])
            if b.rows != rows:
                raise DimensionMismatch("hstack row mismatch")
            for i, r in b._data.items():
                row = data.setdefault(i, {})
                for j, v in r.items():
                    row[off + j] = v
            off += b.cols
        return SparseMatrix._wrap(ring, rows, off, data)

    @staticmethod
    def vstack(blocks: Sequence["SparseMatrix"]) -> "SparseMatrix":
        ring, cols = blocks[0].ring, blocks[0].cols
        data: dict[int, dict[int, object]] = {}
        off = 0
        for b in blocks:
            b._same_ring(blocks[0])
            if b.cols != cols:
                raise DimensionMismatch("vstack column mismatch")
            for i, r in b._data.items():
                data[off + i] = dict(r)
            off += b.rows
        return SparseMatrix._wrap(ring, off, cols, data)


def mat_mul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Exact product ``a @ b``."""
    a._same_ring(b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    ring = a.ring
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    bdata = b._data
    data = {}
    for i, ra in a._data.items():
        acc: dict[int, object] = {}
        for k, x in ra.items():
            rb = bdata.get(k)
            if not rb:
                continue
            for j, y in rb.items():
                p = mul(x, y)
                acc[j] = add(acc[j], p) if j in acc else p
        row = {j: v for j, v in acc.items() if not is_zero(v)}
        if row:
            data[i] = row
    return SparseMatrix._wrap(ring, a.rows, b.cols, data)


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Kronecker product; row ``i*b.rows + k``, column ``j*b.cols + l``."""
    a._same_ring(b)
    ring = a.ring
    mul, is_zero = ring.mul, ring.is_zero
    br, bc = b.rows, b.cols
    data = {}
    for i, ra in a._data.items():
        for k, rb in b._data.items():
            row = {}
            for j, x in ra.items():
                base = j * bc
                for l, y in rb.items():
                    p = mul(x, y)
                    if not is_zero(p):
                        row[base + l] = p
            if row:
                data[i * br + k] = row
    return SparseMatrix._wrap(ring, a.rows * br, a.cols * bc, data)


def kron_all(*ms: SparseMatrix) -> SparseMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = kron(out, m)
    return out


def kron_apply(left: SparseMatrix, right: SparseMatrix, v: SparseMatrix) -> SparseMatrix:
    """``kron(left, right) @ v`` for a column ``v`` without forming the Kronecker product.

    Uses ``(L (x) R) vec(V) = vec(L V R^T)`` under the row-major flat index.
    """
    if v.cols != 1 or v.rows != left.cols * right.cols:
        raise DimensionMismatch("kron_apply: vector length does not match")
    rc = right.cols
    vdata = {}
    for i, r in v._data.items():
        a, b = divmod(i, rc)
        vdata.setdefault(a, {})[b] = r[0]
    V = SparseMatrix._wrap(v.ring, left.cols, rc, vdata)
    W = mat_mul(mat_mul(left, V), right.transpose())
    data = {}
    for a, r in W._data.items():
        for b, x in r.items():
            data[a * right.rows + b] = {0: x}
    return SparseMatrix._wrap(v.ring, left.rows * right.rows, 1, data)


def tensor_permutation(ring: BaseRing, dims: Sequence[int], perm: Sequence[int]) -> SparseMatrix:
    """Matrix reordering tensor factors: output factor ``k`` is input factor ``perm[k]``.

    For dims ``(m, n)`` and ``perm = (1, 0)`` this is the swap
    ``e_i (x) e_j -> e_j (x) e_i`` from ``F (x) G`` to ``G (x) F``.
    """
    index_map = tensor_permutation_map(dims, perm)
    one = ring.one
    data = {index_map[c]: {c: one} for c in range(len(index_map))}
    return SparseMatrix._wrap(ring, len(index_map), len(index_map), data)


def tensor_permutation_map(dims: Sequence[int], perm: Sequence[int]) -> list[int]:
    """Flat-index map of :func:`tensor_permutation` (input index -> output index)."""
    dims = list(dims)
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"not a permutation: {perm}")
    out_dims = [dims[p] for p in perm]
    out = []
    for digits in itertools.product(*(range(d) for d in dims)):
        idx = 0
        for k, p in enumerate(perm):
            idx = idx * out_dims[k] + digits[p]
        out.append(idx)
    return out


def swap(ring: BaseRing, m: int, n: int) -> SparseMatrix:
    """The flip ``F (x) G -> G (x) F`` for ranks ``m = rank F``, ``n = rank G``."""
    return tensor_permutation(ring, (m, n), (1, 0))


def vectorize(m: SparseMatrix) -> SparseMatrix:
    """Row-major vectorization: entry ``(i, j)`` goes to flat index ``i*cols + j``."""
    data = {}
    for i, r in m._data.items():
        for j, v in r.items():
            data[i * m.cols + j] = {0: v}
    return SparseMatrix._wrap(m.ring, m.rows * m.cols, 1, data)


def unvectorize(v: SparseMatrix, rows: int, cols: int) -> SparseMatrix:
    if v.cols != 1 or v.rows != rows * cols:
        raise DimensionMismatch("unvectorize: length mismatch")
    data: dict[int, dict[int, object]] = {}
    for k, r in v._data.items():
        i, j = divmod(k, cols)
        data.setdefault(i, {})[j] = r[0]
    return SparseMatrix._wrap(v.ring, rows, cols, data)


def identity_vector(ring: BaseRing, n: int) -> SparseMatrix:
    """The vectorized ``n x n`` identity, i.e. ``sum_i e_i^dual (x) e_i``."""
    one = ring.one
    return SparseMatrix._wrap(ring, n * n, 1, {i * n + i: {0: one} for i in range(n)})
