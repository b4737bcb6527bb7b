"""Canonical row forms, submodule containment, and matrix inversion.

Over the Euclidean rings Z, Q and Q[t] the canonical form is the Hermite
normal form (pivots positive / monic / one, entries above a pivot reduced
modulo it).  Over Z/n it is the Howell normal form, which is canonical
even when n is composite: two matrices have the same row module iff
their forms agree entry for entry.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionMismatch, NotInvertible, RingMismatch
from . import poly
from .matrix import SparseMatrix
from .rings import (INTEGERS, INTEGERS_MOD, RATIONAL_POLYNOMIALS, RATIONALS,
                    BaseRing, xgcd)


def _gcdex(ring: BaseRing, a, b):
    """Return ``(s, t, u, v)`` with ``[[s, t], [u, v]]`` unimodular and ``u*a + v*b == 0``."""
    k = ring.kind
    if k == INTEGERS or k == INTEGERS_MOD:
        g, s, t = xgcd(a, b)
        return s, t, -(b // g), a // g
    if k == RATIONALS:
        # a != 0 is guaranteed by the caller
        return Fraction(1), Fraction(0), -b / a, Fraction(1)
    # Q[t]: extended Euclid on polynomials
    r0, r1 = a, b
    s0, s1, t0, t1 = poly.ONE, poly.ZERO, poly.ZERO, poly.ONE
    while r1:
        q, r = poly.divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly.sub(s0, poly.mul(q, s1))
        t0, t1 = t1, poly.sub(t0, poly.mul(q, t1))
    g = r0
    u = poly.neg(poly.divmod_(b, g)[0])
    v = poly.divmod_(a, g)[0]
    return s0, t0, u, v


def _normalizer(ring: BaseRing, a):
    """A unit ``w`` such that ``a*w`` is the canonical associate of ``a``."""
    k = ring.kind
    if k == INTEGERS:
        return -1 if a < 0 else 1
    if k == RATIONALS:
        return 1 / a
    if k == RATIONAL_POLYNOMIALS:
        return poly.monic_unit(a)
    n = ring.modulus
    g, _, _ = xgcd(a, n)
    m = n // g
    if m == 1:
        return 1
    w = pow((a // g) % m, -1, m)
    while xgcd(w, n)[0] != 1:
        w += m
    return w % n


def _quotient(ring: BaseRing, x, p):
    """``q`` such that ``x - q*p`` is the canonical remainder of ``x`` by pivot ``p``."""
    k = ring.kind
    if k == INTEGERS or k == INTEGERS_MOD:
        return x // p
    if k == RATIONALS:
        return x / p
    return poly.divmod_(x, p)[0]


def _row_lin(ring, s, r1, t, r2):
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    out = {}
    for j in set(r1) | set(r2):
        v = ring.zero
        if j in r1 and not is_zero(s):
            v = mul(s, r1[j])
        if j in r2 and not is_zero(t):
            v = add(v, mul(t, r2[j]))
        if not is_zero(v):
            out[j] = v
    return out


def _scale_row(ring, c, r):
    mul, is_zero = ring.mul, ring.is_zero
    out = {}
    for j, v in r.items():
        p = mul(c, v)
        if not is_zero(p):
            out[j] = p
    return out


def _echelon(ring: BaseRing, rows: list[dict], ncols: int) -> list[tuple[int, dict]]:
    """Reduced echelon rows ``(pivot_col, row)`` of the row module spanned by ``rows``."""
    pool = [dict(r) for r in rows if r]
    howell = ring.kind == INTEGERS_MOD
    done: list[tuple[int, dict]] = []
    for c in range(ncols):
        if not pool:
            break
        active = [r for r in pool if c in r]
        if not active:
            continue
        rest = [r for r in pool if c not in r]
        piv = active[0]
        for other in active[1:]:
            s, t, u, v = _gcdex(ring, piv[c], other[c])
            new_piv = _row_lin(ring, s, piv, t, other)
            new_other = _row_lin(ring, u, piv, v, other)
            piv = new_piv
            if new_other:
                rest.append(new_other)
        piv = _scale_row(ring, _normalizer(ring, piv[c]), piv)
        if howell:
            ann = ring.modulus // piv[c]
            if ann != ring.modulus:
                extra = _scale_row(ring, ann, piv)
                if extra:
                    rest.append(extra)
        done.append((c, piv))
        pool = rest
    # back-substitution so entries above each pivot are canonical remainders
    for idx, (c, prow) in enumerate(done):
        p = prow[c]
        for k in range(idx):
            row = done[k][1]
            if c in row:
                q = _quotient(ring, row[c], p)
                if not ring.is_zero(q):
                    done[k] = (done[k][0], _row_lin(ring, ring.one, row, ring.neg(q), prow))
    return done


def _rows_of(m: SparseMatrix) -> list[dict]:
    return [dict(m.row(i)) for i in m.nonzero_rows()]


def _check_supported(ring: BaseRing) -> None:
    if ring.kind not in (INTEGERS, INTEGERS_MOD, RATIONALS, RATIONAL_POLYNOMIALS):
        raise RingMismatch(f"unsupported ring {ring}")


def canonical_row_form(m: SparseMatrix) -> SparseMatrix:
    """Canonical generating set of the row module of ``m`` (HNF or Howell form).

    The zero module gives a ``0 x cols`` matrix.
    """
    _check_supported(m.ring)
    done = _echelon(m.ring, _rows_of(m), m.cols)
    data = {i: row for i, (_, row) in enumerate(done)}
    return SparseMatrix._wrap(m.ring, len(done), m.cols, data)


def column_module_form(m: SparseMatrix) -> SparseMatrix:
    """Canonical form of the column space (image) of ``m``, as rows."""
    return canonical_row_form(m.transpose())


def image_subset(a: SparseMatrix, b: SparseMatrix) -> bool:
    """True iff the image (column module) of ``a`` lies inside that of ``b``."""
    a._same_ring(b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"images live in different modules: {a.rows} vs {b.rows}")
    hb = column_module_form(b)
    joint = column_module_form(SparseMatrix.hstack([b, a]))
    return joint == hb


def same_image(a: SparseMatrix, b: SparseMatrix) -> bool:
    if a.rows != b.rows:
        raise DimensionMismatch(f"images live in different modules: {a.rows} vs {b.rows}")
    return column_module_form(a) == column_module_form(b)


def spans_everything(m: SparseMatrix) -> bool:
    """True iff the columns of ``m`` generate the whole free module."""
    return column_module_form(m) == SparseMatrix.identity(m.ring, m.rows)


def invert(m: SparseMatrix) -> SparseMatrix:
    """Two-sided inverse of a square matrix over its ring."""
    if m.rows != m.cols:
        raise NotInvertible(f"non-square {m.rows}x{m.cols}")
    n = m.rows
    aug = SparseMatrix.hstack([m, SparseMatrix.identity(m.ring, n)])
    form = canonical_row_form(aug)
    left = form.submatrix(range(form.rows), range(n))
    if form.rows != n or left != SparseMatrix.identity(m.ring, n):
        raise NotInvertible("matrix is not invertible over " + str(m.ring))
    inv = form.submatrix(range(n), range(n, 2 * n))
    if m @ inv != SparseMatrix.identity(m.ring, n):
        raise NotInvertible("left inverse is not a right inverse")
    return inv


def is_invertible(m: SparseMatrix) -> bool:
    try:
        invert(m)
    except NotInvertible:
        return False
    return True


# -- field-only helpers (used by the pro-algebra construction) ------------

def rref(m: SparseMatrix) -> tuple[SparseMatrix, list[int]]:
    """Reduced row echelon form over a field, with pivot columns."""
    if not m.ring.is_field:
        raise RingMismatch(f"rref needs a field, got {m.ring}")
    done = _echelon(m.ring, _rows_of(m), m.cols)
    data = {i: row for i, (_, row) in enumerate(done)}
    return SparseMatrix._wrap(m.ring, len(done), m.cols, data), [c for c, _ in done]


def rank(m: SparseMatrix) -> int:
    return rref(m)[0].rows


def nullspace(m: SparseMatrix) -> SparseMatrix:
    """Basis of ``{x : m x = 0}`` as the columns of the returned matrix."""
    ring = m.ring
    form, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    cols = []
    for f in free:
        vec = {f: ring.one}
        for i, c in enumerate(pivots):
            v = form[i, f]
            if not ring.is_zero(v):
                vec[c] = ring.neg(v)
        cols.append(vec)
    data: dict[int, dict[int, object]] = {}
    for k, vec in enumerate(cols):
        for i, v in vec.items():
            data.setdefault(i, {})[k] = v
    return SparseMatrix._wrap(ring, m.cols, len(cols), data)


def solve(m: SparseMatrix, b: SparseMatrix) -> SparseMatrix | None:
    """One solution ``x`` of ``m x = b`` over a field (``b`` a column), or None."""
    ring = m.ring
    aug = SparseMatrix.hstack([m, b])
    form, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = {}
    for i, c in enumerate(pivots):
        v = form[i, m.cols]
        if not ring.is_zero(v):
            x[(c, 0)] = v
    return SparseMatrix(ring, m.cols, 1, x)


def reduce_modulo(form: SparseMatrix, pivots: list[int], v: SparseMatrix) -> SparseMatrix:
    """Reduce column ``v`` modulo the row space given in rref ``form``."""
    ring = v.ring
    vec = {i: r[0] for i, r in ((i, v.row(i)) for i in v.nonzero_rows())}
    for i, c in enumerate(pivots):
        x = vec.get(c)
        if x is None:
            continue
        row = form.row(i)
        for j, y in row.items():
            nv = ring.sub(vec.get(j, ring.zero), ring.mul(x, y))
            if ring.is_zero(nv):
                vec.pop(j, None)
            else:
                vec[j] = nv
    return SparseMatrix(ring, v.rows, 1, {(i, 0): x for i, x in vec.items()})
