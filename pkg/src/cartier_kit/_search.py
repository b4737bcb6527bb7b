"""Exhaustive solver for quadratic systems over Z/n.

Used to enumerate algebra homomorphisms and grouplike elements.  Unknowns
are coordinates in ``Z/n``; the residual of each matrix identity is
expanded symbolically into polynomials of degree at most two, and a
depth-first search assigns unknowns one at a time, testing an equation
as soon as its last unknown is set.  The result is exactly the set an
enumeration of all ``n**N`` vectors would produce, in lexicographic order.

Polynomials are dicts keyed by ``()``, ``(i,)`` or ``(i, j)`` with
``i <= j``; symbolic matrices are dicts ``{(row, col): poly}``.
"""
from __future__ import annotations

from typing import Sequence

from .exactlin import SparseMatrix


class SymMatrix:
    __slots__ = ("n", "rows", "cols", "data")

    def __init__(self, n: int, rows: int, cols: int, data: dict):
        self.n, self.rows, self.cols, self.data = n, rows, cols, data

    @classmethod
    def constant(cls, m: SparseMatrix) -> "SymMatrix":
        n = m.ring.modulus
        return cls(n, m.rows, m.cols, {(i, j): {(): v % n} for i, j, v in m.items()})

    @classmethod
    def unknowns(cls, n: int, rows: int, cols: int, index) -> "SymMatrix":
        """Matrix whose ``(i, j)`` entry is the unknown ``index(i, j)``."""
        return cls(n, rows, cols, {(i, j): {(index(i, j),): 1}
                                   for i in range(rows) for j in range(cols)})

    def __matmul__(self, other: "SymMatrix") -> "SymMatrix":
        assert self.cols == other.rows
        by_row: dict[int, list] = {}
        for (k, j), p in other.data.items():
            by_row.setdefault(k, []).append((j, p))
        out: dict = {}
        for (i, k), p in self.data.items():
            for j, q in by_row.get(k, ()):
                _acc(out.setdefault((i, j), {}), _pmul(p, q, self.n), self.n)
        return SymMatrix(self.n, self.rows, other.cols, _prune(out))

    def kron(self, other: "SymMatrix") -> "SymMatrix":
        out: dict = {}
        br, bc = other.rows, other.cols
        for (i, j), p in self.data.items():
            for (k, l), q in other.data.items():
                out[(i * br + k, j * bc + l)] = _pmul(p, q, self.n)
        return SymMatrix(self.n, self.rows * br, self.cols * bc, _prune(out))

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        assert (self.rows, self.cols) == (other.rows, other.cols)
        out = {k: dict(p) for k, p in self.data.items()}
        for k, q in other.data.items():
            _acc(out.setdefault(k, {}), {m: -c for m, c in q.items()}, self.n)
        return SymMatrix(self.n, self.rows, self.cols, _prune(out))

    def permute_rows(self, perm: Sequence[int]) -> "SymMatrix":
        return SymMatrix(self.n, self.rows, self.cols,
                         {(perm[i], j): p for (i, j), p in self.data.items()})

    def polys(self) -> list[dict]:
        return [self.data[k] for k in sorted(self.data)]


def _acc(target: dict, p: dict, n: int) -> None:
    for m, c in p.items():
        target[m] = (target.get(m, 0) + c) % n


def _prune(data: dict) -> dict:
    out = {}
    for k, p in data.items():
        q = {m: c for m, c in p.items() if c}
        if q:
            out[k] = q
    return out


def _pmul(p: dict, q: dict, n: int) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            if len(m) > 2:
                raise ValueError("symbolic product exceeds degree 2")
            out[m] = (out.get(m, 0) + c1 * c2) % n
    return out


def solve_system(n: int, num_vars: int, equations: list[dict],
                 order: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """All vectors in ``(Z/n)^num_vars`` annihilating every polynomial, sorted."""
    order = list(range(num_vars)) if order is None else list(order)
    if sorted(order) != list(range(num_vars)):
        raise ValueError("order must be a permutation of the unknowns")
    pos = {v: k for k, v in enumerate(order)}
    checks: list[list] = [[] for _ in range(max(num_vars, 1))]
    for eq in equations:
        terms = []
        last = -1
        for mono, c in eq.items():
            c %= n
            if not c:
                continue
            a = mono[0] if len(mono) > 0 else -1
            b = mono[1] if len(mono) > 1 else -1
            terms.append((c, a, b))
            for v in mono:
                last = max(last, pos[v])
        if not terms:
            continue
        if last < 0:
            return []  # a nonzero constant equation
        checks[last].append(terms)

    vals = [0] * num_vars
    solutions: list[tuple[int, ...]] = []

    def ok(level: int) -> bool:
        for terms in checks[level]:
            s = 0
            for c, a, b in terms:
                if a < 0:
                    s += c
                elif b < 0:
                    s += c * vals[a]
                else:
                    s += c * vals[a] * vals[b]
            if s % n:
                return False
        return True

    def dfs(level: int) -> None:
        if level == num_vars:
            solutions.append(tuple(vals))
            return
        var = order[level]
        for x in range(n):
            vals[var] = x
            if ok(level):
                dfs(level + 1)
        vals[var] = 0

    if num_vars == 0:
        return [()]
    dfs(0)
    solutions.sort()
    return solutions
