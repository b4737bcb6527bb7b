"""Finite windows of ind- and pro-systems of finite free modules.

An :class:`IndSystem` ``F_0 -> F_1 -> ... -> F_k`` stands for the colimit of
a Lazard presentation; a :class:`ProSystem` ``F_0 <- F_1 <- ... <- F_k`` for
a limit, optionally continued forever by repeating a square ``tail`` map on
``F_k``.  Every verdict computed here concerns only the stages actually
inspected; nothing is claimed about the infinite system.

Stage ``i`` of a pro-system with a tail exists for every ``i >= 0``: beyond
the stored stages its rank is ``r_k`` and its transition is ``tail``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (InvalidWindow, RingMismatch, ShapeError,
                     TailNotSupported, WindowTooLarge)
from .exactlin import (BaseRing, SparseMatrix, column_module_form, image_subset,
                       is_invertible, kron, vectorize)


def _check_chain(ring: BaseRing, ranks, transitions, shape_of) -> None:
    if not ranks:
        raise ShapeError("a system needs at least one stage")
    if any(r < 0 for r in ranks):
        raise ShapeError("ranks must be non-negative")
    if len(transitions) != len(ranks) - 1:
        raise ShapeError(f"{len(ranks)} stages need {len(ranks) - 1} transitions, got {len(transitions)}")
    for i, t in enumerate(transitions):
        if t.ring != ring:
            raise RingMismatch(f"transition {i} is over {t.ring}, expected {ring}")
        if t.shape != shape_of(i):
            raise ShapeError(f"transition {i} has shape {t.shape}, expected {shape_of(i)}")


@dataclass(frozen=True)
class IndSystem:
    """``transitions[i]: F_i -> F_{i+1}``, shape ``r_{i+1} x r_i``."""

    ring: BaseRing
    ranks: tuple[int, ...]
    transitions: tuple[SparseMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        _check_chain(self.ring, self.ranks, self.transitions,
                     lambda i: (self.ranks[i + 1], self.ranks[i]))

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def composite(self, src: int, dst: int) -> SparseMatrix:
        """``F_src -> F_dst`` for ``src <= dst``."""
        m = SparseMatrix.identity(self.ring, self.ranks[src])
        for i in range(src, dst):
            m = self.transitions[i] @ m
        return m


@dataclass(frozen=True)
class ProSystem:
    """``transitions[i]: F_{i+1} -> F_i``, shape ``r_i x r_{i+1}``; optional periodic tail."""

    ring: BaseRing
    ranks: tuple[int, ...]
    transitions: tuple[SparseMatrix, ...]
    tail: SparseMatrix | None = None

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        _check_chain(self.ring, self.ranks, self.transitions,
                     lambda i: (self.ranks[i], self.ranks[i + 1]))
        if self.tail is not None:
            r = self.ranks[-1]
            if self.tail.ring != self.ring:
                raise RingMismatch(f"tail is over {self.tail.ring}, expected {self.ring}")
            if self.tail.shape != (r, r):
                raise ShapeError(f"tail has shape {self.tail.shape}, expected ({r}, {r})")

    @property
    def last(self) -> int:
        return len(self.ranks) - 1

    def rank(self, i: int) -> int:
        if i <= self.last:
            return self.ranks[i]
        if self.tail is None:
            raise WindowTooLarge(f"stage {i} is past the last stage {self.last}")
        return self.ranks[-1]

    def transition(self, i: int) -> SparseMatrix:
        """``F_{i+1} -> F_i``."""
        if i < self.last:
            return self.transitions[i]
        if self.tail is None:
            raise WindowTooLarge(f"stage {i + 1} is past the last stage {self.last}")
        return self.tail

    def composite(self, dst: int, src: int) -> SparseMatrix:
        """``F_src -> F_dst`` for ``dst <= src``."""
        m = SparseMatrix.identity(self.ring, self.rank(src))
        for i in range(src - 1, dst - 1, -1):
            m = self.transition(i) @ m
        return m

    def truncate(self, stages: int) -> "ProSystem":
        """The first ``stages`` stages as a tail-free system (unrolling the tail if needed)."""
        ranks = [self.rank(i) for i in range(stages)]
        return ProSystem(self.ring, ranks, [self.transition(i) for i in range(stages - 1)])


def dualize_ind(s: IndSystem) -> ProSystem:
    return ProSystem(s.ring, s.ranks, [t.T for t in s.transitions])


def dualize_pro(s: ProSystem) -> IndSystem:
    if s.tail is not None:
        raise TailNotSupported("only a finite window can be dualized")
    return IndSystem(s.ring, s.ranks, [t.T for t in s.transitions])


def tensor_pro(p: ProSystem, q: ProSystem) -> ProSystem:
    """Stagewise tensor product; the shorter window is extended first.

    A system is extended by its tail when it has one and by identity maps
    otherwise.  The result carries a tail whenever either factor does.
    """
    if p.ring != q.ring:
        raise RingMismatch(f"{p.ring} vs {q.ring}")
    ring = p.ring
    n = max(len(p.ranks), len(q.ranks))

    def stage_data(s: ProSystem):
        ranks = [s.ranks[i] if i <= s.last else s.ranks[-1] for i in range(n)]
        trans = []
        for i in range(n - 1):
            if i < s.last:
                trans.append(s.transitions[i])
            else:
                trans.append(s.tail if s.tail is not None else SparseMatrix.identity(ring, s.ranks[-1]))
        return ranks, trans

    pr, pt = stage_data(p)
    qr, qt = stage_data(q)
    tail = None
    if p.tail is not None or q.tail is not None:
        a = p.tail if p.tail is not None else SparseMatrix.identity(ring, p.ranks[-1])
        b = q.tail if q.tail is not None else SparseMatrix.identity(ring, q.ranks[-1])
        tail = kron(a, b)
    return ProSystem(ring, [x * y for x, y in zip(pr, qr)],
                     [kron(a, b) for a, b in zip(pt, qt)], tail)


# -- Mittag-Leffler analysis ---------------------------------------------------

@dataclass(frozen=True)
class StageVerdict:
    alpha: int
    stabilized_at: int | None   # None means not stabilized within the window
    image: SparseMatrix | None  # canonical form (rows generate the image) when stabilized

    @property
    def status(self) -> str:
        return "NotStabilizedWithinWindow" if self.stabilized_at is None else f"StabilizedAt({self.stabilized_at})"


@dataclass(frozen=True)
class MLVerdict:
    window: int
    stages: tuple[StageVerdict, ...] = field(default_factory=tuple)

    @property
    def all_stabilized(self) -> bool:
        return all(s.stabilized_at is not None for s in self.stages)

    def stage(self, alpha: int) -> StageVerdict:
        return self.stages[alpha]


def ml_verdict(s: ProSystem, window: int) -> MLVerdict:
    """Image-stabilization verdict for each target stage, looking at stages ``0..window``.

    For target ``alpha`` the images ``I_beta`` of ``F_beta -> F_alpha`` are
    compared for ``alpha < beta <= window``; the stage is stabilized at the
    least ``beta < window`` whose image equals ``I_window`` (images shrink, so
    every image in between agrees too).  Targets ``0..window-2`` are reported,
    so each has at least two images to compare.
    """
    if window < 2:
        raise InvalidWindow(f"window must be at least 2, got {window}")
    if s.tail is None and window > s.last:
        raise WindowTooLarge(f"window {window} exceeds the last stage {s.last} and no tail is declared")
    records = []
    for alpha in range(window - 1):
        forms = []
        m = SparseMatrix.identity(s.ring, s.rank(alpha))
        for beta in range(alpha + 1, window + 1):
            m = m @ s.transition(beta - 1)
            forms.append(column_module_form(m))
        final = forms[-1]
        hit = next((alpha + 1 + k for k, f in enumerate(forms[:-1]) if f == final), None)
        records.append(StageVerdict(alpha, hit, final if hit is not None else None))
    return MLVerdict(window, tuple(records))


# -- linear-duality unit ---------------------------------------------------------

def unit_components(s: IndSystem) -> list[SparseMatrix]:
    """``u_beta`` in ``F_beta^v (x) F_top``: entry ``i * r_top + j`` is ``T[j, i]`` for ``T = F_beta -> F_top``."""
    return [vectorize(s.composite(beta, s.top).T) for beta in range(len(s.ranks))]


def unit_compatibility(s: IndSystem) -> bool:
    """``u_alpha == (T_alpha^v (x) 1) u_{alpha+1}`` at every stage."""
    us = unit_components(s)
    eye = SparseMatrix.identity(s.ring, s.ranks[-1])
    return all(kron(t.T, eye) @ us[i + 1] == us[i] for i, t in enumerate(s.transitions))


def hom_ev_compare(s: IndSystem, L: int) -> bool:
    """Window-level ``Hom(M, R^L) ~ ev(M^v (x) R^L)`` through the unit.

    Both sides are modules of compatible families indexed by the stages.
    A Hom family is determined by its top matrix ``f``; ``Phi`` sends the
    basis matrices ``f`` to the families ``(1 (x) f) u_i``.  The ev side is
    generated by pulling the basis of ``F_top^v (x) R^L`` back along the
    dual transitions.  The comparison holds when both generate the same
    submodule and ``Phi`` restricted to the top stage is invertible.
    """
    if L < 0:
        raise ShapeError("L must be non-negative")
    if L == 0:
        return True
    ring, top = s.ring, s.top
    rt = s.ranks[top]
    if rt == 0:
        return True
    us = unit_components(s)
    eye_l = SparseMatrix.identity(ring, L)
    phi_cols, psi_cols = [], []
    for a in range(L):
        for b in range(rt):
            f = SparseMatrix(ring, L, rt, {(a, b): ring.one})
            phi_cols.append(SparseMatrix.vstack(
                [kron(SparseMatrix.identity(ring, s.ranks[i]), f) @ us[i] for i in range(top + 1)]))
    for k in range(rt * L):
        x_top = SparseMatrix.basis_column(ring, rt * L, k)
        psi_cols.append(SparseMatrix.vstack(
            [kron(s.composite(i, top).T, eye_l) @ x_top for i in range(top + 1)]))
    phi = SparseMatrix.hstack(phi_cols)
    psi = SparseMatrix.hstack(psi_cols)
    offset = sum(r * L for r in s.ranks[:top])
    top_block = phi.submatrix(range(offset, offset + rt * L), range(phi.cols))
    return image_subset(phi, psi) and image_subset(psi, phi) and is_invertible(top_block)


__all__ = [
    "IndSystem", "ProSystem", "StageVerdict", "MLVerdict", "dualize_ind", "dualize_pro",
    "tensor_pro", "ml_verdict", "unit_components", "unit_compatibility", "hom_ev_compare",
]
