"""Dense univariate polynomials over Q as tuples of Fractions.

Index equals degree; trailing zeros are always stripped, so the zero
polynomial is the empty tuple and equality is tuple equality.
"""
from __future__ import annotations

from fractions import Fraction

Poly = tuple  # tuple[Fraction, ...]

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
T: Poly = (Fraction(0), Fraction(1))


def strip(coeffs) -> Poly:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for zero


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)  # leading coefficient is nonzero over a domain


def scale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ZERO
    return tuple(c * x for x in p)


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        c = r[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        while r and r[-1] == 0:
            r.pop()
    return strip(quot), tuple(r)


def monic_unit(p: Poly) -> Poly:
    """The constant polynomial that makes ``p`` monic."""
    return (1 / p[-1],)


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def to_str(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms)
