"""JSON encodings of every object type, plus ``catalog:`` references.

Scalars use the text encodings of :meth:`BaseRing.format`.  A matrix is
``{"rows": r, "cols": c, "entries": [[i, j, scalar], ...]}`` with entries in
row-major order.  :func:`dumps` is the only serializer used for output, so
equal objects always produce identical bytes.

Catalog references look like ``catalog:NAME@RING``:

=================================  ==========================================
``mu_N@R``                         roots of unity
``const_N1xN2x...@R``              functions on a finite abelian group
``alpha_P`` / ``alpha_P_K``        additive Frobenius kernels over ``Z/P``
``trivial@R``                      rank-1 Hopf algebra
``exp_pairing@P``                  truncated exponential pairing
``trivial(H1,H2)@R``               counit pairing between two catalog objects
``canonical(H)@R``                 evaluation pairing with the linear dual
``field@R``, ``dual_numbers@R``,   test algebras
``split@R``, ``split_K@R``,
``truncated_N@R``, ``ut_N@R``
``t_tail``                         ``Q[t] <-t- Q[t] <-t- ...``
``identity_N@R``                   constant pro-system with identity maps
=================================  ==========================================
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from . import catalog
from .errors import CartierKitError, ParseError
from .exactlin import QQ_T, BaseRing, SparseMatrix
from .hopf import AssocAlgebraData, HopfAlgebraData
from .modsys import IndSystem, ProSystem
from .motive import HopfPairing
from .proalg import ProAlgebraPresentation


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- matrices --------------------------------------------------------------------

def encode_matrix(m: SparseMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[i, j, m.ring.format(v)] for i, j, v in m.items()]}


def decode_matrix(obj, ring: BaseRing) -> SparseMatrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix must be an object")
    try:
        rows, cols = obj["rows"], obj["cols"]
        entries = obj.get("entries", [])
    except KeyError as exc:
        raise ParseError(f"matrix is missing {exc}") from exc
    if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in (rows, cols)):
        raise ParseError("matrix rows/cols must be non-negative integers")
    data = {}
    for e in entries:
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"bad matrix entry {e!r}")
        i, j, s = e
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < rows and 0 <= j < cols):
            raise ParseError(f"matrix entry index out of range: {e!r}")
        if (i, j) in data:
            raise ParseError(f"duplicate matrix entry at ({i}, {j})")
        data[(i, j)] = ring.parse_scalar(s)
    return SparseMatrix(ring, rows, cols, data)


def _ring(obj) -> BaseRing:
    if "ring" not in obj:
        raise ParseError("missing 'ring'")
    return BaseRing.parse(obj["ring"])


def _field(obj, key):
    try:
        return obj[key]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing {key!r}") from exc


# -- Hopf algebras and algebras ----------------------------------------------------

_HOPF_MAPS = ("mul", "unit", "comul", "counit", "antipode")


def encode_hopf(h: HopfAlgebraData) -> dict:
    out = {"ring": str(h.ring), "basis": list(h.basis)}
    for k in _HOPF_MAPS:
        out[k] = encode_matrix(getattr(h, k))
    return out


def decode_hopf(obj) -> HopfAlgebraData:
    ring = _ring(obj)
    basis = _field(obj, "basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("basis must be a list of strings")
    maps = {k: decode_matrix(_field(obj, k), ring) for k in _HOPF_MAPS}
    return HopfAlgebraData(ring, tuple(basis), **maps)


def encode_algebra(a: AssocAlgebraData) -> dict:
    return {"ring": str(a.ring), "basis": list(a.basis),
            "mul": encode_matrix(a.mul), "unit": encode_matrix(a.unit)}


def decode_algebra(obj) -> AssocAlgebraData:
    ring = _ring(obj)
    basis = _field(obj, "basis")
    if not isinstance(basis, list):
        raise ParseError("basis must be a list of strings")
    return AssocAlgebraData(ring, tuple(map(str, basis)),
                            decode_matrix(_field(obj, "mul"), ring),
                            decode_matrix(_field(obj, "unit"), ring))


# -- systems and presentations -------------------------------------------------------

def encode_system(s: IndSystem | ProSystem) -> dict:
    out = {"ring": str(s.ring), "ranks": list(s.ranks),
           "transitions": [encode_matrix(t) for t in s.transitions],
           "direction": "pro" if isinstance(s, ProSystem) else "ind"}
    if isinstance(s, ProSystem) and s.tail is not None:
        out["tail"] = encode_matrix(s.tail)
    return out


def decode_system(obj) -> IndSystem | ProSystem:
    ring = _ring(obj)
    ranks = _field(obj, "ranks")
    trans = [decode_matrix(t, ring) for t in _field(obj, "transitions")]
    direction = obj.get("direction", "pro")
    if direction == "ind":
        if "tail" in obj:
            raise ParseError("ind-systems take no tail")
        return IndSystem(ring, ranks, trans)
    if direction != "pro":
        raise ParseError(f"direction must be 'ind' or 'pro', got {direction!r}")
    tail = decode_matrix(obj["tail"], ring) if obj.get("tail") is not None else None
    return ProSystem(ring, ranks, trans, tail)


def encode_presentation(p: ProAlgebraPresentation) -> dict:
    return {"ring": str(p.ring), "ranks": list(p.ranks),
            "transitions": [encode_matrix(t) for t in p.transitions],
            "mults": [encode_matrix(m) for m in p.mults],
            "units": [encode_matrix(u) for u in p.units]}


def decode_presentation(obj) -> ProAlgebraPresentation:
    ring = _ring(obj)
    return ProAlgebraPresentation(
        ring, _field(obj, "ranks"),
        [decode_matrix(t, ring) for t in _field(obj, "transitions")],
        [decode_matrix(m, ring) for m in _field(obj, "mults")],
        [decode_matrix(u, ring) for u in _field(obj, "units")])


# -- pairings ----------------------------------------------------------------------

def encode_pairing(p: HopfPairing) -> dict:
    return {"A": encode_hopf(p.A), "B": encode_hopf(p.B), "u": encode_matrix(p.u)}


def decode_pairing(obj, base: Path | None = None) -> HopfPairing:
    a = _hopf_ref(_field(obj, "A"), base)
    b = _hopf_ref(_field(obj, "B"), base)
    return HopfPairing(a, b, decode_matrix(_field(obj, "u"), a.ring))


def _hopf_ref(ref, base: Path | None) -> HopfAlgebraData:
    if isinstance(ref, dict):
        return decode_hopf(ref)
    if isinstance(ref, str):
        if not ref.startswith("catalog:") and base is not None and not Path(ref).is_absolute():
            ref = str(base / ref)
        obj = load(ref, "hopf")
        if not isinstance(obj, HopfAlgebraData):
            raise ParseError(f"{ref} is not a Hopf algebra")
        return obj
    raise ParseError("Hopf reference must be an object or a string")


# -- loading -----------------------------------------------------------------------

_DECODERS = {
    "hopf": decode_hopf,
    "algebra": decode_algebra,
    "system": decode_system,
    "presentation": decode_presentation,
}


def load(ref: str, kind: str):
    """Load an object of ``kind`` from a file path or a ``catalog:`` reference."""
    try:
        if ref.startswith("catalog:"):
            return resolve_catalog(ref[len("catalog:"):], kind)
        path = Path(ref)
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ParseError(f"cannot read {ref}: {exc.strerror or exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"{ref} is not valid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise ParseError(f"{ref}: top level must be an object")
        if kind == "pairing":
            return decode_pairing(obj, path.parent)
        if kind == "matrix":
            ring = _ring(obj)
            return decode_matrix(obj, ring)
        return _DECODERS[kind](obj)
    except ParseError:
        raise
    except CartierKitError as exc:
        # structural problems (shapes, rings, invalid presentations) count as malformed input
        raise ParseError(f"{ref}: {exc}") from exc
    except (TypeError, KeyError, AttributeError, ValueError) as exc:
        raise ParseError(f"{ref}: malformed object ({exc})") from exc


def _split_top(s: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def _hopf_by_name(name: str, ring: BaseRing | None) -> HopfAlgebraData:
    m = re.fullmatch(r"alpha_(\d+)(?:_(\d+))?", name)
    if m:
        return catalog.alpha(int(m.group(1)), int(m.group(2) or 1))
    if ring is None:
        raise ParseError(f"catalog:{name} needs '@RING'")
    if name == "trivial":
        return catalog.trivial_hopf(ring)
    m = re.fullmatch(r"mu_(\d+)", name)
    if m:
        return catalog.mu_n(ring, int(m.group(1)))
    m = re.fullmatch(r"const_(\d+(?:x\d+)*)", name)
    if m:
        return catalog.constant_group(ring, [int(x) for x in m.group(1).split("x")])
    raise ParseError(f"unknown catalog Hopf algebra {name!r}")


def _algebra_by_name(name: str, ring: BaseRing) -> AssocAlgebraData:
    if name in ("field", "base"):
        return catalog.base_algebra(ring)
    if name == "dual_numbers":
        return catalog.dual_numbers(ring)
    m = re.fullmatch(r"split(?:_(\d+))?", name)
    if m:
        return catalog.split_algebra(ring, int(m.group(1) or 2))
    m = re.fullmatch(r"truncated_(\d+)", name)
    if m:
        return catalog.truncated_polynomials(ring, int(m.group(1)))
    m = re.fullmatch(r"ut_(\d+)", name)
    if m:
        return catalog.upper_triangular(ring, int(m.group(1)))
    raise ParseError(f"unknown catalog algebra {name!r}")


def resolve_catalog(ref: str, kind: str):
    """Resolve the part of a ``catalog:`` reference after the colon."""
    ref = ref.strip()
    body, ring_text = ref.rsplit("@", 1) if "@" in ref else (ref, "")
    try:
        ring = BaseRing.parse(ring_text) if ring_text else None
    except ParseError:
        ring = None
        if kind != "pairing":
            raise
    if kind == "hopf":
        return _hopf_by_name(body, ring)
    if kind == "algebra":
        if ring is None:
            raise ParseError(f"catalog:{ref} needs '@RING'")
        return _algebra_by_name(body, ring)
    if kind == "pairing":
        if body == "exp_pairing":
            if not ring_text.isdigit():
                raise ParseError("exp_pairing needs '@P' with P prime")
            return catalog.exp_pairing(int(ring_text))
        m = re.fullmatch(r"(trivial|canonical)\((.*)\)", body)
        if not m:
            raise ParseError(f"unknown catalog pairing {ref!r}")
        args = _split_top(m.group(2))
        if m.group(1) == "canonical":
            if len(args) != 1:
                raise ParseError("canonical(...) takes one Hopf algebra")
            return catalog.canonical_pairing(_hopf_by_name(args[0], ring))
        if len(args) != 2:
            raise ParseError("trivial(...) takes two Hopf algebras")
        return catalog.trivial_pairing(_hopf_by_name(args[0], ring), _hopf_by_name(args[1], ring))
    if kind == "system":
        if body == "t_tail":
            t = SparseMatrix(QQ_T, 1, 1, {(0, 0): QQ_T.coerce([0, 1])})
            return ProSystem(QQ_T, [1], [], t)
        m = re.fullmatch(r"identity_(\d+)", body)
        if m and ring is not None:
            r = int(m.group(1))
            return ProSystem(ring, [r], [], SparseMatrix.identity(ring, r))
        raise ParseError(f"unknown catalog system {ref!r}")
    raise ParseError(f"no catalog objects of kind {kind!r}")
