"""``cartier-kit`` command-line entry point.

Every command builds a report ``{"command", "inputs", "checks", "payload",
"exit_code"}``.  Exit codes: 0 when every check passes, 1 when some check
fails, 2 when an input cannot be loaded or does not meet a command's
preconditions.  ``--json`` prints the report as canonical JSON; otherwise a
short human summary is printed.  ``-o OUT`` writes the constructed object
(``dual``, ``smash``) or the JSON report (other commands) to ``OUT``.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cartier import duality_bijection, points
from .errors import (BracketingMismatch, CartierKitError, InfiniteRing,
                     InsufficientHeadroom, InvalidWindow, ParseError,
                     RingMismatch, WindowTooLarge)
from .exactlin import SparseMatrix, kron
from .hopf import dual_hopf, tensor_algebra, verify_hopf
from .modsys import IndSystem, dualize_ind, ml_verdict
from .motive import (HopfPairing, is_antimultiplicative, is_trivial_pairing,
                     mirror, psi1_matrix, psi2_matrix, smash, smash_swap_iso,
                     verify_algebra_iso, verify_hopf_pairing)
from .proalg import factorization_report, stage_quotients, verify_factorization
from .serialize import (decode_matrix, dumps, encode_algebra, encode_hopf,
                        encode_matrix, load)

DEFAULT_TAIL_WINDOW = 8


class Malformed(Exception):
    """Input problem that maps to exit code 2."""


def _report(command, inputs, checks, payload, output=None):
    code = 0 if all(checks.values()) else 1
    return {"command": command, "inputs": list(inputs), "checks": checks,
            "payload": payload, "exit_code": code}, output


# -- commands ------------------------------------------------------------------------

def cmd_check_hopf(args):
    h = load(args.file, "hopf")
    r = verify_hopf(h)
    checks = {k: r.as_dict()[k] for k in ("assoc", "unit_law", "coassoc", "counit_law",
                                          "bialgebra_compat", "antipode_law")}
    payload = {"rank": h.rank, "ring": str(h.ring),
               "commutative": r.commutative, "cocommutative": r.cocommutative}
    return _report("check-hopf", [args.file], checks, payload)


def cmd_dual(args):
    h = load(args.file, "hopf")
    r = verify_hopf(h)
    if not r.is_hopf:
        checks = {"is_hopf": False}
        return _report("dual", [args.file], checks, {"failures": r.failures()})
    d = dual_hopf(h)
    obj = encode_hopf(d)
    return _report("dual", [args.file], {"is_hopf": True}, {"dual": obj}, output=obj)


def _load_pairing(refs) -> HopfPairing:
    if len(refs) == 1:
        return load(refs[0], "pairing")
    if len(refs) != 3:
        raise Malformed("smash takes one pairing reference or three inputs A B U")
    a, b = load(refs[0], "hopf"), load(refs[1], "hopf")
    try:
        obj = json.loads(Path(refs[2]).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {refs[2]}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{refs[2]} is not valid JSON: {exc}") from exc
    if isinstance(obj, dict) and "u" in obj:
        obj = obj["u"]
    try:
        return HopfPairing(a, b, decode_matrix(obj, a.ring))
    except CartierKitError as exc:
        raise ParseError(str(exc)) from exc


def _weyl_relation(p: HopfPairing, alg) -> dict:
    if p.A.rank < 2 or p.B.rank < 2:
        return {}
    ring = p.ring
    x = kron(SparseMatrix.basis_column(ring, p.A.rank, 1), p.B.unit)
    y = kron(p.A.unit, SparseMatrix.basis_column(ring, p.B.rank, 1))
    xl, yl = p.A.basis[1], p.B.basis[1]
    holds = alg.product(y, x) == alg.product(x, y) + alg.unit
    return {f"{yl}·{xl} = {xl}·{yl} + 1": holds}


def cmd_smash(args):
    p = _load_pairing(args.inputs)
    pr = verify_hopf_pairing(p)
    checks = {f"pairing_{k}": v for k, v in pr.as_dict().items()}
    if not pr.ok:
        return _report("smash", args.inputs, checks, {"failing_diagrams": pr.failures()})
    alg = smash(p, check=False)
    other = smash(mirror(p), check=False)
    checks["associative"] = alg.is_associative()
    checks["unital"] = alg.is_unital()
    phi = smash_swap_iso(p)
    checks["swap_iso"] = verify_algebra_iso(phi, alg, other)
    checks["psi1_antimultiplicative"] = is_antimultiplicative(psi1_matrix(p), alg, other)
    psi2 = psi2_matrix(p)
    checks["psi2_involution"] = psi2 @ psi2 == SparseMatrix.identity(p.ring, psi2.rows)
    payload = {
        "rank": alg.rank,
        "basis": list(alg.basis),
        "relations": _weyl_relation(p, alg),
        "tensor_algebra": alg.mul == tensor_algebra(p.A.algebra(), p.B.algebra()).mul,
        "trivial_pairing": is_trivial_pairing(p),
        "swap_iso": encode_matrix(phi),
    }
    obj = encode_algebra(alg)
    return _report("smash", args.inputs, checks, payload, output=obj)


def cmd_points(args):
    h = load(args.hopf, "hopf")
    b = load(args.algebra, "algebra")
    try:
        pts = points(h, b)
        rep = duality_bijection(h, b)
    except (InfiniteRing, RingMismatch) as exc:
        raise Malformed(str(exc)) from exc
    checks = {"counts_equal": rep.points_count == rep.grouplikes_count,
              "bijection_verified": rep.bijection_verified}
    payload = {"points_count": rep.points_count, "grouplikes_count": rep.grouplikes_count,
               "points": [encode_matrix(f) for f in pts]}
    return _report("points", [args.hopf, args.algebra], checks, payload)


def cmd_ml_check(args):
    s = load(args.system, "system")
    dualized = isinstance(s, IndSystem)
    if dualized:
        s = dualize_ind(s)
    window = args.window
    if window is None:
        window = DEFAULT_TAIL_WINDOW if s.tail is not None else s.last
    try:
        v = ml_verdict(s, window)
    except (InvalidWindow, WindowTooLarge) as exc:
        raise Malformed(str(exc)) from exc
    checks = {f"stage_{r.alpha}_stabilized": r.stabilized_at is not None for r in v.stages}
    stages = [{"alpha": r.alpha, "status": r.status,
               "image": encode_matrix(r.image) if r.image is not None else None}
              for r in v.stages]
    payload = {"window": window, "dualized_from_ind": dualized, "stages": stages}
    return _report("ml-check", [args.system], checks, payload)


def cmd_proalg(args):
    p = load(args.presentation, "presentation")
    try:
        qs = stage_quotients(p)
        fact = factorization_report(p)
    except InsufficientHeadroom as exc:
        raise Malformed(str(exc)) from exc
    except BracketingMismatch as exc:
        return _report("proalg", [args.presentation], {"bracketing": False}, {"error": str(exc)})
    checks = {}
    quotients = []
    for q in qs:
        alg = q.algebra
        checks[f"stage_{q.alpha}_well_defined"] = q.well_defined
        checks[f"stage_{q.alpha}_associative"] = alg.is_associative()
        checks[f"stage_{q.alpha}_unital"] = alg.is_unital()
        quotients.append({"alpha": q.alpha, "beta": q.beta, "quotient_rank": q.quotient_rank,
                          "projection": encode_matrix(q.projection),
                          "induced_mul": encode_matrix(q.induced_mul),
                          "induced_unit": encode_matrix(q.induced_unit)})
    checks["factorization"] = verify_factorization(p)
    payload = {"quotients": quotients,
               "factorization_checked_at": sorted(fact)}
    return _report("proalg", [args.presentation], checks, payload)


# -- plumbing ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("-o", "--output", help="write the constructed object or report here")

    ap = argparse.ArgumentParser(prog="cartier-kit", description="Exact checks for finite Cartier duality.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-hopf", parents=[common], help="verify the Hopf algebra axioms")
    s.add_argument("file")
    s.set_defaults(run=cmd_check_hopf)

    s = sub.add_parser("dual", parents=[common], help="linear dual Hopf algebra")
    s.add_argument("file")
    s.set_defaults(run=cmd_dual)

    s = sub.add_parser("smash", parents=[common], help="smash product of a Hopf pairing")
    s.add_argument("inputs", nargs="+", metavar="INPUT", help="PAIRING, or A B U")
    s.set_defaults(run=cmd_smash)

    s = sub.add_parser("points", parents=[common], help="points and the duality bijection")
    s.add_argument("hopf")
    s.add_argument("algebra")
    s.set_defaults(run=cmd_points)

    s = sub.add_parser("ml-check", parents=[common], help="Mittag-Leffler window verdict")
    s.add_argument("system")
    s.add_argument("--window", type=int, default=None, help="inspect stages 0..K")
    s.set_defaults(run=cmd_ml_check)

    s = sub.add_parser("proalg", parents=[common], help="stage quotients of a pro-algebra")
    s.add_argument("presentation")
    s.set_defaults(run=cmd_proalg)
    return ap


def _human(report: dict) -> str:
    lines = [f"{report['command']} {' '.join(report['inputs'])}"]
    if "error" in report:
        lines.append(f"  error: {report['error']}")
    for name, ok in report.get("checks", {}).items():
        lines.append(f"  {'PASS' if ok else 'FAIL'} {name}")
    for key, value in report.get("payload", {}).items():
        if isinstance(value, (bool, int, str)):
            lines.append(f"  {key}: {value}")
        elif key == "relations":
            for rel, ok in value.items():
                lines.append(f"  relation {rel}: {'holds' if ok else 'fails'}")
        elif key == "stages":
            for st in value:
                lines.append(f"  stage {st['alpha']}: {st['status']}")
        elif key == "quotients":
            for q in value:
                lines.append(f"  A_{q['alpha']}: rank {q['quotient_rank']}")
    lines.append(f"exit {report['exit_code']}")
    return "\n".join(lines) + "\n"


def run(argv=None) -> tuple[int, str]:
    """Execute a command and return ``(exit_code, stdout_text)``."""
    args = _parser().parse_args(argv)
    output = None
    try:
        report, output = args.run(args)
    except (ParseError, Malformed) as exc:
        inputs = [v for k, v in vars(args).items() if k in ("file", "hopf", "algebra", "system", "presentation")]
        inputs += list(getattr(args, "inputs", []) or [])
        report = {"command": args.command, "inputs": inputs, "error": str(exc), "exit_code": 2}
    if args.output and report["exit_code"] != 2:
        Path(args.output).write_text(dumps(output if output is not None else report), encoding="utf-8")
    text = dumps(report) if args.json else _human(report)
    return report["exit_code"], text


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
