"""Command-line front end: ``hecke-unitary <subcommand> ...``.

Parameter coordinates per type:
  G2      (nu1, nu2) = pairings with the short and long simple roots
  F4      (nu1, nu2, nu3, nu4) = ambient coordinates in R^4
  A_n     n+1 ambient coordinates, or n simple-root pairings
  B, C, D ambient coordinates in R^n
  E6, E7, E8 ambient coordinates in R^8

Exit codes: 0 ok, 1 verification mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .arrangement import enumerate_regions, locate
from .intertwine import hermitian_form, inertia, is_reducible, long_operator
from .orbits import TableError, UnsupportedMembership, consistency_audit, explain, find, load_tables
from .rational import fmt_matrix, fmt_vector, parse_vector
from .rootsys import CartanType, GroupTooLarge, build, is_hermitian
from .unitarity import (
    DEFAULT_CAP,
    closed_form,
    cross_validate,
    classify_zero_cs,
    g2_chi,
    representation_set,
    resolve_method,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

FAST_TYPES = ("B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6")


class UsageError(Exception):
    pass


def _emit(payload: dict, fmt: str, text_lines: Sequence[str]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in text_lines))


def _log(msg: str) -> None:
    sys.stderr.write(msg + "\n")
    sys.stderr.flush()


def _root_system(args):
    if not args.type:
        raise UsageError("--type is required")
    try:
        return build(CartanType.parse(args.type, args.rank))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _params(text: Optional[str], flag: str) -> tuple:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_vector(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def ambient_point(rs, params: Sequence) -> tuple:
    """Turn user parameters into an ambient point, following the per-type conventions."""
    f = rs.cartan.family
    if f == "G":
        if len(params) != 2:
            raise UsageError("G2 takes two parameters (nu1, nu2)")
        return g2_chi(*params)
    if len(params) == rs.ambient_dim:
        return tuple(params)
    if f == "A" and len(params) == rs.rank:
        return rs.from_simple_pairings(params)
    raise UsageError(f"{rs.cartan} takes {rs.ambient_dim} coordinates, got {len(params)}")


# ---------------------------------------------------------------- zero-cs
def cmd_zero_cs(args) -> int:
    rs = _root_system(args)
    method = resolve_method(rs, args.method)
    if method == "regular":
        try:
            representation_set(rs, "regular", DEFAULT_CAP)
        except GroupTooLarge as exc:
            raise UsageError(f"method regular is unavailable for {rs.cartan}: {exc}") from None
    start = time.monotonic()

    def progress(k, n):
        if k % 500 == 0 or k == n:
            _log(f"[{rs.cartan}] classified {k}/{n} regions ({time.monotonic() - start:.0f}s)")

    verdicts = classify_zero_cs(rs, method, progress=progress, threads=args.threads)
    unitary = [v for v in verdicts if v.unitary]
    payload = {
        "type": str(rs.cartan),
        "method": method,
        "regions": len(verdicts),
        "unitary_regions": len(unitary),
        "verdicts": [v.to_json() for v in verdicts],
    }
    lines = [f"{rs.cartan} method={method} regions={len(verdicts)} unitary={len(unitary)}"]
    for v in unitary:
        lines.append(
            "  unitary delta'=%s sample=(%s)"
            % (list(v.region.delta_prime), ", ".join(fmt_vector(v.region.sample)))
        )
    _emit(payload, args.format, lines)
    return EXIT_OK


# ---------------------------------------------------------------- check
def cmd_check(args) -> int:
    rs = _root_system(args)
    chi = ambient_point(rs, _params(args.param, "--param"))
    dom, _ = rs.dominant_conjugate(chi)
    herm = is_hermitian(rs, dom)
    red = is_reducible(rs, dom)
    loc = locate(rs, dom)
    method = resolve_method(rs, args.method)
    payload = {
        "type": str(rs.cartan),
        "chi": fmt_vector(chi),
        "dominant": fmt_vector(dom),
        "hermitian": herm,
        "reducible": red,
        "region": None if loc is None else {"delta": list(loc[0]), "delta_prime": list(loc[1])},
        "method": method,
    }
    status = EXIT_OK
    if herm:
        witnesses, ops = {}, {}
        for rep in representation_set(rs, method, DEFAULT_CAP):
            op = long_operator(rep, rs, dom)
            witnesses[rep.name] = inertia(hermitian_form(op, rep))
            if args.dump_operators:
                ops[rep.name] = fmt_matrix(op.matrix)
        semidef = all(w.negative == 0 for w in witnesses.values())
        payload["witnesses"] = {k: w.to_json() for k, w in witnesses.items()}
        payload["unitary"] = semidef
        if args.dump_operators:
            payload["operators"] = ops
        if loc is not None:
            # an open region: the closed form is an independent second opinion
            cf = closed_form(rs, dom)
            payload["closed_form"] = cf
            if cf != semidef:
                status = EXIT_MISMATCH
    else:
        payload["unitary"] = False
    payload["zero_complementary"] = bool(payload["unitary"] and not red)
    lines = [
        f"{rs.cartan} chi=({', '.join(payload['dominant'])})",
        f"  hermitian={herm} reducible={red} unitary={payload['unitary']}",
    ]
    if "closed_form" in payload:
        lines.append(f"  closed_form={payload['closed_form']}")
    for name, mat in payload.get("operators", {}).items():
        lines.append(f"  {name}:")
        lines.extend("    " + " ".join(row) for row in mat)
    if status:
        lines.append("  MISMATCH between signature and closed form")
    _emit(payload, args.format, lines)
    return status


# ---------------------------------------------------------------- orbit-check
def _tables(args):
    try:
        return load_tables(args.tables)
    except TableError as exc:
        _log(f"error: {exc}")
        raise SystemExit(EXIT_MISMATCH) from None


def cmd_orbit_check(args) -> int:
    if not args.type or not args.orbit:
        raise UsageError("--type and --orbit are required")
    recs = _tables(args)
    try:
        rec = find(recs, args.type, args.orbit)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    nu = _params(args.nu, "--nu")
    try:
        m = explain(rec, nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except UnsupportedMembership as exc:
        _log(f"error: {exc}")
        return EXIT_MISMATCH
    payload = {"type": rec.ambient, "orbit": rec.label, "nu": fmt_vector(nu), **m.to_json()}
    lines = [
        f"{rec.ambient} {rec.label} nu=({', '.join(fmt_vector(nu))})",
        f"  member={m.member} path={m.path}",
    ]
    for kind, vals, ok in m.factors:
        lines.append(f"  factor {kind} ({', '.join(fmt_vector(vals))}) member={ok}")
    _emit(payload, args.format, lines)
    return EXIT_OK


# ---------------------------------------------------------------- regions
def cmd_regions(args) -> int:
    rs = _root_system(args)
    rep = enumerate_regions(rs)
    payload = {
        "type": str(rs.cartan),
        "on_slice": rep.on_slice,
        "regions": [r.to_json() for r in rep.regions],
        "dropped_antichains": len(rep.dropped),
    }
    lines = [f"{rs.cartan} regions={len(rep.regions)} dropped={len(rep.dropped)}"]
    for r in rep.regions:
        lines.append(f"  delta'={list(r.delta_prime)} bounded={r.bounded} walls={list(r.zero_walls)}")
    _emit(payload, args.format, lines)
    return EXIT_OK


# ---------------------------------------------------------------- audit / verify-tables
def _audit_payload(args):
    report = consistency_audit(_tables(args))
    lines = [f"{'PASS' if l.ok else 'FAIL'} {l.name}" + (f" | {l.detail}" if l.detail else "") for l in report.lines]
    return report, lines


def cmd_audit(args) -> int:
    report, lines = _audit_payload(args)
    lines.append(f"audit {'ok' if report.ok else 'FAILED'}: {len(report.failures())} failures")
    _emit(report.to_json(), args.format, lines)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def slow_types(choice: Optional[str]) -> tuple:
    return {None: (), "E7": ("E7",), "E8": ("E8",), "all": ("E7", "E8")}[choice]


def cmd_verify_tables(args) -> int:
    names = FAST_TYPES + slow_types(args.include_slow)
    _tables(args)  # a malformed file should fail before the long sweeps
    matrix, lines, ok = [], [], True
    for name in names:
        rs = build(name)
        t0 = time.monotonic()
        _log(f"[verify] {name} ...")
        cr = cross_validate(rs, args.method, threads=args.threads)
        _log(f"[verify] {name} done in {time.monotonic() - t0:.1f}s")
        matrix.append(cr.to_json())
        ok &= cr.ok
        lines.append(
            f"{'PASS' if cr.ok else 'FAIL'} {name} method={cr.method} regions={cr.regions} "
            f"unitary={cr.unitary_regions} disagreements={len(cr.disagreements)}"
        )
    report, audit_lines = _audit_payload(args)
    ok &= report.ok
    lines.append(f"{'PASS' if report.ok else 'FAIL'} orbit tables audit ({len(report.lines)} checks)")
    lines.extend("  " + l for l in audit_lines if l.startswith("FAIL"))
    _emit({"ok": ok, "cross_validation": matrix, "audit": report.to_json()}, args.format, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------- parser
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Cartan type, e.g. G2, C3, E8")
    common.add_argument("--rank", type=int, help="rank, when --type is a bare family letter")
    common.add_argument("--method", choices=("regular", "relevant", "auto"), default="auto")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tables", help="orbit tables file replacing the bundled one")
    common.add_argument("--threads", type=int, default=1)

    p = _Parser(prog="hecke-unitary", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("zero-cs", parents=[common], help="classify every region of the dominant chamber")
    c = sub.add_parser("check", parents=[common], help="unitarity of one parameter")
    c.add_argument("--param", help="comma-separated rationals, e.g. 1/4,1/3,2/5")
    c.add_argument("--dump-operators", action="store_true", help="include operator matrices")
    o = sub.add_parser("orbit-check", parents=[common], help="orbit complementary-series membership")
    o.add_argument("--orbit", help="Bala-Carter label, e.g. A4+A2+A1")
    o.add_argument("--nu", help="comma-separated rationals")
    sub.add_parser("regions", parents=[common], help="list regions with sample points")
    v = sub.add_parser("verify-tables", parents=[common], help="cross-validate closed forms and audit tables")
    v.add_argument(
        "--include-slow", nargs="?", const="E7", choices=("E7", "E8", "all"), default=None,
        help="also sweep E7 (default), E8 or both",
    )
    sub.add_parser("audit", parents=[common], help="consistency audit of the orbit tables")
    return p


COMMANDS = {
    "zero-cs": cmd_zero_cs,
    "check": cmd_check,
    "orbit-check": cmd_orbit_check,
    "regions": cmd_regions,
    "verify-tables": cmd_verify_tables,
    "audit": cmd_audit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        _log("error: --threads must be positive")
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        _log(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
