"""Orbit tables for E6/E7/E8 and complementary-series membership.

A record maps a nu-string to an infinitesimal character chi = h/2 + nu and
names the centralizer factors that own consecutive slots of nu. Membership is
the conjunction of factor predicates, except for records that carry explicit
region inequalities.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .rational import ONE, ZERO, Q, fmt, fmt_vector, q
from .rootsys import build, is_hermitian
from .unitarity import alcove_predicate, classical_predicate, g2_predicate, f4_predicate

HALF = Q(1, 2)

# Orbits singled out as exceptions to the centralizer rule, per ambient type.
EXC_DECLARED = {
    "E7": ("A2+3A1",),
    "E8": ("A4+A2+A1", "A4+A2", "D4(a1)+A2", "A3+2A1", "A2+2A1", "4A1"),
}
# The one exception whose set is larger than the centralizer's.
LARGER_EXCEPTION = ("E8", "4A1")

RELATIONS = ("<", "<=", ">", ">=", "=")


class TableError(ValueError):
    """Malformed orbit data; the message cites the offending row."""


class UnsupportedMembership(RuntimeError):
    """The tables do not determine membership at this parameter."""


# ---------------------------------------------------------------- factors
def factor_slot_count(kind: str, hermitian: bool = False) -> int:
    if kind == "A1l":
        return 1
    if kind in ("G2",):
        return 2
    if kind == "F4":
        return 4
    if kind in ("E6", "E7"):
        return int(kind[1])
    fam, k = kind[0], kind[1:]
    if fam not in "ABCDT" or not k.isdigit() or int(k) < 1:
        raise TableError(f"unknown centralizer factor {kind!r}")
    k = int(k)
    if hermitian:
        if fam == "T":
            return 0
        if fam == "A":
            return (k + 1) // 2
    return k


def assign_slots(rec: dict) -> list:
    """Factors consume nu indices in the order they are written."""
    out, nxt = [], 0
    herm = rec.get("hermitian_slots", False)
    for f in rec["factors"]:
        kind = f["kind"] if isinstance(f, dict) else f
        n = factor_slot_count(kind, herm)
        out.append({"kind": kind, "slots": list(range(nxt, nxt + n))})
        nxt += n
    return out


def _strip(rec: dict) -> dict:
    return {k: v for k, v in rec.items() if k != "digest"}


def record_digest(rec: dict) -> str:
    blob = json.dumps(_strip(rec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def tables_checksum(recs: Sequence[dict]) -> str:
    h = hashlib.sha256()
    for r in recs:
        h.update(record_digest(r).encode())
    return h.hexdigest()


# ---------------------------------------------------------------- records
@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    rel: str
    rhs: object

    def holds(self, nu) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, nu)), ZERO)
        r = self.rel
        if r == "<":
            return lhs < self.rhs
        if r == "<=":
            return lhs <= self.rhs
        if r == ">":
            return lhs > self.rhs
        if r == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class Factor:
    kind: str
    slots: tuple


@dataclass(frozen=True)
class OrbitRecord:
    ambient: str
    label: str
    constant: tuple
    columns: tuple  # one ambient vector per nu slot
    factors: tuple
    exception: Optional[tuple]  # tuple of regions, each a tuple of Constraint
    hermitian_slots: bool
    starred: bool
    provenance: str
    unsupported: Optional[str] = None
    repairs: tuple = ()
    row: int = 0

    @property
    def n_slots(self) -> int:
        return len(self.columns)

    @property
    def declared_exception(self) -> bool:
        return self.label in EXC_DECLARED.get(self.ambient, ())

    def cite(self) -> str:
        return f"row {self.row} ({self.ambient} {self.label}; {self.provenance})"


def _vec8(x, where):
    if not isinstance(x, list) or len(x) != 8:
        raise TableError(f"{where}: expected 8 coordinates")
    try:
        return tuple(q(s) for s in x)
    except (TypeError, ValueError) as exc:
        raise TableError(f"{where}: {exc}") from None


def _parse_record(i: int, raw: dict) -> OrbitRecord:
    where = f"row {i}"
    try:
        amb, label = raw["ambient"], raw["label"]
        where = f"row {i} ({amb} {label})"
        chi = raw["chi_affine"]
        const = _vec8(chi["constant"], where + " constant")
        cols = tuple(_vec8(c, f"{where} column {j + 1}") for j, c in enumerate(chi["columns"]))
        herm = bool(raw.get("hermitian_slots", False))
        factors = []
        for f in raw["factors"]:
            kind = f["kind"]
            n = factor_slot_count(kind, herm)
            slots = tuple(f["slots"])
            if len(slots) != n:
                raise TableError(f"{where}: factor {kind} needs {n} slots, has {len(slots)}")
            factors.append(Factor(kind, slots))
    except KeyError as exc:
        raise TableError(f"{where}: missing field {exc}") from None
    if amb not in ("E6", "E7", "E8"):
        raise TableError(f"{where}: unknown ambient type {amb!r}")
    flat = [s for f in factors for s in f.slots]
    unsupported = raw.get("unsupported")
    if flat != list(range(len(flat))):
        raise TableError(f"{where}: factor slots are not consecutive")
    if len(flat) != len(cols) and not unsupported:
        raise TableError(f"{where}: {len(cols)} parameters but factors own {len(flat)} slots")
    exc = raw.get("exception")
    regions = None
    if exc is not None:
        regions = []
        for reg in exc:
            cons = []
            for c in reg:
                if c.get("rel") not in RELATIONS:
                    raise TableError(f"{where}: bad relation {c.get('rel')!r}")
                coeffs = tuple(q(x) for x in c["coeffs"])
                if len(coeffs) != len(cols):
                    raise TableError(f"{where}: exception constraint has {len(coeffs)} coefficients")
                cons.append(Constraint(coeffs, c["rel"], q(c["rhs"])))
            regions.append(tuple(cons))
        regions = tuple(regions)
    digest = raw.get("digest")
    if digest is not None and digest != record_digest(raw):
        raise TableError(f"{where}: content does not match its recorded digest")
    return OrbitRecord(
        amb, label, const, cols, tuple(factors), regions, herm, bool(raw.get("starred")),
        raw.get("provenance", ""), unsupported, tuple(raw.get("repairs", ())), i,
    )


def default_tables_path():
    return resources.files("hecke_unitary").joinpath("data/orbits.json")


def load_tables(path=None, verify_checksum: bool = True) -> list:
    src = Path(path) if path is not None else default_tables_path()
    try:
        doc = json.loads(src.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise TableError(f"cannot read orbit tables: {exc}") from None
    if not isinstance(doc, dict) or "records" not in doc:
        raise TableError("orbit tables: top-level object with 'records' expected")
    raws = doc["records"]
    recs = [_parse_record(i + 1, r) for i, r in enumerate(raws)]
    if verify_checksum and doc.get("checksum") != tables_checksum(raws):
        raise TableError("orbit tables: checksum mismatch")
    seen = set()
    for r in recs:
        key = (r.ambient, normalize_label(r.label))
        if key in seen:
            raise TableError(f"{r.cite()}: duplicate label")
        seen.add(key)
    return recs


def normalize_label(label: str) -> str:
    return label.replace("+", "").replace(" ", "").replace("_", "")


def find(records, ambient: str, label: str) -> OrbitRecord:
    key = normalize_label(label)
    for r in records:
        if r.ambient == ambient.upper() and normalize_label(r.label) == key:
            return r
    raise KeyError(f"no orbit {label!r} in {ambient}")


# ---------------------------------------------------------------- evaluation
def _check_len(rec: OrbitRecord, nu) -> tuple:
    nu = tuple(q(x) for x in nu)
    if len(nu) != rec.n_slots:
        raise ValueError(f"{rec.ambient} {rec.label} takes {rec.n_slots} parameters, got {len(nu)}")
    return nu


def hermitian_chi(rec: OrbitRecord, nu: Sequence) -> tuple:
    nu = _check_len(rec, nu)
    out = list(rec.constant)
    for x, col in zip(nu, rec.columns):
        if x:
            for i, c in enumerate(col):
                out[i] += x * c
    return tuple(out)


def _dominant(name: str, chi):
    rs = build(name)
    return rs, rs.dominant_conjugate(chi)[0]


def factor_member(kind: str, values: Sequence, hermitian: bool = False) -> bool:
    """0-complementary series of one centralizer factor at its nu-slots."""
    vals = tuple(q(x) for x in values)
    if kind.startswith("T"):
        return all(x == 0 for x in vals)
    if kind == "A1":
        return ZERO <= vals[0] < HALF
    if kind == "A1l":
        return ZERO <= vals[0] < ONE
    fam = kind[0]
    if fam == "A":
        k = int(kind[1:])
        if hermitian:
            free = vals
        else:
            n_zero = k - k // 2
            free, tail = vals[: k - n_zero], vals[k - n_zero :]
            if any(tail):
                return False
        return all(ZERO <= x < HALF for x in free)
    if fam in "BCD":
        return classical_predicate(fam, tuple(sorted(abs(x) for x in vals)))
    if kind == "G2":
        rs = build("G2")
        chi = rs.from_simple_pairings(vals)
        dom = rs.dominant_conjugate(chi)[0]
        return g2_predicate(*rs.simple_pairings(dom))
    if kind == "F4":
        _, dom = _dominant("F4", vals)
        return f4_predicate(*dom)
    if kind == "E6":
        chi = vals[:5] + (-vals[5], -vals[5], vals[5])
        rs = build("E6")
        if not is_hermitian(rs, chi):
            return False
        return alcove_predicate("E6", rs.dominant_conjugate(chi)[0])
    if kind == "E7":
        chi = vals[:6] + (-vals[6], vals[6])
        _, dom = _dominant("E7", chi)
        return alcove_predicate("E7", dom)
    raise ValueError(f"unknown factor kind {kind!r}")


@dataclass
class Membership:
    member: bool
    path: str  # "centralizer", "exception-region-k", "exception-none", "tempered"
    factors: list = field(default_factory=list)  # (kind, slot values, verdict)
    chi: tuple = ()

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "path": self.path,
            "chi": fmt_vector(self.chi),
            "factors": [
                {"kind": k, "nu": fmt_vector(v), "member": m} for k, v, m in self.factors
            ],
        }


def centralizer_member(rec: OrbitRecord, nu) -> tuple:
    nu = _check_len(rec, nu)
    parts = []
    for f in rec.factors:
        vals = tuple(nu[s] for s in f.slots)
        parts.append((f.kind, vals, factor_member(f.kind, vals, rec.hermitian_slots)))
    return all(p[2] for p in parts), parts


def explain(rec: OrbitRecord, nu: Sequence) -> Membership:
    nu = _check_len(rec, nu)
    chi = hermitian_chi(rec, nu)
    if not any(nu):
        # nu = 0 is tempered, hence unitary
        return Membership(True, "tempered", [], chi)
    if rec.exception is not None:
        for k, region in enumerate(rec.exception, start=1):
            if all(c.holds(nu) for c in region):
                return Membership(True, f"exception-region-{k}", [], chi)
        return Membership(False, "exception-none", [], chi)
    if rec.unsupported:
        raise UnsupportedMembership(f"{rec.ambient} {rec.label}: {rec.unsupported}")
    ok, parts = centralizer_member(rec, nu)
    return Membership(ok, "centralizer", parts, chi)


def cs_membership(rec: OrbitRecord, nu: Sequence) -> bool:
    return explain(rec, nu).member


# ---------------------------------------------------------------- audit
# Maximal-parabolic rows: (label, coweight index of the direction, endpoint or None for torus rows).
MAXPAR_E8 = (
    ("E7", 8, HALF),
    ("E7(a1)", 8, HALF),
    ("D7", 1, HALF),
    ("E7(a2)", 8, HALF),
    ("A7", 2, HALF),
    ("E7(a5)", 8, HALF),
    ("E6+A1", 7, HALF),
    ("E7(a3)", 8, HALF),
    ("E7(a4)", 8, HALF),
    ("A6+A1", 3, HALF),
    ("E6(a3)+A1", 7, HALF),
    ("D5(a1)+A2", 6, HALF),
    ("A4+A3", 5, HALF),
    ("A4+A2+A1", 4, Q(3, 10)),
    ("D7(a1)", 1, None),
    ("E6(a1)+A1", 7, None),
    ("D7(a2)", 1, None),
    ("D5+A2", 6, None),
)

# An interior sample of the second 4A1 region.
SAMPLE_4A1 = (Q(1, 4), Q(7, 20), Q(3, 5), Q(7, 10))


@dataclass
class AuditLine:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class AuditReport:
    lines: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.lines.append(AuditLine(name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(l.ok for l in self.lines)

    def failures(self) -> list:
        return [l for l in self.lines if not l.ok]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [l.to_json() for l in self.lines]}


def _grid(k: int, den: int = 22):
    """Points with coordinates (2i+1)/den in (0, 1), avoiding most walls."""
    vals = [Q(2 * i + 1, den) for i in range(den // 2)]
    pts = [()]
    for _ in range(k):
        pts = [p + (v,) for p in pts for v in vals]
    return pts


def region_interior_points(rec: OrbitRecord, box=2) -> list:
    """One interior point per exception region, inside the dominant chamber of the slots."""
    from .lp import maximize

    n = rec.n_slots
    dom_rows = []
    for f in rec.factors:
        if f.kind[0] in "BC" and f.kind != "B":
            for a, b in zip(f.slots, f.slots[1:]):
                r = [ZERO] * (n + 1)
                r[a], r[b] = ONE, -ONE
                dom_rows.append((r, ZERO))
    pts = []
    for region in rec.exception or ():
        A, b = [], []
        for c in region:
            co = list(c.coeffs)
            if c.rel in ("<", "<=", "="):
                A.append(co + [ONE if c.rel == "<" else ZERO])
                b.append(c.rhs)
            if c.rel in (">", ">=", "="):
                A.append([-x for x in co] + [ONE if c.rel == ">" else ZERO])
                b.append(-c.rhs)
        for r, rhs in dom_rows:
            A.append(r)
            b.append(rhs)
        for i in range(n):
            r = [ZERO] * (n + 1)
            r[i] = ONE
            A.append(r)
            b.append(q(box))
        A.append([ZERO] * n + [ONE])
        b.append(ONE)
        res = maximize([ZERO] * n + [ONE], A, b)
        if res.status == "optimal" and res.value > 0:
            pts.append(tuple(res.x[:n]))
    return pts


def _span_ok(rec: OrbitRecord) -> bool:
    rs = build(rec.ambient)
    return rs.in_span(rec.constant) and all(rs.in_span(c) for c in rec.columns)


def transcription_checks(rec: OrbitRecord) -> list:
    """Structural facts every row must satisfy: problems found, as strings."""
    rs = build(rec.ambient)
    out = []
    if not _span_ok(rec):
        out.append("not in the span of the roots")
        return out
    h2 = rec.constant
    dom = rs.dominant_conjugate(h2)[0]
    if any(p not in (0, HALF, 1) for p in rs.simple_pairings(dom)):
        out.append("nu=0 point is not half a neutral element (pairings outside {0,1/2,1})")
    for j, col in enumerate(rec.columns, start=1):
        if sum((a * b for a, b in zip(col, h2)), ZERO) != 0:
            out.append(f"direction {j} is not orthogonal to h")
    if rec.hermitian_slots:
        probes = [(ZERO,) * rec.n_slots, tuple(Q(1, 7 + j) for j in range(rec.n_slots))]
        for p in probes:
            if not is_hermitian(rs, rs.dominant_conjugate(hermitian_chi(rec, p))[0]):
                out.append(f"chi at nu={fmt_vector(p)} is not hermitian")
    return out


def factor_dominant(kind: str, values: Sequence) -> bool:
    """Whether a slot string lies in the chamber the printed inequalities assume."""
    vals = tuple(q(x) for x in values)
    if kind.startswith("T"):
        return True
    if kind[0] in "BC" or kind == "A1" or kind == "A1l":
        return all(x >= 0 for x in vals) and all(a <= b for a, b in zip(vals, vals[1:]))
    if kind[0] == "D":
        return abs(vals[0]) <= vals[1] and all(a <= b for a, b in zip(vals[1:], vals[2:]))
    if kind[0] == "A":
        return all(x >= 0 for x in vals)
    if kind == "G2":
        return all(x >= 0 for x in vals)
    if kind == "F4":
        a, b, c, d = vals
        return a - b - c - d >= 0 and b >= c >= d >= 0
    return True


def record_dominant(rec: OrbitRecord, nu) -> bool:
    return all(factor_dominant(f.kind, tuple(nu[s] for s in f.slots)) for f in rec.factors)


def compare_with_centralizer(rec: OrbitRecord) -> tuple:
    """(points, exception-only count, centralizer-only count) over dominant test points."""
    pts = [p for p in _grid(rec.n_slots) + region_interior_points(rec) if record_dominant(rec, p)]
    exc_only = z_only = 0
    for p in pts:
        a = cs_membership(rec, p)
        b = centralizer_member(rec, p)[0]
        exc_only += a and not b
        z_only += b and not a
    return len(pts), exc_only, z_only


def consistency_audit(records=None) -> AuditReport:
    recs = load_tables() if records is None else records
    rep = AuditReport()

    for r in recs:
        probs = transcription_checks(r)
        detail = f"{r.cite()}: " + "; ".join(probs) if probs else r.provenance
        rep.add(f"transcription {r.ambient} {r.label}", not probs, detail)

    for r in recs:
        try:
            ok = cs_membership(r, (ZERO,) * r.n_slots)
        except Exception as exc:  # noqa: BLE001 - reported, not raised
            ok, msg = False, str(exc)
        else:
            msg = ""
        rep.add(f"nu=0 accepted {r.ambient} {r.label}", ok, msg)

    e8 = build("E8")
    cw = e8.coweights
    for label, idx, end in MAXPAR_E8:
        try:
            r = find(recs, "E8", label)
        except KeyError as exc:
            rep.add(f"maxpar E8 {label}", False, str(exc))
            continue
        if r.n_slots != 1:
            rep.add(f"maxpar E8 {label}", False, "expected a single parameter")
            continue
        rep.add(
            f"maxpar E8 {label} direction is coweight {idx}",
            tuple(r.columns[0]) == tuple(cw[idx - 1]),
            fmt_vector(r.columns[0]),
        )
        if end is None:
            probes = [Q(1, 100), Q(1, 4), HALF, ONE]
            bad = [fmt(x) for x in probes if cs_membership(r, (x,))]
            rep.add(f"maxpar E8 {label} torus: only nu=0", not bad, f"accepted at {bad}" if bad else "{0}")
        else:
            inside = [ZERO, end / 2, end - Q(1, 100)]
            outside = [end, end + Q(1, 100), ONE]
            bad = [fmt(x) for x in inside if not cs_membership(r, (x,))]
            bad += [fmt(x) for x in outside if cs_membership(r, (x,))]
            rep.add(f"maxpar E8 {label} endpoint {fmt(end)}", not bad, f"wrong at {bad}" if bad else "")

    # product rule: A6 in E8 has centralizer 2A1
    r = find(recs, "E8", "A6")
    bad = [p for p in _grid(2, 10) if cs_membership(r, p) != (p[0] < HALF and p[1] < HALF)]
    rep.add("E8 A6 product rule [0,1/2)^2", not bad, f"{len(bad)} grid points disagree" if bad else "")

    # exception set bookkeeping
    for amb, labels in EXC_DECLARED.items():
        for lab in labels:
            try:
                r = find(recs, amb, lab)
            except KeyError:
                rep.add(f"exception {amb} {lab} present", False, "missing from tables")
                continue
            has = r.exception is not None
            rep.add(
                f"exception {amb} {lab} present",
                has or bool(r.unsupported),
                "region formula attached" if has else f"flagged: {r.unsupported}",
            )

    r = find(recs, "E8", "4A1")
    acc = cs_membership(r, SAMPLE_4A1)
    c4 = factor_member("C4", SAMPLE_4A1)
    path = explain(r, SAMPLE_4A1).path
    rep.add("E8 4A1 region-2 sample accepted, C4 rejects", acc and not c4 and path == "exception-region-2",
            f"member={acc} path={path} C4={c4}")

    # smaller / larger than the centralizer's 0-complementary series
    for r in recs:
        if r.exception is None:
            continue
        size, in_exc_not_z, in_z_not_exc = compare_with_centralizer(r)
        if (r.ambient, r.label) == LARGER_EXCEPTION:
            ok = in_z_not_exc == 0 and in_exc_not_z > 0
            claim = "larger"
        else:
            ok = in_exc_not_z == 0 and in_z_not_exc > 0
            claim = "smaller"
        rep.add(
            f"exception {r.ambient} {r.label} is {claim} than the centralizer series",
            ok,
            f"grid {size}: exception-only {in_exc_not_z}, centralizer-only {in_z_not_exc}",
        )
    return rep
