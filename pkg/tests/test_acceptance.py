"""Acceptance suite: one PASS/FAIL line per criterion, printed at the end of the run."""
import random
import time

import pytest

from hecke_unitary.arrangement import enumerate_regions, max_orthogonal_antichain, roots_at_level
from hecke_unitary.hecke import HeckeAlgebra
from hecke_unitary.intertwine import factor_schedule, hermitian_form, inertia, long_operator
from hecke_unitary.orbits import consistency_audit
from hecke_unitary.rational import Q, is_symmetric, transpose
from hecke_unitary.rootsys import build, enumerate_group, is_hermitian
from hecke_unitary.unitarity import (
    alcove_condition_sets,
    classical_predicate,
    classify_zero_cs,
    f4_predicate,
    g2_predicate,
    predicate_input,
    representation_set,
)
from hecke_unitary.wreps import reflection_rep, regular_rep, sym2_nontrivial


def _timed(fn, *a, **kw):
    t0 = time.monotonic()
    out = fn(*a, **kw)
    return out, time.monotonic() - t0


def _alcove_matching(name, verdicts):
    """Unitary regions versus listed condition sets: (one-to-one and onto, detail)."""
    sets = []
    stray = 0
    for v in verdicts:
        hits = alcove_condition_sets(name, v.region.sample)
        if v.unitary:
            sets.append(tuple(hits))
        elif hits:
            stray += 1
    singles = [h[0] for h in sets if len(h) == 1]
    n_lists = {"E6": 2, "E7": 8, "E8": 16}[name]
    ok = len(singles) == len(sets) == n_lists and sorted(singles) == list(range(1, n_lists + 1)) and not stray
    return ok, f"{len(sets)} unitary regions hit condition sets {sorted(singles)}, nonunitary hits {stray}"


# ---------------------------------------------------------------- 1
def test_criterion_1_g2(acceptance):
    rs = build("G2")
    vs, dt = _timed(classify_zero_cs, rs, "regular")
    signature = {v.region.delta_prime for v in vs if v.unitary}
    first = {v.region.delta_prime for v in vs
             if (lambda y: 3 * y[0] + 2 * y[1] < 1)(rs.simple_pairings(v.region.sample))}
    second = {v.region.delta_prime for v in vs
              if (lambda y: 2 * y[0] + y[1] < 1 < 3 * y[0] + y[1])(rs.simple_pairings(v.region.sample))}
    ok = len(first) == len(second) == 1 and signature == first | second and dt < 5
    acceptance(1, ok, f"G2 regular: {len(signature)} unitary of {len(vs)} regions, "
                      f"equal to the two closed-form regions: {signature == first | second}; {dt:.1f}s")
    assert ok


# ---------------------------------------------------------------- 2
def test_criterion_2_f4(acceptance):
    rs = build("F4")
    vs, dt = _timed(classify_zero_cs, rs, "relevant")
    bad = [v.region.delta_prime for v in vs if v.unitary != f4_predicate(*v.region.sample)]
    ok = not bad and len(vs) == 105 and dt < 60
    acceptance(2, ok, f"F4 relevant: {sum(v.unitary for v in vs)} unitary of {len(vs)} regions, "
                      f"{len(bad)} disagreements with the closed form; {dt:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_2_f4_regular_sample(acceptance):
    rs = build("F4")
    regions = [r for r in enumerate_regions(rs).regions if r.bounded]
    picked = random.Random(2024).sample(regions, 10)
    reg = representation_set(rs, "regular")
    rel = representation_set(rs, "relevant")
    bad = 0
    for r in picked:
        a = all(inertia(hermitian_form(long_operator(rep, rs, r.sample), rep), stop_at_negative=True).negative == 0
                for rep in reg)
        b = all(inertia(hermitian_form(long_operator(rep, rs, r.sample), rep)).negative == 0 for rep in rel)
        bad += a != b
    acceptance("2b", not bad, f"F4 regular representation agrees with relevant set on {10 - bad}/10 regions")
    assert not bad


# ---------------------------------------------------------------- 3
def test_criterion_3_classical(acceptance):
    total = 0.0
    parts = []
    ok = True
    for name in ("B2", "B3", "C2", "C3", "D4"):
        rs = build(name)
        vs, dt = _timed(classify_zero_cs, rs, "regular")
        total += dt
        bad = sum(
            v.unitary != classical_predicate(rs.cartan.family, predicate_input(rs, v.region.sample)) for v in vs
        )
        ok &= bad == 0
        parts.append(f"{name} {len(vs)}/{bad}")
    ok &= total < 600
    acceptance(3, ok, f"regular vs classical predicate (regions/disagreements): {', '.join(parts)}; {total:.1f}s")
    assert ok


# ---------------------------------------------------------------- 4
def test_criterion_4_e6(acceptance):
    vs, dt = _timed(classify_zero_cs, build("E6"), "relevant")
    ok, detail = _alcove_matching("E6", vs)
    ok &= dt < 300
    acceptance(4, ok, f"E6 slice, {len(vs)} regions: {detail}; {dt:.1f}s")
    assert ok


# ---------------------------------------------------------------- 5
def test_criterion_5_e7(acceptance):
    vs, dt = _timed(classify_zero_cs, build("E7"), "relevant")
    ok, detail = _alcove_matching("E7", vs)
    ok &= dt < 3600
    acceptance(5, ok, f"E7 relevant, {len(vs)} regions: {detail}; {dt:.1f}s"
                      " (E8 runs with --include-slow)")
    assert ok


@pytest.mark.slow
def test_criterion_5_e8(acceptance):
    vs, dt = _timed(classify_zero_cs, build("E8"), "relevant")
    ok, detail = _alcove_matching("E8", vs)
    acceptance("5b", ok, f"E8 relevant, {len(vs)} regions: {detail}; {dt:.1f}s")
    assert ok


# ---------------------------------------------------------------- 6
def _hecke_identities():
    words_ok = True
    for name in ("A3", "B2", "G2"):
        H = HeckeAlgebra(build(name))
        for w in H.group.elements:
            ws = H.rs.reduced_words(w)
            base = H.r_element(ws[0])
            words_ok &= all(H.r_element(u) == base for u in ws[1:])
    literal = signed = total = 0
    for name in ("A2", "B2"):
        H = HeckeAlgebra(build(name))
        g = H.group
        for k, w in enumerate(g.elements):
            prod = H.r_element(g.elements[g.inverse_index(k)].word) * H.r_element(w.word)
            kap = H.kappa(w)
            total += 1
            literal += prod == kap
            signed += prod == kap * ((-1) ** len(w.word))
    bridge_ok = True
    rnd = random.Random(11)
    for name in ("A2", "B2", "G2"):
        rs = build(name)
        H = HeckeAlgebra(rs)
        g = enumerate_group(rs)
        inv = [g.inverse_index(k) for k in range(len(g))]
        reg = regular_rep(rs)
        for _ in range(5):
            chi = rs.from_simple_pairings([Q(rnd.randrange(1, 12), rnd.randrange(2, 13)) for _ in range(rs.rank)])
            m, _ = H.normalized_long_action(chi)
            n = len(g)
            re = transpose(tuple(tuple(m[inv[i]][inv[j]] for j in range(n)) for i in range(n)))
            bridge_ok &= re == long_operator(reg, rs, chi).matrix
    return words_ok, literal, signed, total, bridge_ok


_HECKE = {}


def _hecke():
    if not _HECKE:
        _HECKE["r"] = _hecke_identities()
    return _HECKE["r"]


@pytest.mark.xfail(strict=True, reason="r_{w^-1} r_w equals kappa_w only up to (-1)^l(w); see README")
def test_criterion_6_hecke(acceptance):
    words_ok, literal, signed, total, bridge_ok = _hecke()
    ok = words_ok and literal == total and bridge_ok
    acceptance(6, ok, f"reduced-word independence {words_ok}; r_(w^-1) r_w = kappa_w literally for "
                      f"{literal}/{total} elements of W(A2), W(B2), with sign (-1)^l(w) for {signed}/{total}; "
                      f"bridge {bridge_ok}")
    assert ok


def test_criterion_6_parts_that_hold():
    words_ok, literal, signed, total, bridge_ok = _hecke()
    assert words_ok and bridge_ok and signed == total


# ---------------------------------------------------------------- 7
def test_criterion_7_properties(acceptance, request):
    notes = []
    ok = True
    rnd = random.Random(7)

    # a_mu(0) = Id, t_j >= 0, symmetric form on the hermitian slice
    for name in ("B3", "G2", "F4", "E6"):
        rs = build(name)
        for rep in (reflection_rep(rs), sym2_nontrivial(rs)):
            zero = long_operator(rep, rs, (0,) * rs.ambient_dim).matrix
            ok &= zero == tuple(tuple(Q(int(i == j)) for j in range(rep.dim)) for i in range(rep.dim))
        for _ in range(3):
            y = [Q(rnd.randrange(0, 9), rnd.randrange(1, 9)) for _ in range(rs.rank)]
            if not rs.w0_is_minus_one:
                sig = rs.diagram_involution
                y = [y[min(i, sig[i])] for i in range(rs.rank)]
            chi = rs.from_simple_pairings(y)
            ok &= all(t >= 0 for t in factor_schedule(rs, chi, rs.longest.word))
            ok &= is_hermitian(rs, chi)
            for rep in (reflection_rep(rs), sym2_nontrivial(rs)):
                ok &= is_symmetric(hermitian_form(long_operator(rep, rs, chi), rep))
    notes.append(f"identity at 0, nonnegative schedule, symmetric forms: {ok}")

    # facet constancy on B2 and G2
    const = True
    for name in ("B2", "G2"):
        rs = build(name)
        rep = regular_rep(rs)
        for r in enumerate_regions(rs).regions:
            sigs = {inertia(hermitian_form(long_operator(rep, rs, p), rep)).as_tuple() for p in r.samples[:3]}
            const &= len(sigs) == 1
    ok &= const
    notes.append(f"facet constancy B2, G2: {const}")

    # unitary bounded regions touch a wall alpha = 0
    types = ["B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6", "E7"]
    if request.config.getoption("--include-slow"):
        types.append("E8")
    walls = True
    for name in types:
        rs = build(name)
        method = "regular" if name in ("B2", "B3", "C2", "C3", "D4", "G2") else "relevant"
        for v in classify_zero_cs(rs, method):
            if v.unitary:
                walls &= v.region.bounded and bool(v.region.zero_walls)
    ok &= walls
    notes.append(f"zero walls on unitary regions ({', '.join(types)}): {walls}")

    lemma = all(
        max_orthogonal_antichain(build(n)) == roots_at_level(build(n), (build(n).coxeter_number + 1) // 2)
        for n in ("A1", "A2", "A3", "A4", "A5", "D4", "G2", "F4")
    )
    ok &= lemma
    notes.append(f"orthogonal antichains vs middle level: {lemma}")
    acceptance(7, ok, "; ".join(notes))
    assert ok


# ---------------------------------------------------------------- 8
def test_criterion_8_orbits(acceptance):
    rep, dt = _timed(consistency_audit)
    fails = rep.failures()
    ok = rep.ok
    detail = f"orbit audit {len(rep.lines) - len(fails)}/{len(rep.lines)} checks pass; {dt:.1f}s"
    if fails:
        detail += "; failing: " + "; ".join(l.name for l in fails)
    acceptance(8, ok, detail)
    assert ok
