import dataclasses
import json

import pytest

from hecke_unitary.orbits import (
    EXC_DECLARED,
    SAMPLE_4A1,
    Factor,
    TableError,
    UnsupportedMembership,
    compare_with_centralizer,
    consistency_audit,
    cs_membership,
    explain,
    factor_member,
    find,
    hermitian_chi,
    load_tables,
    record_digest,
    tables_checksum,
    transcription_checks,
)
from hecke_unitary.rational import Q, fmt_vector
from hecke_unitary.rootsys import build

RECS = load_tables()


def rec(amb, label):
    return find(RECS, amb, label)


def test_table_sizes():
    counts = {}
    for r in RECS:
        counts[r.ambient] = counts.get(r.ambient, 0) + 1
    assert set(counts) == {"E6", "E7", "E8"}
    assert sum(counts.values()) == 133


def test_e8_e7_row():
    r = rec("E8", "E7")
    nu = Q(1, 5)
    chi = hermitian_chi(r, (nu,))
    assert chi == tuple(a + nu * b for a, b in zip((0, 1, 2, 3, 4, 5, Q(-17, 2), Q(17, 2)), build("E8").coweights[7]))
    assert [f.kind for f in r.factors] == ["A1"]


def test_e8_a4_a1_row():
    r = rec("E8", "A4+A1")
    assert [f.kind for f in r.factors] == ["A2", "T1"]
    assert r.n_slots == 3


def test_e8_4a1_row():
    r = rec("E8", "4A1")
    assert [f.kind for f in r.factors] == ["C4"]
    assert r.exception is not None and len(r.exception) == 2
    a, b, c, d = Q(1, 7), Q(1, 5), Q(1, 3), Q(2, 3)
    assert hermitian_chi(r, (a, b, c, d)) == (
        0, 1, Q(-1, 2) + a, Q(1, 2) + a, Q(-1, 2) + b, Q(1, 2) + b, -c + d, c + d,
    )


def test_chi_at_zero():
    assert hermitian_chi(rec("E8", "E8"), ()) == (0, 1, 2, 3, 4, 5, 6, 23)
    assert hermitian_chi(rec("E8", "D4"), (0,) * 4) == (0, 1, 2, 3, 0, 0, 0, 0)


@pytest.mark.parametrize(
    "amb,label,nu,member",
    [
        ("E8", "E7", (Q(1, 4),), True),
        ("E8", "E7", (Q(3, 4),), False),
        ("E8", "A4+A2+A1", (Q(1, 4),), True),
        ("E8", "A4+A2+A1", (Q(2, 5),), False),
        ("E8", "4A1", SAMPLE_4A1, True),
        ("E8", "D7(a1)", (Q(1, 4),), False),
        ("E8", "E6(a3)+A1", (Q(49, 100),), True),
        ("E8", "E6(a3)+A1", (Q(1, 2),), False),
    ],
)
def test_membership_examples(amb, label, nu, member):
    assert cs_membership(rec(amb, label), nu) == member


def test_4a1_region_two_is_outside_c4():
    m = explain(rec("E8", "4A1"), SAMPLE_4A1)
    assert m.member and m.path == "exception-region-2"
    assert not factor_member("C4", SAMPLE_4A1)


def test_a6_product_rule():
    r = rec("E8", "A6")
    for a in (Q(0), Q(1, 4), Q(49, 100), Q(1, 2), Q(3, 4)):
        for b in (Q(1, 3), Q(1, 2)):
            assert cs_membership(r, (a, b)) == (a < Q(1, 2) and b < Q(1, 2))


def test_zero_is_always_member():
    for r in RECS:
        assert cs_membership(r, (0,) * r.n_slots), r.cite()


def test_declared_exceptions_are_present():
    for amb, labels in EXC_DECLARED.items():
        for lab in labels:
            r = rec(amb, lab)
            assert r.declared_exception
            assert r.exception is not None or r.unsupported


def test_exceptions_without_formula_are_flagged():
    for amb, lab in [("E7", "A2+3A1"), ("E8", "D4(a1)+A2"), ("E8", "A3+2A1")]:
        r = rec(amb, lab)
        assert r.exception is None and r.unsupported
        assert cs_membership(r, (0,) * r.n_slots)
        with pytest.raises(UnsupportedMembership):
            explain(r, (Q(1, 10),) * r.n_slots)


def test_starred_formula_outside_declared_list():
    r = rec("E7", "A2+2A1")
    assert r.exception is not None and not r.declared_exception and r.starred


def test_centralizer_factor_reading_of_e8_a2_2a1():
    r = rec("E8", "A2+2A1")
    size, exc_only, z_only = compare_with_centralizer(r)
    assert exc_only == 0 and z_only > 0
    # with a plain A1 first factor the exception would not be smaller
    literal = dataclasses.replace(r, factors=(Factor("A1", (0,)),) + r.factors[1:])
    _, exc_only, _ = compare_with_centralizer(literal)
    assert exc_only > 0


def test_factor_predicates():
    assert factor_member("A1l", (Q(3, 4),))
    assert not factor_member("A1", (Q(3, 4),))
    assert factor_member("T2", (0, 0)) and not factor_member("T1", (Q(1, 9),))
    assert factor_member("A3", (Q(1, 3), 0, 0)) and not factor_member("A3", (Q(1, 3), Q(1, 5), 0))
    assert factor_member("A2", (Q(1, 3), Q(1, 5)), hermitian=True)
    assert factor_member("G2", (Q(1, 6), Q(1, 6)))
    assert factor_member("F4", (Q(2, 5), Q(1, 8), Q(1, 16), Q(1, 32)))


def test_transcription_checks_pass():
    assert all(not transcription_checks(r) for r in RECS)


def test_audit_passes():
    rep = consistency_audit(RECS)
    assert rep.ok, [l.to_json() for l in rep.failures()]


def _raw():
    from hecke_unitary.orbits import default_tables_path

    return json.loads(default_tables_path().read_text())


def _write(tmp_path, doc):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    return p


def test_corrupted_row_is_cited(tmp_path):
    doc = _raw()
    doc["records"][40]["chi_affine"]["constant"][0] = "9"
    with pytest.raises(TableError, match=r"row 41 \(E7"):
        load_tables(_write(tmp_path, doc))


def test_resealed_corruption_fails_audit_with_citation(tmp_path):
    doc = _raw()
    r = doc["records"][40]
    r["chi_affine"]["constant"][1] = "1/3"
    r["digest"] = record_digest(r)
    doc["checksum"] = tables_checksum(doc["records"])
    rep = consistency_audit(load_tables(_write(tmp_path, doc)))
    assert not rep.ok
    assert any("row 41" in l.detail for l in rep.failures())


def test_checksum_and_duplicates(tmp_path):
    doc = _raw()
    doc["checksum"] = "0" * 16
    with pytest.raises(TableError, match="checksum"):
        load_tables(_write(tmp_path, doc))
    doc = _raw()
    doc["records"].append(doc["records"][0])
    doc["checksum"] = tables_checksum(doc["records"])
    with pytest.raises(TableError, match="duplicate"):
        load_tables(_write(tmp_path, doc))


def test_wrong_parameter_count():
    with pytest.raises(ValueError):
        cs_membership(rec("E8", "E7"), (Q(1, 4), Q(1, 4)))


def test_membership_json():
    m = explain(rec("E8", "E7"), (Q(1, 4),))
    d = m.to_json()
    assert d["member"] and d["path"] == "centralizer"
    assert d["factors"] == [{"kind": "A1", "nu": ["1/4"], "member": True}]
    assert d["chi"] == fmt_vector(m.chi)
