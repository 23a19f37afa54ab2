import json
import subprocess
import sys

import pytest

from hecke_unitary.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("name,count", [("G2", 2), ("F4", 2), ("B3", 2), ("E6", 2)])
def test_zero_cs_counts(capsys, name, count):
    code, d = run_json(capsys, "zero-cs", "--type", name)
    assert code == 0 and d["unitary_regions"] == count


@pytest.mark.slow
def test_zero_cs_e8(capsys):
    code, d = run_json(capsys, "zero-cs", "--type", "E8", "--method", "relevant")
    assert code == 0 and d["unitary_regions"] == 16


def test_zero_cs_regular_refused_for_e7(capsys):
    assert main(["zero-cs", "--type", "E7", "--method", "regular"]) == 2


def test_check_examples(capsys):
    code, d = run_json(capsys, "check", "--type", "G2", "--param", "1/6,1/6")
    assert code == 0 and d["unitary"] and d["closed_form"]
    code, d = run_json(capsys, "check", "--type", "C3", "--param", "1/4,1/3,2/5")
    assert code == 0 and d["unitary"]
    code, d = run_json(capsys, "check", "--type", "A2", "--param", "0,0")
    assert code == 0 and d["unitary"] and not d["reducible"]


def test_check_auto_dominates(capsys):
    code, d = run_json(capsys, "check", "--type", "C3", "--param=-2/5,1/4,-1/3")
    assert code == 0 and d["dominant"] == ["2/5", "1/3", "1/4"] and d["unitary"]


def test_check_reports_nonunitary_and_non_hermitian(capsys):
    code, d = run_json(capsys, "check", "--type", "B2", "--param", "9/10,1/5")
    assert code == 0 and not d["unitary"] and d["hermitian"]
    code, d = run_json(capsys, "check", "--type", "A2", "--param", "1/3,0,0")
    assert code == 0 and not d["hermitian"] and not d["unitary"]


def test_check_on_a_wall(capsys):
    code, d = run_json(capsys, "check", "--type", "G2", "--param", "1/5,1/5")
    assert code == 0 and d["reducible"] and d["region"] is None
    assert not d["zero_complementary"]


def test_dump_operators(capsys):
    code, d = run_json(capsys, "check", "--type", "A1", "--param", "1/6,-1/6", "--dump-operators")
    assert code == 0
    assert d["operators"]["regular"] == [["3/4", "1/4"], ["1/4", "3/4"]]


@pytest.mark.parametrize(
    "orbit,nu,member,path",
    [
        ("E7", "1/4", True, "centralizer"),
        ("A4+A2+A1", "2/5", False, "exception-none"),
        ("4A1", "1/4,7/20,3/5,7/10", True, "exception-region-2"),
    ],
)
def test_orbit_check_examples(capsys, orbit, nu, member, path):
    code, d = run_json(capsys, "orbit-check", "--type", "E8", "--orbit", orbit, "--nu", nu)
    assert code == 0 and d["member"] == member and d["path"] == path


def test_orbit_check_errors(capsys):
    assert main(["orbit-check", "--type", "E8", "--orbit", "X9", "--nu", "0"]) == 2
    assert main(["orbit-check", "--type", "E8", "--orbit", "E7", "--nu", "1/4,1/4"]) == 2
    assert main(["orbit-check", "--type", "E8", "--orbit", "D4(a1)+A2", "--nu", "1/9,1/9"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--type", "B3", "--param", "1/x,0,0"],
        ["check", "--type", "B3", "--param", "1/0,0,0"],
        ["check", "--type", "B3", "--param", "1,2"],
        ["check", "--type", "Q3", "--param", "0"],
        ["check", "--param", "0"],
        ["zero-cs", "--type", "G2", "--threads", "0"],
        ["nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2


def test_regions_listing(capsys):
    code, d = run_json(capsys, "regions", "--type", "G2")
    assert code == 0 and len(d["regions"]) == 8


def test_audit_and_verify(capsys):
    code, d = run_json(capsys, "audit")
    assert code == 0 and d["ok"]
    code, out = run(capsys, "verify-tables", "--format", "text")
    assert code == 0
    assert out.count("PASS") == 9 and "FAIL" not in out


def test_verify_tables_with_corrupted_file(capsys, tmp_path):
    from hecke_unitary.orbits import default_tables_path

    doc = json.loads(default_tables_path().read_text())
    doc["records"][5]["chi_affine"]["constant"][2] = "7"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    with pytest.raises(SystemExit) as exc:
        main(["verify-tables", "--tables", str(bad)])
    assert exc.value.code == 1
    assert "row 6" in capsys.readouterr().err


def test_output_is_reproducible(capsys):
    outs = set()
    for threads in ("1", "2", "1"):
        code, out = run(capsys, "zero-cs", "--type", "B3", "--threads", threads)
        outs.add(out)
    assert len(outs) == 1


def test_console_module_entry():
    p = subprocess.run(
        [sys.executable, "-m", "hecke_unitary.cli", "check", "--type", "G2", "--param", "1/6,1/6", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0
    assert "unitary=True" in p.stdout
