"""Command-line interface: reports, determinism, exit codes, dispatch table."""

import hashlib
import json

import pytest

import tropcomplex
from tropcomplex.cli import OPERATIONS, run
from tests.conftest import fixture_path


def invoke(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_operations_cover_api_disjointly():
    seen = []
    for names in OPERATIONS.values():
        seen.extend(names)
    assert len(seen) == len(set(seen)) == 23
    for name in seen:
        assert hasattr(tropcomplex, name), name
        assert callable(getattr(tropcomplex, name))


def test_report_schema(capsys):
    path = fixture_path("triangle")
    code, report, err = invoke(capsys, "validate", path)
    assert code == 0
    assert report["format"] == "tcx-1"
    assert report["command"] == "validate"
    assert report["inputs"]["fixture"]["path"] == str(path)
    digest = hashlib.sha256(path.read_bytes()).hexdigest()
    assert report["inputs"]["fixture"]["sha256"] == digest
    assert all(v[1] == "pass" for v in report["verdicts"])
    assert err.startswith("validate:")


def test_output_is_canonical_and_deterministic(capsys):
    path = fixture_path("tetrahedron")
    outs = set()
    for _ in range(2):
        run(["classify", str(path)])
        out, _ = capsys.readouterr()
        outs.add(out)
    assert len(outs) == 1
    (text,) = outs
    parsed = json.loads(text)
    assert text == json.dumps(parsed, sort_keys=True, indent=2) + "\n"


def test_jobs_flag_does_not_change_output(capsys):
    path = fixture_path("tetrahedron")
    run(["classify", str(path)])
    base, _ = capsys.readouterr()
    run(["classify", str(path), "--jobs", "3"])
    jobs, _ = capsys.readouterr()
    assert base == jobs
    run(["cartier", str(path), "-D", "Dcd"])
    base, _ = capsys.readouterr()
    run(["cartier", str(path), "-D", "Dcd", "--jobs", "2"])
    jobs, _ = capsys.readouterr()
    assert base == jobs


def test_classify_exit_codes(capsys):
    code, report, _ = invoke(capsys, "classify", fixture_path("triangle"))
    assert code == 1
    assert report["result"]["verdict"] == "weak-only"
    code, report, _ = invoke(
        capsys, "classify", fixture_path("triangle-tropical")
    )
    assert code == 0
    assert report["result"]["verdict"] == "tropical"


def test_validate_embedded_fixture(capsys):
    code, report, _ = invoke(capsys, "validate", fixture_path("plane"))
    assert code == 0
    assert report["result"]["kind"] == "embedded"
    assert report["result"]["N"] == 2
    assert report["result"]["bounded_cells"] == [7, 12, 6]


def test_div_with_phi(capsys):
    code, report, _ = invoke(
        capsys, "div", fixture_path("tetrahedron"), "--phi", "1,1,0,0"
    )
    assert code == 0
    assert report["result"]["divisor"]["ridge_part"] == [[0, -2], [5, 2]]
    checks = dict((v[0], v[1]) for v in report["verdicts"])
    assert checks.get("ridge-multiplicity-consistency") == "pass"


def test_div_with_stored_function(capsys):
    code, report, _ = invoke(
        capsys, "div", fixture_path("tetrahedron"), "--phi", "phi_ab_cd"
    )
    assert code == 0
    assert report["result"]["divisor"]["ridge_part"] == [[0, -2], [5, 2]]


def test_cartier_report(capsys):
    code, report, _ = invoke(
        capsys, "cartier", fixture_path("tetrahedron"), "-D", "Dcd"
    )
    assert code == 0
    statuses = {q: st for q, st in report["result"]["statuses"]}
    assert statuses == {0: "cartier", 1: "cartier", 2: "qcartier", 3: "qcartier"}
    germs = {q: g for q, g in report["result"]["germs"]}
    assert germs[2]["slopes"] == [[1, 2], [1, 2], [0, 1]]
    assert report["result"]["weil"]["passed"] is True


def test_equiv_exit_codes(capsys):
    code, report, _ = invoke(
        capsys, "equiv", fixture_path("tetrahedron"), "-D", "Dcd", "-E", "Dab"
    )
    assert code == 1
    assert report["result"]["certificate"]["kind"] == "torsion"
    code, report, _ = invoke(
        capsys, "equiv", fixture_path("tetrahedron"), "-D", "E", "-E", "Zero"
    )
    assert code == 0
    assert report["result"]["phi"] == [1, 1, 0, 0]


def test_intersect_command(capsys):
    code, report, _ = invoke(
        capsys,
        "intersect",
        fixture_path("tetrahedron"),
        "-D",
        "Dcd",
        "-C",
        "C",
    )
    assert code == 0
    assert report["result"]["degree"] == [2, 1]


def test_robust_exit_codes(capsys):
    code, report, _ = invoke(
        capsys, "robust", fixture_path("plane"), "--cell", "0,0"
    )
    assert code == 0
    assert report["result"]["robust"] is True
    code, report, _ = invoke(
        capsys, "robust", fixture_path("plane"), "--cell", "0,1"
    )
    assert code == 1
    assert report["result"]["robust"] is False


def test_import_embedded_command(capsys):
    code, report, _ = invoke(capsys, "import-embedded", fixture_path("plane"))
    assert code == 0
    alpha = {tuple(x[:2]): x[2] for x in report["result"]["alpha"]}
    assert alpha[(0, 0)] == 1 and alpha[(0, 1)] == 0
    assert alpha[(3, 0)] == -2 and alpha[(3, 1)] == 3


def test_pushforward_command(capsys):
    code, report, _ = invoke(
        capsys, "pushforward", fixture_path("plane"), "-f", "f1"
    )
    assert code == 0
    checks = dict((v[0], v[1]) for v in report["verdicts"])
    assert checks.get("pushforward-oracle") == "pass"
    assert report["result"]["pushed"] == report["result"]["oracle"]


def test_degen_build_and_specialize(capsys):
    code, report, _ = invoke(capsys, "degen-build", fixture_path("tet-degen"))
    assert code == 0
    alpha = {tuple(x[:2]): x[2] for x in report["result"]["alpha"]}
    assert all(v == 1 for v in alpha.values())
    code, report, _ = invoke(
        capsys, "specialize", fixture_path("tet-degen"), "D"
    )
    assert code == 0
    code, report, _ = invoke(
        capsys, "specialize", fixture_path("tet-degen"), "C"
    )
    assert code == 0


def test_verify_match_and_mismatch(capsys, tmp_path):
    code, report, _ = invoke(
        capsys, "verify", fixture_path("tet-degen"), "-D", "D", "-C", "C"
    )
    assert code == 0
    assert report["result"]["match"] is True

    data = json.loads(fixture_path("tet-degen").read_text())
    data["claimed"] = [["D", "C", 3, 1]]
    bad = tmp_path / "bad-claim.json"
    bad.write_text(json.dumps(data))
    code, report, _ = invoke(capsys, "verify", bad, "-D", "D", "-C", "C")
    assert code == 1
    assert report["result"]["match"] is False


def test_missing_file_is_input_error(capsys, tmp_path):
    code, report, err = invoke(
        capsys, "validate", tmp_path / "nonexistent.json"
    )
    assert code == 2
    assert report["format"] == "tcx-1"
    assert "error" in report
    assert "error" in err


def test_unknown_name_is_input_error(capsys):
    code, report, _ = invoke(
        capsys, "equiv", fixture_path("tetrahedron"), "-D", "nope", "-E", "Zero"
    )
    assert code == 2


def test_wrong_fixture_kind_is_input_error(capsys):
    code, _, _ = invoke(capsys, "robust", fixture_path("triangle"), "--cell", "0,0")
    assert code == 2
    code, _, _ = invoke(capsys, "classify", fixture_path("plane"))
    assert code == 2


def test_malformed_json_is_input_error(capsys, tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, report, _ = invoke(capsys, "validate", bad)
    assert code == 2


def test_balance_command(capsys):
    code, report, _ = invoke(
        capsys, "balance", fixture_path("tetrahedron"), "-C", "C"
    )
    assert code == 0
    assert report["result"]["balanced"] is True


def test_classgroup_command(capsys):
    code, report, _ = invoke(capsys, "classgroup", fixture_path("tetrahedron"))
    assert code == 0
    assert report["result"]["free_rank"] == 3
    assert report["result"]["invariant_factors"] == [2, 2]
