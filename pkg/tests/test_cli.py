import json

import pytest

from covering_lab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_split_classes_text(capsys):
    code, out, _ = run_cli(capsys, "split-classes", "8")
    assert code == 0
    lines = {line.split()[0]: line for line in out.splitlines() if line.strip().startswith("[")}
    assert "yes" in lines["[1;7]"] and "yes" in lines["[3;5]"]
    assert "no" in lines["[2;6]"]


def test_split_classes_json(capsys):
    code, out, _ = run_cli(capsys, "split-classes", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schemaVersion"] == 1
    rows = {r["type"]: r for r in payload["rows"]}
    assert rows["[5]"]["splits"] and rows["[5]"]["classSizes"] == [12, 12]
    assert not rows["[1;2;2]"]["splits"]


def test_cover_check_true_and_false(capsys):
    h = json.dumps({"degree": 5, "generators": ["(1 2 3)", "(1 2)(3 4)"], "label": "A4"})
    k = json.dumps({"degree": 5, "generators": ["(1 2 3 4 5)"], "label": "C5"})
    code, out, _ = run_cli(capsys, "cover", "check", "--group", "A5", "--H", h, "--K", k)
    assert code == 0 and "covering" in out
    code, _, _ = run_cli(capsys, "cover", "check", "--group", "A5", "--H", h, "--K", h)
    assert code == 1


def test_cover_check_json_schema(capsys):
    h = json.dumps({"degree": 5, "generators": ["(1 2 3)", "(1 2)(3 4)"]})
    k = json.dumps({"degree": 5, "generators": ["(1 2 3 4 5)"]})
    code, out, _ = run_cli(
        capsys, "cover", "check", "--group", "A5", "--H", h, "--K", k, "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True
    assert payload["kind"] == "star2"
    assert payload["inclusionCheck"] is True
    types = {row["type"] for row in payload["classes"]}
    assert "[5]" in types and all(row["coveredBy"] != "uncovered" for row in payload["classes"])


def test_cover_check_s5_gallery_pair(capsys):
    h1 = json.dumps({"degree": 5, "generators": ["(1 2)", "(3 4)", "(3 4 5)"], "label": "H1"})
    k1 = json.dumps({"degree": 5, "generators": ["(1 2 3 4 5)", "(2 3 5 4)"], "label": "K1"})
    code, out, _ = run_cli(capsys, "cover", "check", "--group", "S5", "--H", h1, "--K", k1)
    assert code == 0 and "covering" in out


def test_search_with_catalog_file(capsys, tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(
        json.dumps(
            [
                {"label": "A4", "generators": ["(1 2 3)", "(1 2)(3 4)"], "expectedOrder": 12},
                {"label": "C5", "generators": ["(1 2 3 4 5)"], "expectedOrder": 5},
            ]
        )
    )
    code, out, _ = run_cli(
        capsys, "search", "--ambient", "An", "--n", "5", "--catalog", str(path), "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coverable"] and payload["witness"] == ["A4", "C5"]
    assert payload["completeness"] == "assumed-catalog"


def test_cover_check_star_kind(capsys):
    h = json.dumps({"degree": 3, "generators": ["(1 2)"]})
    k = json.dumps({"degree": 3, "generators": ["(1 2 3)"]})
    code, out, _ = run_cli(
        capsys, "cover", "check", "--group", "S3", "--H", h, "--K", k, "--kind", "star"
    )
    assert code == 0


def test_search_json_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "search", "--ambient", "An", "--n", "5", "--json")
    code2, out2, _ = run_cli(capsys, "search", "--ambient", "An", "--n", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["coverable"] is True
    assert payload["completeness"] == "proven-by-enumeration"


def test_search_negative_catalog(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--ambient", "Sn", "--n", "7", "--source", "catalog", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coverable"] is False
    assert len(payload["certificate"]) == 15
    assert all(pc["uncovered"] for pc in payload["certificate"])


def test_fw_check_and_search(capsys):
    d8 = json.dumps({"degree": 4, "generators": ["(1 2 3 4)", "(1 3)"]})
    code, out, _ = run_cli(capsys, "fw", "check", "--group", "S4", "--H", d8, "--N", "V4")
    assert code == 0 and "kernel order 12" in out
    code, _, _ = run_cli(capsys, "fw", "search", "--group", "Q8")
    assert code == 1
    code, out, _ = run_cli(capsys, "fw", "search", "--group", "S3", "--json")
    assert code == 0
    assert json.loads(out)["found"] is True


def test_fw_check_negative_exit(capsys):
    a4 = json.dumps({"degree": 5, "generators": ["(1 2 3)", "(1 2)(3 4)"]})
    code, _, _ = run_cli(capsys, "fw", "check", "--group", "A5", "--H", a4, "--N", "T5")
    assert code == 1


def test_usage_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "cover", "check", "--group", "bogus", "--H", "S3", "--K", "S3")
    assert code == 2 and "error" in err
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_paper_gallery_only(capsys, tmp_path):
    report_dir = tmp_path / "out"
    code, out, _ = run_cli(
        capsys, "verify-paper", "--only", "gallery", "--report", str(report_dir)
    )
    assert code == 0
    assert "star2/A8" in out and "FAILURES" not in out
    assert (report_dir / "scorecard.csv").exists()
    figures = list(report_dir.glob("coverage_*.png"))
    assert len(figures) == 11


def test_verify_paper_searches_end_to_end(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--only", "searches", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["allVerified"] is True
    statuses = {row["label"]: row["status"] for row in payload["rows"]}
    assert statuses["not-coverable/S7/lattice"] == "verified"
    assert statuses["not-coverable/S7/catalog"] == "verified-catalog-assumed"
    assert statuses["not-coverable/A9/catalog"] == "verified-catalog-assumed"
    assert statuses["coverable/A8"] == "verified"
    assert statuses["cross-check/S7"] == "verified"
    assert statuses["transitivity-pattern"] == "verified"


def test_verify_paper_gallery_json_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "verify-paper", "--only", "gallery", "--json")
    code2, out2, _ = run_cli(capsys, "verify-paper", "--only", "gallery", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["allVerified"] is True
    assert len(payload["rows"]) >= 11
