import json
import shutil

import cohomone
from cohomone.catalog import data_dir, load_catalog
from cohomone.cli import OP_COVERAGE, _HANDLERS, main, render, run


def payload(argv, expect_code=0, catalog=None):
    result = run(argv, catalog)
    assert result.exit_code == expect_code, result.payload
    return result.payload


def test_brieskorn_subcommand():
    out = payload(["brieskorn", "--m", "4", "--d", "5"])
    assert out["delta_at_one"] == 5
    assert out["delta_coeffs"] == [1, 1, 1, 1, 1]
    assert out["homology"] == [
        {"degree": 0, "free_rank": 1, "torsion": []},
        {"degree": 3, "free_rank": 0, "torsion": [5]},
        {"degree": 7, "free_rank": 1, "torsion": []},
    ]
    assert out["rational_sphere"] is True


def test_degrees_subcommand():
    out = payload(["degrees", "--group", "Spin(9)"])
    assert out == {
        "group": "B4", "rank": 4, "dimension": 36,
        "degrees": [3, 7, 11, 15], "weyl_order": 384,
    }


def test_quotient_subcommand():
    out = payload(["quotient", "--embedding", "su6-sp3"])
    assert out["odd_degrees"] == [5, 9]
    assert out["even_degrees"] == []
    assert out["heuristic"] is False


def test_hilbert_subcommand():
    out = payload(["hilbert", "--embedding", "t2-in-su3"])
    assert out["coefficients"] == [1, 0, 2, 0, 2, 0, 1]
    assert out["euler_characteristic"] == 6


def test_gh_case_subcommand():
    out = payload(["gh-case", "--l-minus", "3", "--l-plus", "2", "--h", "0"])
    assert out["cases"] == [{"case": 4, "dim": 11, "fiber": "S3 x S2 x loops(S6)"}]


def test_classify_subcommand(tmp_path):
    doc = tmp_path / "diagram.json"
    doc.write_text(json.dumps({"family": "brieskorn", "m": 6, "d": 4}))
    out = payload(["classify", "--diagram", str(doc)])
    assert out["outcome"] == {"kind": "brieskorn", "m": 6, "d": 4}
    doc.write_text(json.dumps({"catalog": "t5-row5"}))
    out = payload(["classify", "--diagram", str(doc)])
    assert out["outcome"] == {"kind": "g2-quotient", "index": 1}


def test_primitivity_subcommand(tmp_path):
    doc = tmp_path / "diagram.json"
    doc.write_text(json.dumps({"catalog": "t5-row3"}))
    out = payload(["primitivity", "--diagram", str(doc)])
    assert out["verdict"] == "non-primitive"
    assert out["witness"] == "t5-l-su2su2"


def test_mv_check_subcommand():
    out = payload([
        "mv-check", "--n", "5", "--p-h", "1,0,0,1", "--p-k-plus", "1,0,1", "--p-k-minus", "1,0,1",
    ])
    assert out["verdict"] == "infeasible" and out["failing_degree"] == 2
    out = payload([
        "mv-check", "--n", "11", "--h-spheres", "2,3,5",
        "--k-plus-spheres", "3,5", "--k-minus-spheres", "2,5",
    ])
    assert out["verdict"] == "feasible"


def test_seven_family_subcommand():
    out = payload(["seven-family", "--realize", "2"])
    assert out["params"] == {"p_minus": -3, "q_minus": 1, "p_plus": 5, "q_plus": 1}
    assert out["torsion"] == 2
    out = payload(["seven-family", "--p-minus", "1", "--p-plus", "1"])
    assert out["torsion"] == 0 and out["rational_sphere"] is False


def test_repeated_invocations_are_byte_identical():
    for argv in (["degrees", "--group", "F4"], ["brieskorn", "--m", "6", "--d", "9"]):
        assert render(run(argv).payload) == render(run(argv).payload)


def test_verify_tables_passes_and_is_deterministic():
    first = run(["verify-tables"])
    second = run(["verify-tables"])
    assert first.exit_code == 0
    assert render(first.payload) == render(second.payload)
    assert first.payload["summary"]["ok"] is True


def test_verify_tables_fails_on_corrupted_catalog(tmp_path):
    for name in ("embeddings.json", "diagrams.json"):
        shutil.copy(data_dir() / name, tmp_path / name)
    data = json.loads((tmp_path / "embeddings.json").read_text())
    for record in data["embeddings"]:
        if record["id"] == "su6-sp3":
            record["tags"].remove("corank2")
    (tmp_path / "embeddings.json").write_text(json.dumps(data))
    result = run(["verify-tables"], load_catalog(tmp_path))
    assert result.exit_code == 1
    assert not result.payload["summary"]["ok"]
    assert any("su6-sp3" in cid for cid in result.payload["summary"]["failed"])


def test_usage_errors_exit_2(tmp_path, capsys):
    assert run(["no-such-command"]).exit_code == 2
    assert run(["brieskorn", "--m", "2", "--d", "3"]).exit_code == 2
    assert run(["quotient", "--embedding", "nope"]).exit_code == 2
    assert run(["degrees", "--group", "XYZ(3)"]).exit_code == 2
    doc = tmp_path / "broken.json"
    doc.write_text("{not json")
    assert run(["classify", "--diagram", str(doc)]).exit_code == 2
    assert main(["brieskorn", "--m", "2", "--d", "3"]) == 2
    assert "Unsupported" in capsys.readouterr().err


def test_main_prints_payload(capsys):
    assert main(["degrees", "--group", "G2"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["dimension"] == 14


def test_invalid_diagram_document_reports_violations(tmp_path):
    record = {
        "g": "SU(3)", "h": "t2-in-su3",
        "k_minus": "su3-kminus-u2", "k_plus": "su3-kplus-u2",
        "h_in_k_minus": "t2-in-u2", "h_in_k_plus": "t2-in-u2",
        "component_counts": {"h": 2, "k_minus": 1, "k_plus": 1},
        "nonorientable": {},
    }
    doc = tmp_path / "invalid.json"
    doc.write_text(json.dumps(record))
    result = run(["classify", "--diagram", str(doc)])
    assert result.exit_code == 2
    assert "connectedness" in result.payload["error"]


def test_every_operation_covered_by_exactly_one_subcommand():
    operations = {
        "canonicalize", "degrees", "weyl_order", "transitive_sphere_pairs",
        "sphere_quotient", "spheres_acted_on",
        "quotient_homotopy", "hilbert_series", "euler_characteristic",
        "odd_product_poincare",
        "validate", "gh_classify", "primitivity", "equivalent",
        "double_disk_euler", "mv_feasible",
        "delta_poly", "delta_at_one", "homology",
        "enumerate_corank2", "table3_filter", "seven_family_torsion",
        "realize_torsion", "case6_pairs", "classify_diagram",
    }
    assert set(OP_COVERAGE) == operations
    assert set(OP_COVERAGE.values()) <= set(_HANDLERS)
    for op in operations:
        assert hasattr(cohomone, op), op
