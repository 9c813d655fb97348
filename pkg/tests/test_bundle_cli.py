import json

import numpy as np
import pytest

from umtc import catalog as cat
from umtc.bundle import (bundle_to_dict, catalog_dir, catalog_names, dumps_bundle, load_bundle, loads_bundle,
                         save_bundle, verify_bundle)
from umtc.cli import main
from umtc.errors import BundleParseError, ValidationError
from umtc.fingerprint import bundle_fingerprint
from umtc.report import ReportDocument, matrix_from_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


# --- bundles ------------------------------------------------------------------------------

def test_catalog_contents():
    names = set(catalog_names())
    assert {"trivial", "rep_z2", "svec", "semion", "antisemion", "fibonacci", "fibonacci_rev",
            "ising_k+", "ising_k-"} <= names
    assert {f"ising_nu{nu}" for nu in range(1, 16, 2)} <= names


def test_catalog_passes_coherence(shipped):
    for b in shipped.values():
        assert verify_bundle(b).passed, b.name


def test_ising_file_rank(shipped):
    assert load_bundle(catalog_dir() / "ising_k+.json").rank == 3
    assert load_bundle("catalog/ising_k+.json").rank == 3


def test_shipped_files_regenerate_byte_equal(tmp_path):
    cat.write_catalog(tmp_path)
    for p in sorted(catalog_dir().glob("*.json")):
        assert (tmp_path / p.name).read_bytes() == p.read_bytes(), p.name


def test_round_trip(shipped, tmp_path):
    for b in shipped.values():
        path = tmp_path / f"{b.name}.json"
        save_bundle(b, path)
        back = load_bundle(path)
        assert back.ring == b.ring and back.F == b.F and back.R == b.R
        assert dumps_bundle(back) == dumps_bundle(b)
        assert bundle_fingerprint(back) == bundle_fingerprint(b)


def test_exact_phase_metadata():
    doc = bundle_to_dict(cat.ising(1))
    phases = {tuple(row[:3]): tuple(row[3:]) for row in doc["metadata"]["phases"]}
    assert phases[("sigma", "sigma", "1")] == (15, 16)
    assert phases[("psi", "psi", "1")] == (1, 2)


def test_empty_file_is_parse_error(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    with pytest.raises(BundleParseError):
        load_bundle(p)
    with pytest.raises(BundleParseError):
        loads_bundle("{not json")


def test_missing_dual_names_field():
    doc = bundle_to_dict(cat.ising(1))
    del doc["dual"]
    with pytest.raises(ValidationError, match="dual") as exc:
        loads_bundle(json.dumps(doc))
    assert exc.value.violations[0].axiom == "dual"


def test_axiom_violation_carries_indices():
    doc = bundle_to_dict(cat.fibonacci())
    doc.pop("F"), doc.pop("R")
    doc["fusion"] = [row for row in doc["fusion"] if row[:3] != ["tau", "tau", "1"]]
    with pytest.raises(ValidationError) as exc:
        loads_bundle(json.dumps(doc))
    assert {v.axiom for v in exc.value.violations} >= {"dual"}
    assert all(v.indices for v in exc.value.violations)


def test_undeclared_label_and_incomplete_table():
    doc = bundle_to_dict(cat.fibonacci())
    doc["fusion"].append(["tau", "x", "tau", 1])
    with pytest.raises(ValidationError, match="undeclared"):
        loads_bundle(json.dumps(doc))
    doc = bundle_to_dict(cat.fibonacci())
    doc["R"] = doc["R"][:-1]
    with pytest.raises(ValidationError, match="lacks") as exc:
        loads_bundle(json.dumps(doc))
    assert exc.value.violations[0].axiom == "IncompleteTableError"


def test_tolerance_overrides(monkeypatch):
    doc = bundle_to_dict(cat.fibonacci())
    doc["metadata"]["tol"] = 1e-6
    assert loads_bundle(json.dumps(doc)).tol == 1e-6
    monkeypatch.setenv("UMTC_TOL", "1e-7")
    assert cat.fibonacci().tol == 1e-7


# --- reports ------------------------------------------------------------------------------

def test_report_round_trip():
    rep = ReportDocument(["smatrix", "semion"], {"ok": True}, residuals={"r": 1e-17}, witnesses={"w": [1, 2]})
    rep.add_matrix("S", [[1, 1], [1, -1]])
    text = rep.to_json()
    back = ReportDocument.from_json(text)
    assert back.to_json() == text
    assert back.exit_code == 0
    np.testing.assert_allclose(matrix_from_report(back.matrices["S"]), [[1, 1], [1, -1]])
    rep.verdicts["bad"] = False
    assert ReportDocument.from_json(rep.to_json()).exit_code == 1


# --- CLI ----------------------------------------------------------------------------------

def test_cli_modularity_exit_codes(capsys):
    code, rep = run(capsys, "modularity", "catalog/fibonacci.json")
    assert code == 0 and rep["verdicts"]["modular"]
    code, rep = run(capsys, "modularity", "catalog/rep_z2.json")
    assert code == 1 and rep["witnesses"]["degenerate"] == ["g"]


def test_cli_input_errors(capsys, tmp_path):
    assert main(["frobnicate"]) == 2
    assert "usage" in capsys.readouterr().err
    empty = tmp_path / "e.json"
    empty.write_text("")
    code, rep = run(capsys, "dims", str(empty))
    assert code == 2 and "BundleParseError" in rep["error"]
    code, rep = run(capsys, "dims", str(tmp_path / "nope.json"))
    assert code == 2
    code, rep = run(capsys, "prime-factor", "rep_z2")
    assert code == 2 and "Unsupported" in rep["error"]


def test_cli_validate_reports_violations(capsys, tmp_path):
    doc = bundle_to_dict(cat.ising(1))
    doc["R"] = [row if row[:3] != ["psi", "psi", "1"] else ["psi", "psi", "1", {"re": 1.0, "im": 0.0}]
                for row in doc["R"]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, rep = run(capsys, "validate", str(p))
    assert code == 1
    assert rep["verdicts"] == {"ring": True, "pentagon": True, "unitarity": True, "hexagon": False}
    assert rep["witnesses"]["hexagon"]


def test_cli_product_then_factor(capsys, tmp_path):
    out = tmp_path / "if.json"
    code, rep = run(capsys, "product", "ising_k+", "fibonacci", "--bundle-out", str(out))
    assert code == 0 and rep["verdicts"]["dimension_multiplicativity"]
    code, rep = run(capsys, "prime-factor", str(out))
    assert code == 0
    assert sorted(rep["data"]["ranks"]) == [2, 3]
    assert rep["residuals"]["S_kronecker"] < 1e-9


def test_cli_smatrix_and_dims(capsys):
    code, rep = run(capsys, "smatrix", "ising_k+")
    assert code == 0
    S = matrix_from_report(rep["matrices"]["Stilde"])
    np.testing.assert_allclose(S @ S.conj().T, 4 * np.eye(3), atol=1e-9)
    code, rep = run(capsys, "dims", "fibonacci")
    assert code == 0 and rep["data"]["global_dimension"] == pytest.approx(1 + ((1 + 5 ** 0.5) / 2) ** 2)


def test_cli_subcats_and_centralizer(capsys):
    code, rep = run(capsys, "subcats", "ising_k+")
    assert code == 0 and len(rep["data"]["subcategories"]) == 3
    code, rep = run(capsys, "centralizer", "ising_k+", "--of", "psi")
    assert code == 0 and rep["data"]["centralizer"] == ["1", "psi"]


def test_cli_solve_braidings_reimport(capsys, tmp_path):
    code, rep = run(capsys, "solve-braidings", "--ring", "ising_k+", "--F", "ising_k+", "--F", "ising_k-",
                    "--expect", "8")
    assert code == 0 and rep["data"]["count"] == 8
    sol = rep["data"]["solutions"][0]["bundle"]
    b = loads_bundle(json.dumps(sol))
    assert verify_bundle(b).passed


def test_cli_point_check(capsys):
    code, rep = run(capsys, "point-check", "--bundle", "fibonacci", "--left", "tau", "--right", "1")
    assert code == 0 and rep["data"]["outcome"] == "right-collapses"
    code, rep = run(capsys, "point-check", "--bundle", "ising_k+", "--left", "psi", "--right", "psi")
    assert code == 1 and rep["witnesses"]["intersection"] == "psi"
    code, rep = run(capsys, "point-check", "--bundle", "ising_k+", "--left", "psi", "--right", "psi",
                    "--mode", "braiding-strict")
    assert rep["data"]["caveat"] and not rep["verdicts"]["trivial_pairing"]


def test_cli_reports_deterministic(capsys, tmp_path):
    path = tmp_path / "r.json"
    runs = []
    for _ in range(2):
        assert main(["solve-braidings", "--ring", "fibonacci", "--out", str(path)]) == 0
        runs.append(path.read_bytes())
    assert runs[0] == runs[1]
    assert capsys.readouterr().out == ""
    assert ReportDocument.from_json(path.read_text()).exit_code == 0
