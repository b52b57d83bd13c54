import json
import subprocess
import sys

import pytest

from tetrahopf.cli import main

AFFINE = {"kind": "affine", "m": 1, "k": 0}


@pytest.fixture
def affine_cfg(tmp_path):
    p = tmp_path / "affine.json"
    p.write_text(json.dumps(AFFINE))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_affine(capsys, affine_cfg):
    code, out, _ = run(capsys, "build", "--config", affine_cfg, "--format", "json")
    assert code == 0
    s = json.loads(out)
    assert s["dim"] == 1728 and s["kernel_order"] == 24
    assert s["mode"] == "bosonization (χ_z = 1)"
    assert s["z_weight_e"] is True


def test_build_extended_default(capsys):
    code, out, _ = run(capsys, "build")
    assert code == 0
    assert "dim: 6912" in out and "mode: deformed" in out and "kernel_order: 48" in out


def test_build_lambda_zero(capsys):
    code, out, _ = run(capsys, "build", "--lambda", "0")
    assert code == 0 and "bosonization (lambda = 0)" in out


def test_malformed_json_reports_location(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "affine",\n "m": 1,,}')
    code, _, err = run(capsys, "build", "--config", str(p))
    assert code == 2
    assert f"{p}:2:" in err and "invalid JSON" in err


@pytest.mark.parametrize(
    "doc,needle",
    [
        ({"kind": "affine"}, "missing field"),
        ({"kind": "torus"}, "unknown realization kind"),
        ([1, 2], "JSON object"),
    ],
)
def test_config_errors(capsys, tmp_path, doc, needle):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(doc))
    code, _, err = run(capsys, "build", "--config", str(p))
    assert code == 2 and needle in err


def test_invalid_realization_table(capsys, tmp_path):
    doc = {"kind": "table", "cayley": [[0, 1], [1, 0]], "gmap": [0, 1, 0, 1], "dot": [[0, 1, 2, 3]] * 2, "chi": [1, 1]}
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    code, _, err = run(capsys, "build", "--config", str(p))
    assert code == 2 and "fails validation" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "decompose")[0] == 2
    assert run(capsys, "verify", "--jobs", "0")[0] == 2
    assert run(capsys, "build", "--lambda", "1/0")[0] == 2


def test_verify_basis_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "basis", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"suite", "checks", "summary"}
    assert rep["summary"] == {"passed": len(rep["checks"]), "failed": 0}
    assert all(set(c) <= {"name", "status", "witness"} for c in rep["checks"])


def test_verify_all_on_bosonization(capsys, affine_cfg):
    code, out, _ = run(capsys, "verify", "--config", affine_cfg)
    assert code == 0
    assert out.rstrip().endswith("0 failed")


def test_verify_tables_fails_with_code_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables", "--g", "(0,1)*(g^1)")
    assert code == 1
    assert "FAIL  table 1: xw2 c7 = -f(g)c12" in out


def test_tables_need_deformed_case(capsys, affine_cfg):
    code, _, err = run(capsys, "tables", "--config", affine_cfg)
    assert code == 2 and "deformed" in err


def test_tables_reject_kernel_element(capsys):
    code, _, err = run(capsys, "tables", "--g", "(0,1)*(g^0)")
    assert code == 2 and "ker" in err


def test_tables_csv(capsys, tmp_path):
    out_path = tmp_path / "tables.csv"
    code, out, _ = run(capsys, "tables", "--format", "csv", "--out", str(out_path))
    assert code == 1 and out == ""
    lines = out_path.read_text().splitlines()
    assert lines[0] == "table,row,column,expected,got,pass"
    assert len(lines) == 1 + 6 * 48 + 72


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--g", "(0,t^3)*(g^1)", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["kind"] == "semisimple" and len(d["summands"]) == 6
    assert sum(s["dim"] * s["multiplicity"] for s in d["summands"]) == 72
    code, out, _ = run(capsys, "decompose", "--g", "(0,1)*(g^0)")
    assert code == 0
    assert "free module of rank 1" in out and "soc k[(0,t^3)*(g^0)]" in out


def test_decompose_unknown_label(capsys):
    code, _, err = run(capsys, "decompose", "--g", "(3,t)")
    assert code == 2 and "unknown group element" in err


def test_simples(capsys, affine_cfg):
    code, out, _ = run(capsys, "simples", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert sum(r["dim"] == 1 for r in rows) == 48
    twelve = [r for r in rows if r["dim"] == 12]
    assert len(twelve) == 24 and all(len(r["support"]) == 12 for r in twelve)
    code, out, _ = run(capsys, "simples", "--config", affine_cfg)
    assert out.startswith("24 one-dimensional, 0 twelve-dimensional")


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "idempotents", "--format", "csv")
    second = run(capsys, "verify", "--suite", "idempotents", "--format", "csv", "--jobs", "4")
    assert first == second and first[0] == 0


def test_module_entry_point(affine_cfg):
    proc = subprocess.run(
        [sys.executable, "-m", "tetrahopf", "build", "--config", affine_cfg],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "dim: 1728" in proc.stdout
