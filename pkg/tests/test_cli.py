import json
import subprocess
import sys

import pytest

from glsuper.cli import main
from glsuper.weights import SuperParams, Weight, weight_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, "classify", "--m", "2", "--n", "1", "--weight", "0,0,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["block"] == {"k": 1, "core_left": [2], "core_right": [], "omega": [[2, 3]]}
    assert payload["length"] == 0 and payload["naive_length"] == 0
    # round-trip through the documented weight schema
    assert weight_from_json(payload["weight"]) == Weight(SuperParams(2, 1), (0, 0, 0))


def test_classify_non_dominant_exits_2(capsys):
    code, _, err = run(capsys, "classify", "--m", "2", "--n", "1", "--weight", "0,1,0")
    assert code == 2
    assert "not dominant" in err


def test_classify_malformed_weight_exits_64(capsys):
    code, _, err = run(capsys, "classify", "--m", "2", "--n", "1", "--weight", "zzz")
    assert code == 64


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--m", "2"])  # missing --n
    assert exc.value.code == 64


def test_classify_sampling_deterministic(capsys):
    args = ("classify", "--m", "2", "--n", "2", "--sample", "3", "--seed", "11")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_classify_weights_file(capsys, tmp_path):
    manifest = tmp_path / "grid.txt"
    manifest.write_text("0,0,0\n3,1,-1\n")
    code, out, _ = run(
        capsys, "classify", "--m", "2", "--n", "1", "--weights-file", str(manifest)
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 2
    assert payload[1]["weight"]["coeffs"] == [3, 1, -1]


def test_ehrhart_truncation_warning(capsys):
    code, out, _ = run(
        capsys, "ehrhart", "--k", "2", "--dmin", "199", "--dmax", "10000", "--format", "csv"
    )
    assert code == 0
    assert "WARNING" in out and "truncated" in out


def test_invariants_verify_agreement(capsys):
    code, out, _ = run(
        capsys,
        "invariants", "--m", "2", "--n", "1", "--kind", "kac", "--weight", "0,0,0", "--verify",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["complexity"] == 2 and payload["dim_X"] == 2 and payload["dim_V_g_g0"] == 0
    checks = {c["name"]: c for c in payload["checks"]}
    assert checks["rank_variety_side_+1"]["agree"] is True
    assert checks["rank_variety_side_+1"]["orbit_dim"] == 2
    assert checks["rank_variety_side_-1"]["measured"] == 0


def test_invariants_simple_gl11_verify(capsys):
    code, out, _ = run(
        capsys,
        "invariants", "--m", "1", "--n", "1", "--kind", "simple", "--weight", "3,-3", "--verify",
    )
    payload = json.loads(out)
    assert payload["complexity"] == 2 and payload["z_invariant"] == 2
    checks = {c["name"]: c for c in payload["checks"]}
    assert checks["measured_complexity"]["agree"] is True
    assert checks["measured_z_invariant"]["agree"] is True


def test_invariants_typical_all_zero(capsys):
    _, out, _ = run(capsys, "invariants", "--m", "2", "--n", "1", "--kind", "simple", "--weight", "4,4,0")
    payload = json.loads(out)
    assert all(payload[k] == 0 for k in (
        "complexity", "z_invariant", "dim_X", "dim_V_g_g0", "dim_V_f_f0",
        "dim_rank_plus", "dim_rank_minus",
    ))


def test_ehrhart_k1(capsys):
    code, out, _ = run(capsys, "ehrhart", "--k", "1")
    assert code == 0
    assert json.loads(out)["degenerate_point"] == [-1, -1]


def test_ehrhart_csv_deterministic(capsys):
    args = ("ehrhart", "--k", "2", "--dmin", "3", "--dmax", "10", "--format", "csv")
    code, out1, _ = run(capsys, *args)
    assert code == 0
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "d,count,Q,count_ge_Q"
    first = lines[1].split(",")
    assert first[0] == "3" and first[1] == "1" and first[3] == "True"


def test_resolve_simple_agrees(capsys):
    code, out, _ = run(capsys, "resolve", "--target", "simple", "--weight", "0", "--depth", "15")
    assert code == 0
    payload = json.loads(out)
    assert payload["measured_complexity"] == 2 and payload["complexity_agree"] is True
    assert payload["measured_z"] == 2 and payload["z_agree"] is True
    assert payload["degrees"][3]["total_dim"] == 16


def test_resolve_kl_table(capsys):
    code, out, _ = run(
        capsys, "resolve", "--target", "kac", "--weight", "0", "--depth", "8", "--kl-window", "2",
    )
    payload = json.loads(out)
    assert payload["measured_complexity"] == 1 and payload["complexity_agree"] is True
    table = {(row["lam"], row["mu"]): row for row in payload["kl_table"]}
    assert table[(0, 2)]["poly"] == [1] and table[(0, 2)]["constant_term_1"] is True
    assert table[(2, 0)]["poly"] == [] and table[(2, 0)]["constant_term_1"] is False


def test_resolve_depth_guard(capsys):
    code, _, err = run(capsys, "resolve", "--target", "kac", "--weight", "0", "--depth", "40")
    assert code == 64
    assert "depth" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "glsuper", "ehrhart", "--k", "1"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degenerate_point"] == [-1, -1]
