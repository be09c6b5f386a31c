"""CLI surface: grammar, payload pins, error objects, byte determinism."""

import json
import subprocess
import sys

import pytest

from stablekh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_exterior_report(capsys):
    code, doc = run_json(capsys, "exterior", "--generators", "3", "--base-q", "2",
                         "--max-degree", "5")
    assert code == 0
    groups = doc["results"]["groups"]
    assert groups[0] == {"ambiguous": False, "group": "Z/8", "i": 0}
    assert all(g["group"] == "0" for g in groups[1:])
    assert doc["results"]["symbolic_cone"]["template"] == "cone(E(k) --*8--> E(k))"


def test_exterior_json_contains_plain_group_bytes(capsys):
    code, out = run_cli(capsys, "exterior", "--generators", "3", "--base-q", "2",
                        "--format", "json")
    assert code == 0
    assert '"group":"Z/8"' in out


def test_exterior_without_base_is_degree_zero_only(capsys):
    code, doc = run_json(capsys, "exterior", "--generators", "4")
    assert code == 0
    assert doc["results"]["base"] is None
    assert doc["results"]["groups"] == [
        {"ambiguous": False, "group": "Z/16", "i": 0}
    ]


def test_group_algebra_report(capsys):
    code, doc = run_json(capsys, "group-algebra", "--p", "3", "--r", "2",
                         "--base-q", "3", "--max-degree", "9")
    assert code == 0
    groups = doc["results"]["groups"]
    assert groups[0]["group"] == "Z/9"
    assert all(g["group"] == "0" for g in groups[1:])
    assert not any(g["ambiguous"] for g in groups)


def test_truncated_and_nakayama(capsys):
    code, doc = run_json(capsys, "truncated", "--m", "4", "--base-q", "2",
                         "--max-degree", "0")
    assert code == 0 and doc["results"]["groups"][0]["group"] == "Z/4"
    code, doc = run_json(capsys, "nakayama", "--n", "3", "--length", "3",
                         "--base-q", "5", "--max-degree", "1")
    assert code == 0
    assert doc["results"]["groups"][1]["ambiguous"] is True
    assert doc["results"]["groups"][1]["group"] == "Z^2 x Z/4 x Z/4"


def test_algebra_file_round_trip(capsys, tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(
        json.dumps(
            {
                "family": "raw",
                "cartan": [[1, 2], [3, 4]],
                "dim": 10,
                "simples": 2,
                "gorenstein_param": -1,
            }
        )
    )
    code, doc = run_json(capsys, "algebra-file", str(path))
    assert code == 0
    assert doc["results"]["groups"][0]["group"] == "Z/2"
    assert doc["results"]["algebra"]["cartan"] == [[1, 2], [3, 4]]


def test_cluster_even_and_odd(capsys):
    code, doc = run_json(capsys, "cluster", "--n", "4")
    assert code == 0
    assert doc["results"]["determinant"] == 1
    assert doc["results"]["is_phantom"] is True
    code, out = run_cli(capsys, "cluster", "--n", "3")
    assert code == 0
    assert "beyond paper: K0-level cokernel Z" in out


def test_cluster_scan(capsys):
    code, doc = run_json(capsys, "cluster", "--n", "2", "--scan-to", "10")
    assert code == 0
    scan = doc["results"]["scan"]
    assert [row["n"] for row in scan] == list(range(2, 11))
    assert all(row["determinant"] == row["recurrence"] == row["expected"]
               for row in scan)


def test_kgroups_sequence(capsys):
    code, doc = run_json(capsys, "kgroups", "--q", "2", "--max-degree", "7")
    assert code == 0
    got = [g["group"] for g in doc["results"]["groups"]]
    assert got == ["Z", "0", "0", "Z/3", "0", "Z/7", "0", "Z/15"]


def test_phi_verify(capsys):
    code, doc = run_json(capsys, "phi", "--generators", "3", "--verify-snf")
    assert code == 0
    r = doc["results"]
    assert r["matrix"] == [[-1, 0, -1], [-1, -1, 3], [0, -1, -4]]
    assert r["determinant"] == -8
    assert r["verify_snf"]["ok"] is True
    assert r["verify_snf"]["shift_diagonal"] == [1, 1, 8]


def test_phantom_scan_paths(capsys, tmp_path):
    unit = tmp_path / "unit.json"
    unit.write_text(
        json.dumps(
            {
                "family": "raw",
                "cartan": [[2, 1], [1, 1]],
                "dim": 5,
                "simples": 2,
                "gorenstein_param": 0,
            }
        )
    )
    ext = tmp_path / "ext.json"
    ext.write_text(json.dumps({"family": "exterior", "generators": 2}))
    code, doc = run_json(capsys, "phantom-scan", str(unit), str(ext))
    assert code == 0
    assert [e["is_phantom"] for e in doc["results"]] == [True, False]


def test_phantom_scan_empty(capsys):
    code, out = run_cli(capsys, "phantom-scan", "--format", "json")
    assert code == 0
    assert '"results":[]' in out


def test_verify_suite(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "nakayama")
    assert code == 0
    (row,) = doc["results"]
    assert row["ok"] is True and row["mismatches"] == 0


def test_big_integers_become_strings(capsys):
    code, doc = run_json(capsys, "exterior", "--generators", "60")
    assert code == 0
    cartan = doc["results"]["symbolic_cone"]["matrix"]
    assert cartan == [[str(2**60)]]
    assert doc["results"]["groups"][0]["group"] == f"Z/{2**60}"


# -- error paths -----------------------------------------------------------


def test_domain_error_object(capsys):
    code, out = run_cli(capsys, "exterior", "--generators", "0")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["code"] == "domain_error"


def test_schema_error_object(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "family": "raw",
                "cartan": [[1, 2, 3], [4, 5, 6]],
                "dim": 21,
                "simples": 2,
                "gorenstein_param": 0,
            }
        )
    )
    code, out = run_cli(capsys, "algebra-file", str(bad))
    assert code == 1
    err = json.loads(out)["error"]
    assert err["code"] == "schema_violation"
    assert "cartan not square" in err["message"]


def test_file_not_found_object(capsys, tmp_path):
    code, out = run_cli(capsys, "algebra-file", str(tmp_path / "missing.json"))
    assert code == 1
    assert json.loads(out)["error"]["code"] == "file_not_found"


def test_bad_base_q(capsys):
    code, out = run_cli(capsys, "exterior", "--generators", "2", "--base-q", "6")
    assert code == 1
    assert json.loads(out)["error"]["code"] == "domain_error"


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["exterior"])  # missing required --generators
    assert exc.value.code == 2


# -- determinism and output plumbing ---------------------------------------


def test_json_byte_determinism_in_process(capsys):
    argv = ["nakayama", "--n", "3", "--length", "4", "--base-q", "5",
            "--max-degree", "6", "--format", "json"]
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    assert first == second


def test_json_byte_determinism_subprocess():
    cmd = [sys.executable, "-m", "stablekh.cli", "cluster", "--n", "7",
           "--scan-to", "12", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = run_cli(capsys, "kgroups", "--q", "3", "--max-degree", "2",
                        "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["command"] == "kgroups"


def test_timestamps_flag_adds_key(capsys):
    code, doc = run_json(capsys, "kgroups", "--q", "2", "--max-degree", "1",
                         "--timestamps")
    assert code == 0 and "timestamp" in doc
    code, doc = run_json(capsys, "kgroups", "--q", "2", "--max-degree", "1")
    assert code == 0 and "timestamp" not in doc
