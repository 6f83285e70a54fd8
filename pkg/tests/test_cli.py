import json
import subprocess
import sys

import pytest

from nilorbits.cli import main
from nilorbits.qseries import QRational


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out.strip().splitlines()[-1])


def test_orbit_dual(capsys):
    code, out = run_json(capsys, "orbit", "dual", "--family", "C", "--partition", "2,2")
    assert code == 0 and out == {"dual": [3, 1, 1], "family": "B", "schema": 1}


def test_orbit_classify(capsys):
    code, out = run_json(capsys, "orbit", "classify", "--family", "C", "--partition", "2,2,2,2,1,1")
    assert out["special"] and out["rigid"] and out["spherical"] and not out["richardson"]


def test_orbit_collapse_and_dimension(capsys):
    _, out = run_json(capsys, "orbit", "collapse", "--family", "C", "--partition", "8,8,8,8,7,5,4,4,4,4,3,3")
    assert out["collapse"] == [8, 8, 8, 8, 6, 6, 4, 4, 4, 4, 3, 3]
    _, out = run_json(capsys, "orbit", "dimension", "--family", "C", "--partition", "6")
    assert out["dimension"] == 18


def test_rank_flag_checked(capsys):
    code, out = run_json(capsys, "orbit", "dimension", "--family", "C", "--partition", "2,2", "--rank", "3")
    assert code == 1 and out["error"] == "TotalMismatch"


def test_groups(capsys):
    _, out = run_json(capsys, "groups", "--family", "C", "--partition", "9,9,8,6,6,4,3,3,2,2")
    assert out["script_A"]["basis"] == [8, 6, 4, 2] and out["quotient"]["rank"] == 2
    _, out = run_json(capsys, "groups", "--family", "C", "--partition", "2,2,2,2,1,1")
    assert out["A_rank"] == out["pi1"]["elementary_rank"] == out["quotient"]["rank"] == 1
    _, out = run_json(capsys, "groups", "--family", "C", "--partition", "1,1,1,1")
    assert out["script_A"]["rank"] == 0 and out["K"]["rank"] == 0 and out["quotient"]["rank"] == 0


def test_footprint_and_seesaw(capsys):
    _, out = run_json(capsys, "footprint", "--partition", "4,4,1,1")
    assert (out["alpha"], out["beta"], out["m"], out["degree_pairs"]) == (1, 0, 0, [[2, 1]])
    code, out = run_json(capsys, "seesaw", "--partition", "8,8,8,8,6,6,4,4,4,4,3,3")
    assert code == 0 and out["verdict"] == "pass"


@pytest.mark.parametrize("n", [2, 3, 5])
def test_induce_regular(capsys, n):
    _, out = run_json(capsys, "induce", "--levi", f"1x{n - 1};2", "--tail-orbit", "2")
    assert out["induced"] == [2 * n]


def test_epoly_commands(capsys):
    _, out = run_json(capsys, "epoly", "ig", "--k", "4", "--n", "10", "--leading", "5")
    assert out["leading"] == [[18, 1], [17, 1], [16, 2], [15, 3], [14, 4]]
    _, out = run_json(capsys, "epoly", "complete-quadrics", "--m", "4")
    assert out["value"] == "q^9 + 3q^8 + 6q^7 + 10q^6 + 13q^5 + 13q^4 + 10q^3 + 6q^2 + 3q + 1"
    assert QRational.from_json(out["exact_value"]).render() == out["value"]


def test_stringy_commands(capsys):
    _, out = run_json(capsys, "stringy", "spherical", "--family", "D", "--r", "2", "--l", "1", "--check-palindrome", "6,28")
    assert out["polynomial"] and out["palindromic"] and out["value"].startswith("q^28 + 2q^26 + 3q^24")
    _, out = run_json(capsys, "stringy", "spherical", "--family", "C", "--r", "2", "--l", "1")
    assert out["leading"] == [[28, 1], [26, 1], [25, 2], [24, 2], [23, 4]] and out["exact"] is False
    _, out = run_json(capsys, "stringy", "regular-cover", "--rank", "4")
    assert out["mirror_check"] is True
    _, out = run_json(capsys, "stringy", "minimal", "--family", "C", "--rank", "3")
    assert out["value"] == "q^6 + q^3"


def test_text_mode(capsys):
    code, out = run(capsys, "orbit", "dual", "--family", "C", "--partition", "2,2", "--text")
    assert code == 0 and "dual: [3, 1, 1]" in out and "{" not in out


def test_exit_codes(capsys):
    code, out = run_json(capsys, "orbit", "dual", "--family", "C", "--partition", "3,1")
    assert code == 1 and out["error"] == "InvalidOrbit"
    code, out = run_json(capsys, "orbit", "dual", "--family", "C", "--partition", "1,3")
    assert code == 1 and out["error"] == "NotSorted"
    code, _ = run(capsys, "orbit", "dual", "--family", "C", "--partition", "a,b")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["orbit", "explode", "--family", "C", "--partition", "2"])
    assert exc.value.code == 2
    code, out = run_json(capsys, "verify", "seesaw", "--max-rank", "50")
    assert code == 3 and out["error"] == "ResourceLimit"
    code, _ = run(capsys, "epoly", "ig", "--k", "1")
    assert code == 2


def test_verify_writes_failures_file(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("NILORBITS_OUT_DIR", str(tmp_path))
    code, out = run_json(capsys, "verify", "footprint", "--max-rank", "5")
    assert code == 0 and out["failures"] == 0 and out["cases"] == 5
    path = tmp_path / "verify-footprint.jsonl"
    assert path.exists() and path.read_text() == ""
    code, out = run_json(capsys, "verify", "collapse-oracle", "--max-n", "8", "--out", str(tmp_path / "c.jsonl"))
    assert code == 0 and (tmp_path / "c.jsonl").exists()


def test_catalog(capsys, tmp_path):
    code, _ = run(capsys, "catalog", "--max-rank", "3", "--family", "C", "--out", str(tmp_path / "c.jsonl"))
    lines = (tmp_path / "c.jsonl").read_text().splitlines()
    recs = [json.loads(x) for x in lines]
    two_two = [r for r in recs if r["partition"] == [2, 2]]
    assert code == 0 and two_two and two_two[0]["dual"] == [3, 1, 1]
    assert all(r["schema"] == 1 for r in recs)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nilorbits", "orbit", "dual", "--family", "B", "--partition", "3,1,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["dual"] == [2, 2]
