import json

import pytest

from nilorbits import sweeps
from nilorbits.cli import main
from nilorbits.errors import OutOfRange, ResourceLimit
from nilorbits.partitions import AlgebraType
from nilorbits.sweeps import SUITES, catalog_records, run_suite

from oracles import all_partitions, special_oracle


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_at_small_bounds(suite):
    bound = {"collapse-oracle": 8}.get(suite, 3)
    report = run_suite(suite, bound)
    assert report.ok and report.cases > 0 and report.exit_code == 0


def test_worker_count_does_not_change_results():
    a = run_suite("canonical-quotient", 6, jobs=1)
    b = run_suite("canonical-quotient", 6, jobs=3)
    assert a.to_json(timing=False)["cases"] == b.to_json(timing=False)["cases"]
    assert a.failures == b.failures


def test_bounds_are_enforced():
    with pytest.raises(ResourceLimit):
        run_suite("seesaw", 40)
    with pytest.raises(OutOfRange):
        run_suite("no-such-suite", 2)
    with pytest.raises(OutOfRange):
        run_suite("seesaw", 0)


def test_failures_are_reported_and_sorted(monkeypatch, tmp_path, capsys):
    def broken(n):
        return [{"check": "x", "case": [n], "expected": 1, "actual": 0}]

    monkeypatch.setattr(sweeps, "_case_footprint", broken)
    report = run_suite("footprint", 4)
    assert not report.ok and report.exit_code == 1
    assert [f["case"] for f in report.failures] == [[1], [2], [3], [4]]
    out = tmp_path / "f.jsonl"
    code = main(["verify", "footprint", "--max-rank", "4", "--out", str(out)])
    assert code == 1
    lines = out.read_text().splitlines()
    assert len(lines) == 4 and all(json.loads(x)["check"] == "x" for x in lines)
    summary = json.loads(capsys.readouterr().out)
    assert summary["failures"] == 4 and summary["ok"] is False


def test_exceptions_inside_a_case_become_failures(monkeypatch):
    def raising(n):
        raise AssertionError("boom")

    monkeypatch.setattr(sweeps, "_case_mirror", raising)
    report = run_suite("mirror", 2)
    assert len(report.failures) == 2 and report.failures[0]["check"] == "raised"


def test_catalog_count_matches_independent_enumeration():
    recs = catalog_records(5)
    for fam in "BC":
        for n in range(1, 6):
            algebra = AlgebraType(fam, n)
            count = sum(1 for d in all_partitions(algebra.N) if special_oracle(d, fam))
            assert count == sum(1 for r in recs if r["family"] == fam and r["rank"] == n)


def test_catalog_order_and_schema():
    recs = catalog_records(4)
    keys = [(r["rank"], r["family"], r["partition"]) for r in recs]
    assert keys == sorted(keys)
    assert all(r["schema"] == 1 for r in recs)
