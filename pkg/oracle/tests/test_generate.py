"""Job loading, the dual-precision gate, serialization, and CLI integration."""

import json
import shutil
import subprocess

import pytest

from hbpv_oracle.cli import main
from hbpv_oracle.jobs import (
    OracleJob,
    dump_fixture_records,
    generate_fixtures,
    load_jobs,
)

BESSEL_JOB = {"function": "BesselK",
              "args": {"nu": "0.5", "z_re": "2", "z_im": "0"},
              "precision_digits": 30}
HB_JOB = {"function": "HB",
          "args": {"b1": "1", "b2": "1", "b3": "1", "c1": "2", "c2": "2", "c3": "2",
                   "x_re": "0.02", "x_im": "0", "y_re": "0.02", "y_im": "0",
                   "z_re": "0.02", "z_im": "0"},
          "precision_digits": 30}


def test_job_validation():
    with pytest.raises(ValueError):
        OracleJob(function="NoSuch", args={})
    with pytest.raises(ValueError):
        OracleJob(function="BesselK", args={"nu": "0.5"}, precision_digits=20)
    with pytest.raises(ValueError):
        OracleJob(function="BesselK", args={"nu": "zzz"})


def test_gate_accepts_clean_jobs():
    result = generate_fixtures([OracleJob(**BESSEL_JOB), OracleJob(**HB_JOB)])
    assert result.ok
    assert len(result.records) == 2
    rec = result.records[0]
    assert rec["function"] == "BesselK"
    assert float(rec["value_re"]) > 0
    assert rec["precision_digits"] == 30
    assert "agreement" in rec["generator"]
    # at least 30 significant digits serialized
    assert len(rec["value_re"].replace("0.", "").replace("-", "").replace(".", "")) >= 30


def test_gate_rejects_truncation_starved_cube():
    # a cube capped at 6 truncates the series at ~1e-4, far below the gate
    result = generate_fixtures([OracleJob(**HB_JOB)], max_cube=6)
    assert not result.ok
    assert result.records == []
    assert "below gate" in result.rejected[0]["reason"]


def test_serialization_round_trip():
    result = generate_fixtures([OracleJob(**BESSEL_JOB)])
    text = dump_fixture_records(result.records)
    assert dump_fixture_records(json.loads(text)) == text


def test_load_jobs_roundtrip(tmp_path):
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps([BESSEL_JOB, HB_JOB]), encoding="utf-8")
    jobs = load_jobs(str(path))
    assert [j.function for j in jobs] == ["BesselK", "HB"]


def test_cli_generate_and_report(tmp_path):
    jobs_path = tmp_path / "jobs.json"
    out_path = tmp_path / "fix.json"
    jobs_path.write_text(json.dumps([BESSEL_JOB]), encoding="utf-8")
    code = main(["generate", "--jobs", str(jobs_path), "--out", str(out_path)])
    assert code == 0
    records = json.loads(out_path.read_text())
    assert len(records) == 1
    report = json.loads((tmp_path / "fix.json.report.json").read_text())
    assert report["accepted"] == 1
    assert report["rejected"] == []


def test_cli_bad_jobs_file(tmp_path):
    code = main(["generate", "--jobs", str(tmp_path / "none.json"), "--out", str(tmp_path / "o")])
    assert code == 2


@pytest.mark.skipif(shutil.which("hbpv") is None, reason="verification CLI not on PATH")
def test_generated_file_feeds_the_verification_cli(tmp_path):
    jobs_path = tmp_path / "jobs.json"
    out_path = tmp_path / "fix.json"
    jobs_path.write_text(json.dumps([BESSEL_JOB, HB_JOB]), encoding="utf-8")
    assert main(["generate", "--jobs", str(jobs_path), "--out", str(out_path)]) == 0
    proc = subprocess.run(
        ["hbpv", "fixtures", str(out_path)], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(proc.stdout)
    assert payload["passed"] is True
    assert payload["records"] == 2
