"""Job schema, the dual-precision agreement gate, and fixture serialization.

A job file is a JSON array of objects::

    {"function": "HBPV", "args": {"b1": "1", ...}, "precision_digits": 50}

Every value is computed twice: once at the target precision and once at
target+10 digits with a finer quadrature grid and a larger summation cube.
A fixture is emitted only when the two runs agree to ``target - 10``
significant digits; rejected jobs go to a sidecar report instead.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import mpmath as mp

from .highprec import RunSettings, evaluate_function

__all__ = ["OracleJob", "load_jobs", "generate_fixtures", "dump_fixture_records"]

FIXTURE_FUNCTIONS = ("BesselK", "ChaudhryBeta", "ExtendedBeta", "HB", "HBA", "X4", "HBPV")
_GATE_MARGIN = 10  # emitted only on (target - margin)-digit agreement
_STR_DIGITS = 40


@dataclass
class OracleJob:
    function: str
    args: dict[str, str]
    precision_digits: int = 50
    output: str | None = None

    def __post_init__(self):
        if self.function not in FIXTURE_FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")
        if self.precision_digits < 30:
            raise ValueError("precision_digits must be >= 30")
        for key, val in self.args.items():
            if not isinstance(val, str):
                raise ValueError(f"argument {key} must be a decimal string")
            mp.mpf(val)


def load_jobs(path: str) -> list[OracleJob]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("job file must hold a JSON array")
    return [OracleJob(**entry) for entry in raw]


def _record_dict(job: OracleJob, value, agreed_digits: int, generator: str) -> dict:
    with mp.workdps(job.precision_digits + 5):
        value_re = mp.nstr(mp.re(value), _STR_DIGITS)
        value_im = mp.nstr(mp.im(value), _STR_DIGITS)
    return {
        "function": job.function,
        "args": {k: job.args[k] for k in sorted(job.args)},
        "value_re": value_re,
        "value_im": value_im,
        "precision_digits": int(job.precision_digits),
        "generator": generator,
    }


def dump_fixture_records(records: list[dict]) -> str:
    """Same canonical layout the verification CLI parses and re-emits."""
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def _agreement_digits(v1, v2) -> int:
    with mp.workdps(40):
        scale = max(abs(v1), abs(v2))
        if scale == 0:
            return 99
        diff = abs(v1 - v2)
        if diff == 0:
            return 99
        return int(-mp.log10(diff / scale))


@dataclass
class GenerationResult:
    records: list[dict] = field(default_factory=list)
    rejected: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.rejected


def generate_fixtures(jobs: list[OracleJob], max_cube: int = 80) -> GenerationResult:
    """Run the dual evaluation for every job and gate on cross-run agreement."""
    out = GenerationResult()
    for idx, job in enumerate(jobs):
        target = job.precision_digits
        runs = (
            RunSettings(dps=target, grid_shift=0, cube_extra=0, max_cube=max_cube),
            RunSettings(dps=target + 10, grid_shift=1, cube_extra=4, max_cube=max_cube),
        )
        try:
            v1 = evaluate_function(job.function, job.args, runs[0])
            v2 = evaluate_function(job.function, job.args, runs[1])
        except Exception as exc:
            out.rejected.append({"index": idx, "function": job.function, "reason": str(exc)})
            continue
        digits = _agreement_digits(v1, v2)
        gate = target - _GATE_MARGIN
        if digits < gate:
            out.rejected.append({
                "index": idx,
                "function": job.function,
                "reason": f"dual-precision agreement {digits} digits, below gate {gate}",
            })
            continue
        generator = (
            f"hbpv-oracle 0.1.0 cube+grid dual run dps={target}/{target + 10}, "
            f"{digits}-digit agreement"
        )
        out.records.append(_record_dict(job, v2, digits, generator))
    return out


def write_outputs(jobs: list[OracleJob], result: GenerationResult,
                  default_out: str, report_path: str) -> None:
    """Write fixture files (grouped by per-job output overrides) and the sidecar."""
    groups: dict[str, list[dict]] = {}
    for job, record in zip([j for j in jobs], _aligned_records(jobs, result)):
        if record is None:
            continue
        groups.setdefault(job.output or default_out, []).append(record)
    if default_out not in groups:
        groups[default_out] = []
    for path, records in groups.items():
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_fixture_records(records))
    report = {
        "accepted": len(result.records),
        "rejected": result.rejected,
    }
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def _aligned_records(jobs: list[OracleJob], result: GenerationResult):
    """Yield the produced record for each job, or None where it was rejected."""
    rejected_idx = {r["index"] for r in result.rejected}
    it = iter(result.records)
    for idx in range(len(jobs)):
        yield None if idx in rejected_idx else next(it)
