"""Golden-fixture file schema and comparison against the primary engine.

A fixture file is a JSON array of records::

    {
      "function": "ExtendedBeta",
      "args": {"x_re": "1.5", "x_im": "0", ...},   # decimal strings
      "value_re": "...",   # >= 30 significant digits
      "value_im": "...",
      "precision_digits": 50,
      "generator": "..."
    }

Values stay strings end to end so that parse -> serialize round-trips
byte-identically; they are converted to floats only at comparison time.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .errors import DomainError
from .extbeta import Extension, chaudhry_beta, extended_beta
from .kernels import bessel_k
from .series import EngineConfig, HbParams, Point3, h_b, h_b_a, h_b_pv, x4

__all__ = [
    "FIXTURE_FUNCTIONS",
    "FixtureRecord",
    "load_fixtures",
    "dump_fixtures",
    "evaluate_record",
    "compare_fixtures",
]

FIXTURE_FUNCTIONS = ("BesselK", "ChaudhryBeta", "ExtendedBeta", "HB", "HBA", "X4", "HBPV")
FIXTURE_REL_TOL = 1e-9


@dataclass
class FixtureRecord:
    function: str
    args: dict[str, str]
    value_re: str
    value_im: str
    precision_digits: int
    generator: str

    def __post_init__(self):
        if self.function not in FIXTURE_FUNCTIONS:
            raise DomainError(f"unknown fixture function {self.function!r}")
        if int(self.precision_digits) < 30:
            raise DomainError("fixture precision_digits must be >= 30")
        float(self.value_re)
        float(self.value_im)
        for key, val in self.args.items():
            if not isinstance(val, str):
                raise DomainError(f"fixture arg {key} must be a decimal string")
            float(val)

    def value(self) -> complex:
        return complex(float(self.value_re), float(self.value_im))

    def as_dict(self) -> dict:
        return {
            "function": self.function,
            "args": {k: self.args[k] for k in sorted(self.args)},
            "value_re": self.value_re,
            "value_im": self.value_im,
            "precision_digits": int(self.precision_digits),
            "generator": self.generator,
        }


def load_fixtures(path: str) -> list[FixtureRecord]:
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise DomainError("fixture file must hold a JSON array")
    return [FixtureRecord(**entry) for entry in raw]


def dump_fixtures(records: list[FixtureRecord]) -> str:
    """Canonical serialization: 2-space indent, fixed key order, sorted args."""
    return json.dumps([r.as_dict() for r in records], indent=2, ensure_ascii=False) + "\n"


def _carg(args: dict[str, str], stem: str) -> complex:
    return complex(float(args.get(f"{stem}_re", "0")), float(args.get(f"{stem}_im", "0")))


def _point(args: dict[str, str]) -> Point3:
    return Point3(_carg(args, "x"), _carg(args, "y"), _carg(args, "z"))


def _params(args: dict[str, str]) -> HbParams:
    return HbParams(*(float(args[k]) for k in ("b1", "b2", "b3", "c1", "c2", "c3")))


def evaluate_record(rec: FixtureRecord, cfg: EngineConfig | None = None) -> complex:
    """Recompute the record's value with the double-precision engine."""
    cfg = cfg or EngineConfig()
    args = rec.args
    if rec.function == "BesselK":
        return bessel_k(float(args["nu"]), _carg(args, "z"))
    if rec.function == "ChaudhryBeta":
        return chaudhry_beta(_carg(args, "x"), _carg(args, "y"), _carg(args, "p"),
                             tol=cfg.quad_tol, max_level=cfg.max_quad_level)
    if rec.function == "ExtendedBeta":
        ext = Extension(_carg(args, "p"), float(args["nu"]))
        return extended_beta(_carg(args, "x"), _carg(args, "y"), ext,
                             tol=cfg.quad_tol, max_level=cfg.max_quad_level)
    if rec.function == "HB":
        return h_b(_params(args), _point(args), cfg).value
    if rec.function == "HBA":
        return h_b_a(_params(args), _carg(args, "a"), _point(args), cfg).value
    if rec.function == "X4":
        return x4(float(args["b1"]), float(args["b2"]), float(args["c1"]),
                  float(args["c2"]), float(args["c3"]), _point(args), cfg).value
    if rec.function == "HBPV":
        ext = Extension(_carg(args, "p"), float(args["nu"]))
        return h_b_pv(_params(args), ext, _point(args), cfg).value
    raise DomainError(f"unknown fixture function {rec.function!r}")


def compare_fixtures(
    records: list[FixtureRecord],
    cfg: EngineConfig | None = None,
    rel_tol: float = FIXTURE_REL_TOL,
) -> tuple[bool, list[dict]]:
    """Evaluate every record and compare; returns (all_matched, per-record rows)."""
    rows = []
    all_ok = True
    for idx, rec in enumerate(records):
        want = rec.value()
        got = evaluate_record(rec, cfg)
        scale = max(abs(want), 1e-300)
        rel = abs(got - want) / scale
        ok = rel <= rel_tol
        all_ok &= ok
        rows.append({
            "index": idx,
            "function": rec.function,
            "rel_error": rel,
            "matched": ok,
        })
    return all_ok, rows
