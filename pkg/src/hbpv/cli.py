"""Command-line front end: eval | verify | table | fixtures.

Exit codes: 0 success, 1 failed verification/fixture mismatch, 2 domain
error, 3 non-convergence, 4 missing/unreadable fixture file.  All numeric
output is serialized with 17 significant digits, so identical command lines
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DomainError, HbpvError, NonConvergenceError
from .extbeta import Extension, chaudhry_beta, extended_beta
from .fixtures import compare_fixtures, load_fixtures
from .kernels import bessel_k
from .series import EngineConfig, EvalResult, HbParams, Point3, h_b, h_b_a, h_b_pv, x4
from .suites import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NO_CONVERGENCE = 3
EXIT_NO_FIXTURES = 4

EVAL_FUNCTIONS = ("besselk", "chaudhrybeta", "extendedbeta", "hb", "hba", "x4", "hbpv")

_VALUE_FLAGS = (
    "b1", "b2", "b3", "c1", "c2", "c3",
    "p-re", "p-im", "nu",
    "x-re", "x-im", "y-re", "y-im", "z-re", "z-im",
    "s",
)


def _fmt(value) -> str:
    """Render one JSON scalar; floats get 17 significant digits."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, str):
        import json as _json

        return _json.dumps(value)
    if isinstance(value, dict):
        inner = ", ".join(f"{_fmt(k)}: {_fmt(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _print_json(obj: dict) -> None:
    sys.stdout.write(_fmt(obj) + "\n")


def _add_value_flags(parser: argparse.ArgumentParser) -> None:
    for flag in _VALUE_FLAGS:
        parser.add_argument(f"--{flag}", type=float, default=None)
    parser.add_argument("--tol", type=float, default=1e-12)


def _get(ns: argparse.Namespace, flag: str, default: float | None = None) -> float:
    v = getattr(ns, flag.replace("-", "_"))
    if v is None:
        if default is None:
            raise DomainError(f"missing required flag --{flag}")
        return default
    return float(v)


def _complex(ns, stem: str, required: bool = False) -> complex:
    re = _get(ns, f"{stem}-re", None if required else 0.0)
    im = _get(ns, f"{stem}-im", 0.0)
    return complex(re, im)


def _point(ns) -> Point3:
    return Point3(_complex(ns, "x"), _complex(ns, "y"), _complex(ns, "z"))


def _params(ns) -> HbParams:
    return HbParams(*(_get(ns, f) for f in ("b1", "b2", "b3", "c1", "c2", "c3")))


def _evaluate(function: str, ns) -> EvalResult:
    cfg = EngineConfig(series_tol=ns.tol, quad_tol=ns.tol)
    if function == "besselk":
        v, under = bessel_k(_get(ns, "nu"), _complex(ns, "z", required=True), return_flag=True)
        return EvalResult(v, 0, 0.0, True)
    if function == "chaudhrybeta":
        v = chaudhry_beta(_complex(ns, "x", required=True), _complex(ns, "y", required=True),
                          _complex(ns, "p", required=True), tol=ns.tol)
        return EvalResult(v, 0, 0.0, True)
    if function == "extendedbeta":
        ext = Extension(_complex(ns, "p", required=True), _get(ns, "nu"))
        v = extended_beta(_complex(ns, "x", required=True), _complex(ns, "y", required=True),
                          ext, tol=ns.tol)
        return EvalResult(v, 0, 0.0, True)
    if function == "hb":
        return h_b(_params(ns), _point(ns), cfg)
    if function == "hba":
        return h_b_a(_params(ns), _get(ns, "s"), _point(ns), cfg)
    if function == "x4":
        return x4(_get(ns, "b1"), _get(ns, "b2"), _get(ns, "c1"), _get(ns, "c2"),
                  _get(ns, "c3"), _point(ns), cfg)
    if function == "hbpv":
        ext = Extension(_complex(ns, "p", required=True), _get(ns, "nu"))
        return h_b_pv(_params(ns), ext, _point(ns), cfg)
    raise DomainError(f"unknown function {function!r}")


def _result_payload(res: EvalResult) -> dict:
    return {
        "value_re": res.value.real,
        "value_im": res.value.imag,
        "shells_used": res.shells_used,
        "tail_estimate": res.tail_estimate,
        "converged": res.converged,
    }


def cmd_eval(ns) -> int:
    try:
        res = _evaluate(ns.function, ns)
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except NonConvergenceError as exc:
        sys.stderr.write(f"non-convergence: {exc}\n")
        return EXIT_NO_CONVERGENCE
    _print_json(_result_payload(res))
    if not res.converged:
        sys.stderr.write("non-convergence: series hit its shell cap\n")
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def cmd_verify(ns) -> int:
    names = list(SUITE_NAMES) if ns.suite == "all" else [ns.suite]
    try:
        reports = run_suites(names, ns.samples, ns.seed)
    except HbpvError as exc:
        sys.stderr.write(f"verification aborted: {exc}\n")
        return EXIT_DOMAIN
    passed = all(r.passed for r in reports)
    payload = {
        "suite": ns.suite,
        "samples": ns.samples,
        "seed": ns.seed,
        "passed": passed,
        "checks": [r.as_dict() for r in reports],
    }
    _print_json(payload)
    return EXIT_OK if passed else EXIT_FAILED


def _parse_axis(spec: str) -> tuple[str, list[float]]:
    try:
        name, rng = spec.split("=", 1)
        start_s, stop_s, count_s = rng.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError as exc:
        raise DomainError(f"bad axis spec {spec!r}; expected NAME=START:STOP:COUNT") from exc
    if name not in _VALUE_FLAGS:
        raise DomainError(f"axis variable {name!r} is not a known flag")
    if count < 0:
        raise DomainError("axis count must be >= 0")
    if count == 0:
        return name, []
    if count == 1:
        return name, [start]
    step = (stop - start) / (count - 1)
    return name, [start + i * step for i in range(count)]


def cmd_table(ns) -> int:
    try:
        axes = [_parse_axis(spec) for spec in ns.axis or []]
        axes.sort(key=lambda kv: kv[0])
        names = [name for name, _ in axes]
        if len(set(names)) != len(names):
            raise DomainError("duplicate axis variable")

        grids: list[list[float]] = [vals for _, vals in axes]
        rows = []
        if all(len(g) > 0 for g in grids) and grids:
            import itertools

            for combo in itertools.product(*grids):
                for name, val in zip(names, combo):
                    setattr(ns, name.replace("-", "_"), val)
                res = _evaluate(ns.function, ns)
                rows.append(list(combo) + [res.value.real, res.value.imag, res.converged])
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except NonConvergenceError as exc:
        sys.stderr.write(f"non-convergence: {exc}\n")
        return EXIT_NO_CONVERGENCE

    header = names + ["value_re", "value_im", "converged"]
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v).strip('"') for v in row))
    text = "\n".join(lines) + "\n"
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fixtures(ns) -> int:
    try:
        records = load_fixtures(ns.path)
    except FileNotFoundError:
        sys.stderr.write(f"fixture file not found: {ns.path}\n")
        return EXIT_NO_FIXTURES
    except Exception as exc:  # malformed JSON/schema counts as unreadable
        sys.stderr.write(f"fixture file unreadable: {exc}\n")
        return EXIT_NO_FIXTURES
    ok, rows = compare_fixtures(records)
    _print_json({
        "path": ns.path,
        "records": len(records),
        "passed": ok,
        "results": rows,
    })
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbpv",
        description="Evaluate and verify the (p,nu)-extended Srivastava triple "
                    "hypergeometric function and its supporting special functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("function", choices=EVAL_FUNCTIONS)
    _add_value_flags(p_eval)
    p_eval.set_defaults(fn=cmd_eval)

    p_verify = sub.add_parser("verify", help="run seeded identity-verification suites")
    p_verify.add_argument("suite", choices=("all",) + SUITE_NAMES)
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(fn=cmd_verify)

    p_table = sub.add_parser("table", help="tabulate a function over axis grids to CSV")
    p_table.add_argument("function", choices=EVAL_FUNCTIONS)
    p_table.add_argument("--axis", action="append", metavar="NAME=START:STOP:COUNT")
    _add_value_flags(p_table)
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(fn=cmd_table)

    p_fix = sub.add_parser("fixtures", help="compare golden fixtures against the engine")
    p_fix.add_argument("path")
    p_fix.set_defaults(fn=cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return ns.fn(ns)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
