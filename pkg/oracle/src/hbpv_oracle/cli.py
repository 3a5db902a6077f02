"""hbpv-oracle: generate golden fixtures from a job file.

Exit 0 when every job passed the dual-precision gate, 1 when any was
rejected (rejections are listed in the sidecar report), 2 on unusable input.
"""

from __future__ import annotations

import argparse
import sys

from .jobs import generate_fixtures, load_jobs, write_outputs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hbpv-oracle")
    sub = parser.add_subparsers(dest="command", required=True)
    gen = sub.add_parser("generate", help="compute fixtures for a JSON job list")
    gen.add_argument("--jobs", required=True, help="job file (JSON array)")
    gen.add_argument("--out", required=True, help="fixture file to write")
    gen.add_argument("--report", default=None,
                     help="sidecar report path (default: <out>.report.json)")
    gen.add_argument("--max-cube", type=int, default=80,
                     help="cap on the summation cube bound per axis")
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        jobs = load_jobs(ns.jobs)
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"cannot load jobs: {exc}\n")
        return 2
    result = generate_fixtures(jobs, max_cube=ns.max_cube)
    report_path = ns.report or (ns.out + ".report.json")
    write_outputs(jobs, result, ns.out, report_path)
    sys.stderr.write(
        f"accepted {len(result.records)}/{len(jobs)} jobs; report at {report_path}\n"
    )
    return 0 if result.ok else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
