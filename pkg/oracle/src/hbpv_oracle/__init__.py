"""Arbitrary-precision golden-fixture generator for the hbpv verification CLI."""

from .highprec import RunSettings, evaluate_function
from .jobs import OracleJob, dump_fixture_records, generate_fixtures, load_jobs

__version__ = "0.1.0"

__all__ = [
    "OracleJob",
    "RunSettings",
    "dump_fixture_records",
    "evaluate_function",
    "generate_fixtures",
    "load_jobs",
    "__version__",
]
