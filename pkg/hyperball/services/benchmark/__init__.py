"""Manifest-driven benchmark runs with answer cross-checking."""

from hyperball.services.benchmark.harness import (
    CSV_COLUMNS,
    BenchJob,
    build_jobs,
    cross_check,
    load_manifest,
    run_bench,
    write_bench_csv,
)

__all__ = [
    "CSV_COLUMNS",
    "BenchJob",
    "build_jobs",
    "cross_check",
    "load_manifest",
    "run_bench",
    "write_bench_csv",
]
