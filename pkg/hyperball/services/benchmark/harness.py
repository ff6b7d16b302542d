"""
HyperBall - Benchmark Harness

Runs every (instance, algorithm) pair of a JSON manifest, one CSV row each.
Pairs are scheduled on a thread pool; with isolation on, each solver call runs
in its own spawned process so a timeout can actually stop it. A solver that
crashes yields an `error` row. Rows come back in manifest order whatever the
completion order.

After the run, the answers on each instance are cross-checked: every
non-timed-out algorithm that answers the binary question (plain, or bounded by
the entry's scp) must agree. real-lp answers the real relaxation and is only
reported.

Licensed under the MIT License.
"""

import csv
import logging
import multiprocessing
import queue
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, TextIO, Tuple, Union

from pydantic import ValidationError

from hyperball.core.config import settings
from hyperball.core.exceptions import BenchMismatchError, ParseError, SolverLimitError, VerificationError
from hyperball.schemas.report import BenchEntry, BenchManifest, BenchRow
from hyperball.services.geometry import Instance, load_instance
from hyperball.services.solver_service import SolveOptions, SolveOutcome, run_algorithm

logger = logging.getLogger(__name__)

CSV_COLUMNS = list(BenchRow.model_fields)

# Children are spawned, never forked, from the pool threads.
_CONTEXT = multiprocessing.get_context("spawn")

_CHILD_ERRORS = {
    "limit": SolverLimitError,
    "verification": VerificationError,
    "value": ValueError,
}


@dataclass(frozen=True)
class BenchJob:
    label: str
    instance: Instance
    algo: str
    scp: Optional[int]
    timeout: float


def load_manifest(path: Union[str, Path]) -> BenchManifest:
    path = Path(path)
    try:
        return BenchManifest.model_validate_json(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read manifest {path}: {e}") from e
    except ValidationError as e:
        raise ParseError(f"invalid manifest {path}: {e}") from e


def _solve_in_child(results: "multiprocessing.Queue", inst: Instance, algo: str, options: SolveOptions) -> None:
    try:
        results.put(("ok", run_algorithm(inst, algo, options)))
    except SolverLimitError as e:
        results.put(("limit", str(e)))
    except VerificationError as e:
        results.put(("verification", str(e)))
    except ValueError as e:
        results.put(("value", str(e)))
    except Exception as e:
        results.put(("error", f"{type(e).__name__}: {e}"))


def _run_isolated(job: BenchJob, options: SolveOptions) -> Optional[SolveOutcome]:
    """None when the child overran its timeout."""
    results: "multiprocessing.Queue" = _CONTEXT.Queue()
    child = _CONTEXT.Process(
        target=_solve_in_child, args=(results, job.instance, job.algo, options), daemon=True
    )
    child.start()
    child.join(job.timeout)
    if child.is_alive():
        child.terminate()
        child.join()
        return None
    try:
        kind, payload = results.get(timeout=5)
    except queue.Empty as e:
        raise ChildProcessError(f"exited with code {child.exitcode} and no result") from e
    if kind == "error":
        raise ChildProcessError(payload)
    if kind != "ok":
        raise _CHILD_ERRORS[kind](payload)
    return payload


def _run_job(job: BenchJob, isolate: bool) -> BenchRow:
    inst = job.instance
    row = dict(instance=job.label, d=inst.dim, nR=len(inst.reds), nB=len(inst.blues), icon=inst.icon, algo=job.algo)
    options = SolveOptions(scp=None if job.algo == "real-lp" else job.scp)

    started = time.perf_counter()
    try:
        if isolate:
            outcome = _run_isolated(job, options)
        else:
            outcome = run_algorithm(inst, job.algo, options)
            if (time.perf_counter() - started) > job.timeout:
                outcome = None
    except SolverLimitError as e:
        logger.warning(f"⚠️ {job.algo} refused {job.label}: {e}")
        return BenchRow(**row, status="refused")
    except (VerificationError, ValueError):
        raise
    except Exception as e:
        logger.error(f"❌ {job.algo} failed on {job.label}: {e}")
        return BenchRow(**row, status="error")

    if outcome is None:
        logger.warning(f"⚠️ {job.algo} on {job.label} timed out after {job.timeout}s")
        return BenchRow(**row, status="timeout", time_ms=round(job.timeout * 1000.0, 3))

    solution = outcome.solution
    return BenchRow(
        **row,
        status=outcome.status,
        conciseness=solution.conciseness if solution else None,
        radius=solution.radius if solution else None,
        time_ms=round(outcome.time_ms, 3),
        td_width=outcome.width,
        nodes_expanded=outcome.nodes_expanded,
    )


def build_jobs(manifest: BenchManifest, base_dir: Path) -> List[BenchJob]:
    default_timeout = manifest.timeout or settings.bench_timeout
    cache: Dict[Path, Instance] = {}
    jobs = []
    for entry in manifest.entries:
        path = Path(entry.instance)
        if not path.is_absolute():
            path = base_dir / path
        if path not in cache:
            cache[path] = load_instance(path)
        for algo in entry.algos:
            jobs.append(BenchJob(entry.instance, cache[path], algo, entry.scp, entry.timeout or default_timeout))
    return jobs


def cross_check(rows: List[BenchRow], entries: List[BenchEntry]) -> None:
    """Raise BenchMismatchError when two answering algorithms disagree on one entry."""
    position = 0
    for entry in entries:
        answers: List[Tuple[str, str]] = []
        for row in rows[position:position + len(entry.algos)]:
            if row.algo != "real-lp" and row.status in ("yes", "no"):
                answers.append((row.algo, row.status))
        position += len(entry.algos)
        if len({status for _, status in answers}) > 1:
            detail = ", ".join(f"{algo}={status}" for algo, status in answers)
            question = f"scp={entry.scp}" if entry.scp is not None else "unbounded"
            raise BenchMismatchError(f"{entry.instance} ({question}): {detail}")


def run_bench(
    manifest_path: Union[str, Path],
    workers: Optional[int] = None,
    isolate: Optional[bool] = None,
) -> List[BenchRow]:
    manifest_path = Path(manifest_path)
    manifest = load_manifest(manifest_path)
    jobs = build_jobs(manifest, manifest_path.parent)
    isolate = settings.bench_isolate if isolate is None else isolate
    workers = workers or settings.bench_workers

    logger.info(f"🔍 bench: {len(jobs)} runs on {workers} workers (isolate={isolate})")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_job, job, isolate) for job in jobs]
        rows = [future.result() for future in futures]

    cross_check(rows, manifest.entries)
    logger.info(f"✅ bench finished, {len(rows)} rows cross-checked")
    return rows


def write_bench_csv(rows: List[BenchRow], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.model_dump().items()})
