"""
Runs a named sweep check over its case list, optionally across worker
processes, and writes the NDJSON certificate in canonical case order.
"""
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Optional

from pydantic import BaseModel
from tqdm import tqdm

from lenscontact.core.config import settings
from lenscontact.core.errors import OutOfScopeError, UsageError
from lenscontact.core.serialization import dumps_line
from lenscontact.orchestrator.checks import CHECKS, Row, run_case

logger = logging.getLogger(__name__)


class SweepSummary(BaseModel):
    """Outcome of one sweep"""
    check: str
    pmax: Optional[int] = None
    cases: int
    rows: int
    passed: int
    failed: int
    certificate: str
    first_failure: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


class SweepOrchestrator:

    def available(self) -> List[str]:
        return sorted(CHECKS)

    def cases(self, check: str, pmax: Optional[int] = None) -> List[tuple]:
        if check not in CHECKS:
            raise UsageError(f"unknown check '{check}'", check=check, available=self.available())
        entry = CHECKS[check]
        bound = entry.default_pmax if pmax is None else pmax
        if bound is not None and bound < 2:
            raise OutOfScopeError(f"--pmax must be at least 2, got {bound}", pmax=bound)
        return entry.cases(bound)

    def iter_rows(self, check: str, cases: List[tuple], workers: int = 1, progress: bool = False) -> Iterator[Row]:
        tasks = [(check, case) for case in cases]
        bar = tqdm(total=len(tasks), desc=check, file=sys.stderr, disable=not progress)
        try:
            if workers <= 1:
                batches: Iterable[List[Row]] = map(run_case, tasks)
                for batch in batches:
                    bar.update(1)
                    yield from batch
            else:
                chunk = max(1, len(tasks) // (workers * 8))
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    for batch in pool.map(run_case, tasks, chunksize=chunk):
                        bar.update(1)
                        yield from batch
        finally:
            bar.close()

    def run(
        self,
        check: str,
        pmax: Optional[int] = None,
        workers: Optional[int] = None,
        out: Optional[str] = None,
        progress: bool = False,
        sink: Optional[Callable[[bytes], None]] = None,
    ) -> SweepSummary:
        """Hand certificate lines to `sink` if given, else write them to `out` (default under CERT_DIR)"""
        workers = settings.WORKERS if workers is None else workers
        cases = self.cases(check, pmax)
        bound = CHECKS[check].default_pmax if pmax is None else pmax
        logger.info(f"sweep {check}: {len(cases)} cases, pmax={bound}, workers={workers}")

        if sink is None:
            path = out or os.path.join(settings.CERT_DIR, f"{check}.ndjson")
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(path, "wb") as handle:
                summary = self._write(check, bound, cases, workers, progress, handle.write, path)
        else:
            summary = self._write(check, bound, cases, workers, progress, sink, "-")

        logger.info(f"sweep {check}: {summary.passed} passed, {summary.failed} failed")
        return summary

    def _write(self, check, bound, cases, workers, progress, sink, label) -> SweepSummary:
        rows = passed = 0
        first_failure = None
        for row in self.iter_rows(check, cases, workers, progress):
            sink(dumps_line(row))
            rows += 1
            if row["pass"]:
                passed += 1
            elif first_failure is None:
                first_failure = row
                logger.warning(f"sweep {check}: failure {row}")
        return SweepSummary(
            check=check,
            pmax=bound,
            cases=len(cases),
            rows=rows,
            passed=passed,
            failed=rows - passed,
            certificate=label,
            first_failure=first_failure,
        )


sweep_orchestrator = SweepOrchestrator()
