"""
Runner for the check suites
"""
import logging
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import settings
from src.models.results import CheckResult, Summary, Verdict
from src.verify.grids import Grid, get_grid
from src.utils.logging_config import setup_worker_logging
from src.verify.suites import SUITES, Item, build_items, get_suite

logger = logging.getLogger(__name__)

Job = Tuple[str, Grid, int, Tuple[int, ...]]


def execute(item: Item) -> CheckResult:
    """
    Run one item.

    An exception inside the item is logged and becomes a fail result so
    one broken item never stops the rest of a suite.
    """
    start = time.perf_counter()
    try:
        verdict, detail, *rest = item.run()
        oracle = rest[0] if rest and verdict is not Verdict.PASS else None
    except Exception as e:
        logger.error(f"Error running {item.label}: {e}")
        logger.debug(traceback.format_exc())
        verdict, detail, oracle = Verdict.FAIL, f"{type(e).__name__}: {e}", None
    elapsed = time.perf_counter() - start

    if verdict is Verdict.FAIL:
        logger.error(f"[{item.suite}] FAIL {item.label}: {detail}")
    elif verdict is Verdict.DISCREPANCY:
        logger.warning(f"[{item.suite}] paper-discrepancy {item.label}: {detail}")
    else:
        logger.debug(f"[{item.suite}] pass {item.label} ({elapsed:.3f}s)")
    return CheckResult(suite=item.suite, item=item.label, verdict=verdict,
                       source=item.source, detail=detail, oracle=oracle, elapsed=elapsed)


def _run_chunk(job: Job) -> List[Tuple[int, CheckResult]]:
    """Worker entry point: rebuild the suite's items and run the given indices"""
    setup_worker_logging()
    name, grid, seed, indices = job
    items = build_items(name, grid, seed)
    return [(index, execute(items[index])) for index in indices]


def _chunks(count: int, workers: int) -> List[Tuple[int, ...]]:
    size = max(1, -(-count // (workers * 4)))
    return [tuple(range(start, min(start + size, count))) for start in range(0, count, size)]


class SuiteRunner:
    """
    Runs registered suites over a grid

    Items run in the calling process unless workers > 1, in which case
    chunks of items fan out over a process pool.  Results always come back
    in registry order.
    """

    def __init__(self, grid: Grid = None, seed: int = None, workers: int = None):
        """
        Args:
            grid: Parameter grid (defaults to the configured named grid)
            seed: Seed for the randomized samples
            workers: Number of worker processes
        """
        self.grid = grid or get_grid(settings.DEFAULT_GRID)
        self.seed = settings.SEED if seed is None else seed
        self.workers = max(1, settings.WORKERS if workers is None else workers)
        logger.debug(f"Runner initialized: grid={self.grid.name} order={self.grid.order} "
                     f"seed={self.seed} workers={self.workers}")

    def run_suite(self, name: str) -> List[CheckResult]:
        """
        Run one suite

        Raises:
            UsageError: unknown suite name
        """
        get_suite(name)
        items = build_items(name, self.grid, self.seed)
        logger.info(f"Running suite {name}: {len(items)} items")
        start = time.perf_counter()

        if self.workers == 1 or len(items) < 2:
            results = [execute(item) for item in items]
        else:
            results = self._run_parallel(name, len(items))

        elapsed = time.perf_counter() - start
        counts = _count(results)
        logger.info(f"Suite {name} finished in {elapsed:.2f}s: "
                    + ", ".join(f"{k}={v}" for k, v in counts.items()))
        return results

    def _run_parallel(self, name: str, count: int) -> List[CheckResult]:
        jobs = [(name, self.grid, self.seed, chunk) for chunk in _chunks(count, self.workers)]
        collected: Dict[int, CheckResult] = {}
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            for part in pool.map(_run_chunk, jobs):
                collected.update(part)
        return [collected[index] for index in range(count)]

    def run_all(self, names: Optional[Iterable[str]] = None) -> Tuple[List[CheckResult], Summary]:
        """Run the named suites (all of them by default) and summarize"""
        names = list(SUITES) if names is None else list(names)
        for name in names:
            get_suite(name)
        start = time.perf_counter()
        results: List[CheckResult] = []
        for name in names:
            results.extend(self.run_suite(name))
        summary = Summary.from_results(results, elapsed=time.perf_counter() - start)
        log_summary(summary)
        return results, summary


def _count(results: Sequence[CheckResult]) -> Dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in results:
        counts[r.verdict.value] += 1
    return counts


def log_summary(summary: Summary) -> None:
    logger.info("=" * 60)
    logger.info(f"{summary.total} checks in {summary.elapsed:.1f}s: "
                + ", ".join(f"{k}={v}" for k, v in summary.counts.items()))
    for result in summary.discrepancies:
        logger.info(f"  paper-discrepancy {result.item}: {result.detail}")
    for result in summary.failures:
        logger.info(f"  FAIL {result.item}: {result.detail}")
    logger.info("=" * 60)


def run_suite(name: str, grid: Grid = None, order: int = None, seed: int = 0, workers: int = 1) -> List[CheckResult]:
    """One CheckResult per (identity, parameter point), deterministic given grid and seed"""
    grid = grid or get_grid(settings.DEFAULT_GRID)
    if order is not None:
        grid = grid.with_order(order)
    return SuiteRunner(grid, seed, workers).run_suite(name)


def run_all(grid: Grid = None, order: int = None, seed: int = 0, workers: int = 1,
            names: Optional[Iterable[str]] = None) -> Tuple[List[CheckResult], Summary]:
    grid = grid or get_grid(settings.DEFAULT_GRID)
    if order is not None:
        grid = grid.with_order(order)
    return SuiteRunner(grid, seed, workers).run_all(names)
