"""Process-pool evaluation of a registered suite.

Case closures cannot be pickled, so each worker rebuilds the suite's case
list from the registry once and evaluates cases by index.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .report import Budget, CaseResult, run_case

_SPECS: list = []


def _init(suite: str, params: dict) -> None:
    from .suites import build_suite

    global _SPECS
    _SPECS = build_suite(suite, params)


def _run(args) -> CaseResult:
    k, budget = args
    return run_case(_SPECS[k], budget)


def run_parallel(suite: str, params: dict, count: int, budget: Budget, jobs: int) -> list[CaseResult]:
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init, initargs=(suite, params)) as pool:
        return list(pool.map(_run, [(k, budget) for k in range(count)]))
