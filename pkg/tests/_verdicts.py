"""Shared log of acceptance verdicts, printed by the terminal-summary hook."""

from __future__ import annotations

import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, budget_s: float):
    """Record and print one PASS/FAIL line; a run over ``budget_s`` seconds fails."""
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget_s, f"took {elapsed:.2f}s, budget {budget_s}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        line = f"criterion {number:2d}: {status}  {title}  ({elapsed:.2f}s)"
        RESULTS[number] = line
        print(line, flush=True)
