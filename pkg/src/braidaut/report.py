"""Budgets, verification reports and the case runner shared by every suite."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .braid import BudgetExceeded

PASS, FAIL, INDETERMINATE = "pass", "fail", "indeterminate"


@dataclass
class Budget:
    """Wall-clock and word-length limits for one case.

    Long computations call :meth:`note` with the length of each intermediate
    word; it records the peak and raises :class:`BudgetExceeded` once either
    limit is crossed.
    """

    ms: float | None = None
    max_len: int | None = None
    peak: int = 0
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    def restart(self) -> None:
        self.peak = 0
        self._t0 = time.perf_counter()

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self._t0) * 1000.0

    def note(self, length: int) -> None:
        if length > self.peak:
            self.peak = length
        if self.max_len is not None and length > self.max_len:
            raise BudgetExceeded(f"word length {length} exceeds max-len {self.max_len}")
        self.check()

    def check(self) -> None:
        if self.ms is not None and self.elapsed_ms() > self.ms:
            raise BudgetExceeded(f"case exceeded {self.ms:.0f} ms")

    def fresh(self) -> "Budget":
        return Budget(self.ms, self.max_len)


UNLIMITED = Budget()


@dataclass
class CaseResult:
    id: str
    relation: str
    status: str
    elapsed_ms: float
    peak_len: int
    witness: list = field(default_factory=list)
    note: str = ""


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.id)
        self.summary = tally(self.cases)

    @property
    def ok(self) -> bool:
        return self.summary[FAIL] == 0 and self.summary[INDETERMINATE] == 0

    def exit_code(self) -> int:
        """0 all pass, 1 some fail, 3 no fail but some indeterminate."""
        if self.summary[FAIL]:
            return 1
        if self.summary[INDETERMINATE]:
            return 3
        return 0

    def case(self, cid: str) -> CaseResult:
        for c in self.cases:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            for c in d["cases"]:
                c.pop("elapsed_ms")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"# suite={self.suite} " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        lines.append("id\tstatus\telapsed_ms\tpeak_len\trelation")
        for c in self.cases:
            lines.append(f"{c.id}\t{c.status}\t{c.elapsed_ms:.1f}\t{c.peak_len}\t{c.relation}")
            for w in c.witness:
                lines.append(f"\twitness\t{w}")
            if c.note:
                lines.append(f"\tnote\t{c.note}")
        s = self.summary
        lines.append(f"# total={s['total']} pass={s[PASS]} fail={s[FAIL]} indeterminate={s[INDETERMINATE]}")
        return "\n".join(lines) + "\n"


def tally(cases: Iterable[CaseResult]) -> dict:
    out = {"total": 0, PASS: 0, FAIL: 0, INDETERMINATE: 0}
    for c in cases:
        out["total"] += 1
        out[c.status] += 1
    return out


@dataclass(frozen=True)
class CaseSpec:
    """One check: ``run(budget)`` returns ``True``, or ``(False, witnesses)``."""

    id: str
    relation: str
    run: Callable
    note: str = ""


def run_case(spec: CaseSpec, budget: Budget) -> CaseResult:
    b = budget.fresh()
    b.restart()
    witness: list = []
    note = spec.note
    try:
        out = spec.run(b)
        if isinstance(out, tuple):
            ok, witness = out[0], list(out[1])
        else:
            ok = bool(out)
        status = PASS if ok else FAIL
    except BudgetExceeded as exc:
        status = INDETERMINATE
        note = (note + "; " if note else "") + str(exc)
    return CaseResult(spec.id, spec.relation, status, round(b.elapsed_ms(), 3), b.peak, witness, note)


def run_cases(suite: str, params: dict, specs: list, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    """Evaluate every case; ``jobs > 1`` fans out through a process pool."""
    budget = budget or UNLIMITED
    if jobs > 1 and len(specs) > 1:
        from .parallel import run_parallel

        results = run_parallel(suite, params, len(specs), budget, jobs)
    else:
        results = [run_case(s, budget) for s in specs]
    return VerificationReport(suite, dict(params), results)
