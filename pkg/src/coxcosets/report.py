"""Verification reports shared by the library checks and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_WITNESSES = 20


@dataclass
class Report:
    """Pass/fail tally for one suite, with the first few failing witnesses."""

    suite: str
    checks: int = 0
    failure_count: int = 0
    failures: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def first_failure(self) -> dict | None:
        return self.failures[0] if self.failures else None

    def check(self, ok: bool, **witness) -> bool:
        self.checks += 1
        if not ok:
            self.fail(**witness)
        return ok

    def fail(self, **witness) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(witness)

    def merge(self, other: "Report") -> "Report":
        self.checks += other.checks
        self.failure_count += other.failure_count
        room = MAX_WITNESSES - len(self.failures)
        self.failures.extend(other.failures[: max(room, 0)])
        for k, v in other.stats.items():
            if isinstance(v, int) and isinstance(self.stats.get(k), int):
                self.stats[k] += v
            else:
                self.stats.setdefault(k, v)
        return self

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "checks": self.checks,
            "failures": self.failure_count,
            "passed": self.passed,
            "witnesses": self.failures,
            "stats": self.stats,
        }
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {verdict} ({self.checks} checks, {self.failure_count} failures)"
