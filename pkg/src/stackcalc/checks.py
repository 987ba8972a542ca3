"""Accumulating pass/fail records for the sampled identity suites."""

from __future__ import annotations


class Check:
    """One named identity checked on a number of samples; keeps the first few failures."""

    def __init__(self, name: str, keep: int = 3):
        self.name = name
        self.count = 0
        self.failed = 0
        self.failures: list = []
        self.keep = keep

    def record(self, ok: bool, **detail) -> bool:
        self.count += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < self.keep:
                self.failures.append({k: str(v) for k, v in sorted(detail.items())})
        return ok

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"case": self.name, "samples": self.count, "passed": self.passed,
                "failed": self.failed, "failures": self.failures}


class CheckSet:
    def __init__(self, names=()):
        self.checks: dict[str, Check] = {}
        for n in names:
            self[n]

    def __getitem__(self, name: str) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def to_list(self) -> list[dict]:
        return [c.to_dict() for c in self.checks.values()]
