"""Verification reports: named checks with pass/fail and first counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None

    def record(self, ok, witness=None):
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = witness() if callable(witness) else witness
        return ok

    def to_json(self):
        d = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, name):
        c = Check(name)
        self.checks.append(c)
        return c

    def add(self, name, ok, witness=None):
        c = self.check(name)
        c.record(bool(ok), witness)
        return c

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.checked, c.counterexample))
        for k, v in other.data.items():
            self.data[prefix + k] = v
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            **({"data": self.data} if self.data else {}),
        }

    def render(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.name} ({c.checked} cases)"
            if c.counterexample:
                line += f" -- first failure: {c.counterexample}"
            lines.append(line)
        return "\n".join(lines)
