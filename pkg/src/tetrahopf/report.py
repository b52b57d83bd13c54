"""Pass/fail reports shared by the verification routines and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    witness: object = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool, witness=None) -> bool:
        self.checks.append(Check(name, bool(ok), witness))
        return bool(ok)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def first_failure(self) -> Check | None:
        fails = self.failures
        return fails[0] if fails else None

    def summary(self) -> dict:
        passed = sum(c.ok for c in self.checks)
        return {"passed": passed, "failed": len(self.checks) - passed}

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, default=str)

    def to_text(self) -> str:
        lines = [f"[{self.suite}]"]
        for c in self.checks:
            w = f"  ({c.witness})" if c.witness is not None and not c.ok else ""
            lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}{w}")
        s = self.summary()
        lines.append(f"{s['passed']} passed, {s['failed']} failed")
        return "\n".join(lines)
