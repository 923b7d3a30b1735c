"""Verification reports and their stable JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

ENGINE_VERSION = "0.1.0"


@dataclass
class Record:
    input: str
    expected: str
    actual: str
    passed: bool


@dataclass
class VerificationReport:
    """Outcome of one check: every inspected instance plus summary counts.

    Reports are byte-stable for fixed inputs: records are kept in a
    deterministic order and serialization uses a fixed field order.
    """

    check: str
    params: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    version: str = ENGINE_VERSION

    @property
    def n_pass(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def n_fail(self) -> int:
        return sum(1 for r in self.records if not r.passed)

    @property
    def passed(self) -> bool:
        return self.n_fail == 0

    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "records": [
                {
                    "input": r.input,
                    "expected": r.expected,
                    "actual": r.actual,
                    "pass": r.passed,
                }
                for r in self.records
            ],
            "summary": {"pass": self.n_pass, "fail": self.n_fail},
            "version": self.version,
        }

    def text(self) -> str:
        lines = [
            f"check {self.check}: {self.n_pass} pass, {self.n_fail} fail"
            f" ({json.dumps(self.params, sort_keys=True)})"
        ]
        for r in self.failures():
            lines.append(f"  FAIL {r.input}: expected {r.expected}, got {r.actual}")
        return "\n".join(lines)


def emit_json(report: VerificationReport) -> bytes:
    """UTF-8 JSON with stable field order, newline-terminated."""
    return (json.dumps(report.to_dict(), separators=(",", ":")) + "\n").encode("utf-8")
