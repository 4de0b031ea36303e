"""Structured verification records shared by the suites and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    check_id: str
    passed: bool
    required: bool = True
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "passed": self.passed,
            "required": self.required,
            "details": self.details,
        }


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, check_id: str, passed: bool, required: bool = True, **details):
        self.records.append(CheckRecord(check_id, bool(passed), required, details))

    def extend(self, other: "Report"):
        self.records.extend(other.records)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records if r.required)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.required and not r.passed]

    def to_jsonl(self) -> str:
        lines = [json.dumps({"schema": "polyvec-report", "version": 1}, sort_keys=True)]
        for r in self.records:
            lines.append(json.dumps(r.to_json(), sort_keys=True, default=str))
        return "\n".join(lines) + "\n"

    def summary_text(self) -> str:
        lines = []
        for r in self.records:
            status = "PASS" if r.passed else ("FAIL" if r.required else "info:FAIL")
            note = "" if r.required else "  [informational]"
            lines.append(f"{status:9s} {r.check_id}{note}")
            if not r.passed and r.details:
                for key, value in sorted(r.details.items()):
                    lines.append(f"          {key}: {value}")
        lines.append(f"{'OK' if self.ok else 'FAILED'}: "
                     f"{sum(r.passed for r in self.records)}/{len(self.records)} checks passed")
        return "\n".join(lines)
