"""Structured pass/fail reports shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, **self.detail}


@dataclass
class Report:
    name: str
    checks: List[Check] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.passed), None)

    def to_dict(self) -> dict:
        out = {"report": self.name, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}
        if self.note:
            out["note"] = self.note
        return out
