"""Check reports: deterministic, replayable verification outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class Violation:
    """One failed assertion; (seed, index) replays the offending sample."""

    index: int
    input: str
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"index": self.index, "input": self.input,
                "expected": self.expected, "actual": self.actual}


@dataclass
class CheckReport:
    check: str
    polygon: dict
    seed: int
    attempted: int = 0
    valid: int = 0
    wall_skipped: int = 0
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    runtime: Optional[float] = None  # in-memory only; never serialized

    @property
    def passed(self) -> bool:
        return not self.violations

    def skip(self):
        self.wall_skipped += 1

    def sample(self):
        self.attempted += 1

    def ok(self):
        self.valid += 1

    def fail(self, input_repr: str, expected: str, actual: str, index: int = -1):
        self.attempted += 0
        self.violations.append(Violation(index, input_repr, expected, actual))

    def wall_skip_rate(self) -> float:
        if self.attempted == 0:
            return 0.0
        return self.wall_skipped / self.attempted

    def to_json(self) -> dict:
        # runtime is deliberately excluded so reports are byte-reproducible
        return {
            "schema": "check-report/1",
            "check": self.check,
            "polygon": self.polygon,
            "seed": self.seed,
            "samples": {
                "attempted": self.attempted,
                "valid": self.valid,
                "wall_skipped": self.wall_skipped,
            },
            "violations": [v.to_json() for v in self.violations],
            "notes": list(self.notes),
            "pass": self.passed,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else f"FAIL({len(self.violations)})"
        return (f"{self.check:<28} {status:<9} samples={self.valid}/{self.attempted} "
                f"wall-skipped={self.wall_skipped}")
