"""Data types for verification reports."""

from typing import Any

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of one check on one scope."""

    check: str = Field(description="Check name")
    scope: str = Field(description="Surface, curve or graph id the check ran on")
    passed: bool = Field(description="Whether the check passed")
    details: dict[str, Any] = Field(default_factory=dict, description="Check specific data")


class CheckReport(BaseModel):
    """Results sorted by (check, scope)."""

    results: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def for_check(self, check: str) -> list[CheckResult]:
        return [r for r in self.results if r.check == check]

    @classmethod
    def of(cls, results: list[CheckResult]) -> "CheckReport":
        return cls(results=sorted(results, key=lambda r: (r.check, r.scope)))

    def merge(self, *others: "CheckReport") -> "CheckReport":
        results = list(self.results)
        for other in others:
            results.extend(other.results)
        return CheckReport.of(results)
