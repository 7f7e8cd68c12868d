"""
Data Transfer Objects for the self-check suite
"""

from dataclasses import dataclass, field

__all__ = (
    "CheckResultDTO",
    "SelfCheckReportDTO",
)


@dataclass
class CheckResultDTO:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass
class SelfCheckReportDTO:
    checks: list[CheckResultDTO] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
