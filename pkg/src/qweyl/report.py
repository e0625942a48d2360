"""Line-oriented verification reports shared by the suite runners."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case: str
    passed: bool
    residual: float = 0.0
    detail: str = ""

    def line(self):
        return (f"suite={self.suite}, case={self.case}, "
                f"residual={self.residual:.6e}, pass={'true' if self.passed else 'false'}")


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)

    def record(self, case, passed, residual=None, detail=""):
        if residual is None:
            residual = 0.0 if passed else 1.0
        self.cases.append(CaseResult(self.suite, case, passed, residual, detail))

    def extend(self, other):
        self.cases.extend(other.cases)

    @property
    def ok(self):
        return all(c.passed for c in self.cases)

    def failures(self):
        return [c for c in self.cases if not c.passed]

    def lines(self):
        return [c.line() for c in sorted(self.cases, key=lambda c: (c.suite, c.case))]
