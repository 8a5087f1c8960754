"""Outcome objects of the verification routines."""

import attrs


@attrs.define(frozen=True)
class CheckReport:
    """Outcome of one check on one instance.

    Truthiness is the outcome, so ``assert verify_filtration(...)`` reads
    naturally in tests.

    """

    check: str
    passed: bool = attrs.field(converter=bool)
    instance: dict = attrs.field(factory=dict)
    detail: str = ""

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {
            "check": self.check,
            "passed": self.passed,
            "instance": {k: str(v) for k, v in self.instance.items()},
            "detail": self.detail,
        }


@attrs.define(frozen=True)
class VerificationReport:
    """Every report produced by a verification suite, in grid order."""

    suite: str
    reports: tuple = attrs.field(converter=tuple)

    def __bool__(self):
        return self.passed

    def __len__(self):
        return len(self.reports)

    @property
    def passed(self):
        return all(self.reports)

    @property
    def failures(self):
        return tuple(report for report in self.reports if not report)

    def to_dict(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": len(self.reports),
            "reports": [report.to_dict() for report in self.reports],
        }
