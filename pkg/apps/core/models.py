from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass(frozen=True)
class Violation:
    """A single failed condition

    `indices` names the offending nodes/helpers/parities in the order the
    checker documents; `dimension` is set for rank or sum deficiencies.
    """
    kind: str
    indices: Tuple[int, ...] = ()
    dimension: Optional[int] = None
    message: str = ''

    def as_dict(self):
        return {
            'kind': self.kind,
            'indices': list(self.indices),
            'dimension': self.dimension,
            'message': self.message,
        }


@dataclass(frozen=True)
class CheckReport:
    """Boolean verdict plus the violations behind it
    """
    passed: bool
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.passed

    @classmethod
    def from_violations(cls, violations):
        violations = tuple(violations)
        return cls(passed=not violations, violations=violations)

    def merge(self, other):
        return CheckReport.from_violations(self.violations + other.violations)
