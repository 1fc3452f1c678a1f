from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Named maximum deviations from one verification suite."""

    suite: str
    dim: int
    tolerance: float
    deviations: dict[str, float] = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values(), default=0.0)

    @property
    def passed(self) -> bool:
        return all(v <= self.tolerance for v in self.deviations.values())

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "dim": self.dim,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "deviations": dict(self.deviations),
            **({"details": self.details} if self.details else {}),
        }
