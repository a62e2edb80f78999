"""
Result models for checks, comparisons and suite runs
"""
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    DISCREPANCY = "paper-discrepancy"


class Source(str, Enum):
    """Where the claim under test comes from"""
    PRINTED = "paper"     # a closed form or identity as printed
    ORACLE = "oracle"     # an internal consistency property


class Mismatch(BaseModel):
    """First point where two sides of an identity disagree"""
    order: int = Field(..., ge=0, description="Lowest t-order that differs")
    term: Optional[str] = Field(None, description="Basis term whose coefficients differ")
    lhs: str = Field(..., description="Left side at that order")
    rhs: str = Field(..., description="Right side at that order")
    oracle: Optional[str] = Field(None, description="Oracle value, when the right side is a printed formula")

    def describe(self) -> str:
        where = f" at {self.term}" if self.term else ""
        return f"t^{self.order}{where}: {self.lhs} != {self.rhs}"


class CheckResult(BaseModel):
    """One (identity, parameter point) outcome"""
    suite: str = Field(..., min_length=1)
    item: str = Field(..., min_length=1)
    verdict: Verdict
    source: Source = Source.ORACLE
    detail: Optional[str] = None
    oracle: Optional[str] = Field(None, description="Conjugation value of the side that disagrees")
    elapsed: float = Field(0.0, ge=0.0, description="Seconds spent on the item")

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def key(self) -> Tuple[str, str, str, Optional[str]]:
        """Everything except timing; equal keys mean equal outcomes"""
        return (self.suite, self.item, self.verdict.value, self.detail)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "item": self.item,
            "verdict": self.verdict.value,
            "source": self.source.value,
            "detail": self.detail,
            "oracle": self.oracle,
            "elapsed": round(self.elapsed, 6),
        }


class ComparisonReport(BaseModel):
    """Closed form vs. twist-conjugation oracle for one generator"""
    case: str
    generator: str
    m: Optional[Tuple[int, int]] = None
    n: Tuple[int, int]
    order: int
    verdict: Verdict
    map: Optional[str] = Field(None, description="'delta' or 'antipode' for the first mismatch")
    first_mismatch_order: Optional[int] = None
    term: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    oracle: Optional[str] = None

    def to_dict(self) -> dict:
        data = {
            "case": self.case,
            "generator": self.generator,
            "m": None if self.m is None else list(self.m),
            "n": list(self.n),
            "order": self.order,
            "verdict": self.verdict.value,
        }
        for key in ("map", "first_mismatch_order", "term", "lhs", "rhs", "oracle"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        return data

    def describe(self) -> str:
        if self.verdict is Verdict.PASS:
            return f"{self.generator}: closed form matches the oracle mod t^{self.order + 1}"
        return (f"{self.generator}: {self.map} differs at t^{self.first_mismatch_order}"
                f" on {self.term}: printed {self.lhs} vs oracle {self.rhs}")


class TransportReport(BaseModel):
    """Involution transport between a case and its mirror for one generator"""
    case: str
    mirror: str
    generator: str
    order: int
    verdict: Verdict
    closed_form: List[Mismatch] = Field(default_factory=list)
    oracle: List[Mismatch] = Field(default_factory=list)

    def describe(self) -> str:
        if self.verdict is Verdict.PASS:
            return f"{self.generator}: {self.case} -> {self.mirror} transport holds"
        parts = [f"oracle {m.describe()}" for m in self.oracle]
        parts += [f"printed {m.describe()}" for m in self.closed_form]
        return f"{self.generator}: " + "; ".join(parts)


class AxiomCheck(BaseModel):
    """One Hopf-axiom evaluation on one sample"""
    axiom: str
    sample: str
    mismatch: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None


class CocycleReport(BaseModel):
    context: str
    checks: List[AxiomCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class Summary(BaseModel):
    """Aggregate of a suite run"""
    total: int = 0
    counts: Dict[str, int] = Field(default_factory=dict)
    per_suite: Dict[str, Dict[str, int]] = Field(default_factory=dict)
    failures: List[CheckResult] = Field(default_factory=list)
    discrepancies: List[CheckResult] = Field(default_factory=list)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    @classmethod
    def from_results(cls, results: List[CheckResult], elapsed: float = 0.0) -> "Summary":
        counts = {v.value: 0 for v in Verdict}
        per_suite: Dict[str, Dict[str, int]] = {}
        for r in results:
            counts[r.verdict.value] += 1
            suite = per_suite.setdefault(r.suite, {v.value: 0 for v in Verdict})
            suite[r.verdict.value] += 1
        return cls(
            total=len(results),
            counts=counts,
            per_suite=per_suite,
            failures=[r for r in results if r.verdict is Verdict.FAIL],
            discrepancies=[r for r in results if r.verdict is Verdict.DISCREPANCY],
            elapsed=elapsed,
        )

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "counts": dict(self.counts),
            "per_suite": {k: dict(v) for k, v in self.per_suite.items()},
            "failures": [r.to_dict() for r in self.failures],
            "discrepancies": [r.to_dict() for r in self.discrepancies],
            "elapsed": round(self.elapsed, 3),
        }
