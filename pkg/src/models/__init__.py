"""
Data models for contexts and check results
"""
from .context import Case, TwistContext, default_x
from .results import (
    AxiomCheck, CheckResult, CocycleReport, ComparisonReport, Mismatch,
    Source, Summary, TransportReport, Verdict,
)

__all__ = [
    "Case", "TwistContext", "default_x",
    "AxiomCheck", "CheckResult", "CocycleReport", "ComparisonReport", "Mismatch",
    "Source", "Summary", "TransportReport", "Verdict",
]
