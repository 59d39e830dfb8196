"""Registry of the algebra's claims and a counterexample search over them."""

from .engine import (
    BUDGET_EXCEEDED,
    FALSIFIED,
    VERIFIED,
    SearchConfig,
    Verdict,
    check,
    check_all,
    replay,
    shrink,
)
from .registry import Claim, all_claims, get_claim
from .report import Report, load_expectations, load_manifest, run_suite

__all__ = [
    "BUDGET_EXCEEDED",
    "FALSIFIED",
    "VERIFIED",
    "SearchConfig",
    "Verdict",
    "Claim",
    "Report",
    "all_claims",
    "get_claim",
    "check",
    "check_all",
    "replay",
    "shrink",
    "run_suite",
    "load_expectations",
    "load_manifest",
]
