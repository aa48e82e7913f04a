# src/la_verifier/harness/reports.py
"""Report assembly and JSON output for identity checks."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from loguru import logger

from la_verifier.config import (
    COUNTEREXAMPLE_CAP,
    EXIT_MUST_PASS_FAILED,
    EXIT_OK,
    EXIT_UNDER_TEST_FAILED,
    REPORT_FILE_SUFFIX,
    SUMMARY_FILE_NAME,
)
from la_verifier.schemas import Counterexample, IdentityReport
from la_verifier.utils import create_directory, rational_to_str, sanitize_filename, write_json

MUST_PASS = "must-pass"
UNDER_TEST = "under-test"
TOOL_NAME = "la-hybrid-verifier"


def serialize_value(value: Any) -> Any:
    """Exact JSON form of a scalar, QuadExt, hybrid, vector or matrix."""
    from la_verifier.algebra.hybrid import Hybrid
    from la_verifier.algebra.scalars import QuadExt

    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return rational_to_str(value)
    if isinstance(value, QuadExt):
        return value.to_dict()
    if isinstance(value, Hybrid):
        return value.to_dict()
    if hasattr(value, "to_rows"):
        return [[serialize_value(x) for x in row] for row in value.to_rows()]
    if isinstance(value, (list, tuple)):
        return [serialize_value(x) for x in value]
    return str(value)


class ReportBuilder:
    """Accumulates per-point outcomes in enumeration order."""

    def __init__(self, identity: str, tier: str, grid: Dict[str, Any], cap: int = COUNTEREXAMPLE_CAP,
                 notes: Optional[Iterable[str]] = None) -> None:
        self.identity = identity
        self.tier = tier
        self.grid = grid
        self.cap = cap
        self.notes: List[str] = list(notes or [])
        self.passed = 0
        self.failed = 0
        self.skipped = 0
        self.confirmed_failures = 0
        self.counterexamples: List[Counterexample] = []

    def record_pass(self) -> None:
        self.passed += 1

    def record_skip(self, count: int = 1) -> None:
        self.skipped += count

    def record_fail(self, point: Dict[str, str], indices: Dict[str, int], lhs: Any, rhs: Any,
                    confirmed: Optional[bool] = None) -> None:
        self.failed += 1
        if confirmed:
            self.confirmed_failures += 1
        if len(self.counterexamples) < self.cap:
            self.counterexamples.append(Counterexample(
                point=point,
                indices=dict(indices),
                lhs=serialize_value(lhs),
                rhs=serialize_value(rhs),
                difference=serialize_value(lhs - rhs),
                confirmed=confirmed,
            ))

    def build(self) -> IdentityReport:
        report = IdentityReport(
            identity=self.identity,
            tier=self.tier,
            catalog_tier=self.tier,
            grid=self.grid,
            total=self.passed + self.failed + self.skipped,
            passed=self.passed,
            failed=self.failed,
            skipped=self.skipped,
            counterexamples=self.counterexamples,
            notes=self.notes,
            confirmed_failures=self.confirmed_failures,
        )
        if report.tier == MUST_PASS and report.failed and report.confirmed_failures == report.failed:
            # Every failure reproduced through definition-based products.
            report.tier = UNDER_TEST
            report.reclassified_from = MUST_PASS
            logger.warning(
                f"{report.identity}: {report.failed} confirmed failures; reclassified as {UNDER_TEST}"
            )
        return report


def report_document(report: IdentityReport, header: Dict[str, Any]) -> Dict[str, Any]:
    return {"header": header, **report.to_dict()}


def report_path(output_dir: str | Path, identity: str) -> Path:
    return Path(output_dir) / f"{sanitize_filename(identity)}{REPORT_FILE_SUFFIX}"


def write_reports(reports: List[IdentityReport], output_dir: str | Path, header: Dict[str, Any],
                  exit_code: int) -> Path:
    out = create_directory(output_dir)
    for report in reports:
        path = write_json(report_path(out, report.identity), report_document(report, header))
        logger.debug(f"Wrote {path}")
    summary = {
        "header": header,
        "exit_code": exit_code,
        "reports": [r.summary_row() for r in reports],
    }
    return write_json(out / SUMMARY_FILE_NAME, summary)


def exit_code_for(reports: List[IdentityReport]) -> int:
    """4 for an unconfirmed must-pass failure, 3 for a failing catalog under-test identity, else 0."""
    if any(r.tier == MUST_PASS and not r.ok for r in reports):
        return EXIT_MUST_PASS_FAILED
    if any(r.catalog_tier == UNDER_TEST and not r.ok for r in reports):
        return EXIT_UNDER_TEST_FAILED
    return EXIT_OK
