"""Bit-stable report serialization.

Rationals are rendered as "p/q" strings (integers as plain JSON integers);
no value is ever converted to floating point.  Two runs with equal
configurations serialize to identical bytes apart from the elapsed_ms
timing fields, which golden comparisons zero out.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .suite import CheckReport, SuiteConfig

REPORT_VERSION = 1

_FRACTION_RE = re.compile(r"^-?[0-9]+/[1-9][0-9]*$")


def normalize_witnesses(value):
    """Convert witness values to their canonical JSON-ready form."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [normalize_witnesses(v) for v in value]
    if isinstance(value, dict):
        return {str(k): normalize_witnesses(v) for k, v in value.items()}
    raise TypeError(f"witness value of unsupported type {type(value).__name__}")


def parse_witness_value(value):
    """Inverse of normalize_witnesses for values that encode rationals."""
    if isinstance(value, str) and _FRACTION_RE.match(value):
        num, den = value.split("/")
        return Fraction(int(num), int(den))
    if isinstance(value, list):
        return [parse_witness_value(v) for v in value]
    if isinstance(value, dict):
        return {k: parse_witness_value(v) for k, v in value.items()}
    return value


def summarize(reports: list["CheckReport"]) -> dict:
    return {
        "total": len(reports),
        "passed": sum(r.status == "pass" for r in reports),
        "failed": sum(r.status == "fail" for r in reports),
        "errored": sum(r.status == "error" for r in reports),
    }


def to_document(reports: list["CheckReport"], cfg: "SuiteConfig") -> dict:
    return {
        "version": REPORT_VERSION,
        "seed": cfg.seed,
        "checks": [
            {
                "id": r.id,
                "title": r.title,
                "claim": r.claim,
                "status": r.status,
                "witnesses": r.witnesses,
                "elapsed_ms": r.elapsed_ms,
            }
            for r in reports
        ],
        "summary": summarize(reports),
    }


def serialize(reports: list["CheckReport"], cfg: "SuiteConfig") -> bytes:
    doc = to_document(reports, cfg)
    return (json.dumps(doc, indent=2, ensure_ascii=True) + "\n").encode("ascii")


@dataclass(frozen=True)
class ParsedReport:
    version: int
    seed: int
    checks: tuple
    summary: dict


def parse_report(data: bytes) -> ParsedReport:
    from .suite import CheckReport

    doc = json.loads(data.decode("ascii"))
    checks = tuple(
        CheckReport(
            id=c["id"],
            title=c["title"],
            claim=c["claim"],
            status=c["status"],
            witnesses=c["witnesses"],
            elapsed_ms=c["elapsed_ms"],
        )
        for c in doc["checks"]
    )
    return ParsedReport(
        version=doc["version"], seed=doc["seed"], checks=checks, summary=doc["summary"]
    )


def render_text(reports: list["CheckReport"], cfg: "SuiteConfig") -> str:
    lines = []
    width = max((len(r.id) for r in reports), default=0)
    for r in reports:
        lines.append(f"[{r.status.upper():5s}] {r.id:<{width}}  {r.title} ({r.elapsed_ms} ms)")
        for key, value in r.witnesses.items():
            lines.append(f"         {key} = {json.dumps(value)}")
    s = summarize(reports)
    lines.append(
        f"checks: {s['total']}  passed: {s['passed']}  failed: {s['failed']}"
        f"  errored: {s['errored']}  (seed {cfg.seed})"
    )
    return "\n".join(lines) + "\n"


def exit_code(reports: list["CheckReport"]) -> int:
    """0 iff every executed check passes, 1 otherwise."""
    return 0 if all(r.status == "pass" for r in reports) else 1
