"""JSON audit report and the per-smell count table."""

from __future__ import annotations

import json
from collections import Counter
from typing import Iterable

from . import __version__
from .model import SmellKind, SmellOccurrence, TransformationRecord


def smell_counts(occurrences: Iterable[SmellOccurrence]) -> dict[SmellKind, int]:
    counts = Counter(o.kind for o in occurrences)
    return {kind: counts.get(kind, 0) for kind in SmellKind}


def build_report(
    occurrences: list[SmellOccurrence],
    records: list[TransformationRecord],
    warnings: list[str],
    *,
    input_file: str = "",
    remaining: list[SmellOccurrence] | None = None,
) -> dict:
    """``remaining`` lists smells left after fixing; it defaults to ``occurrences``
    (a detect-only run fixes nothing)."""
    if remaining is None:
        remaining = occurrences
    before = smell_counts(occurrences)
    after = smell_counts(remaining)
    return {
        "tool_version": __version__,
        "input_file": input_file,
        "occurrences": [o.to_dict() for o in occurrences],
        "transformations": [r.to_dict() for r in records],
        "warnings": list(warnings),
        "remaining": [o.to_dict() for o in remaining],
        "summary": {
            "before": {k.value: n for k, n in before.items()},
            "after": {k.value: n for k, n in after.items()},
        },
    }


def emit_report_json(occurrences, records, warnings, *, input_file: str = "", remaining=None) -> bytes:
    report = build_report(occurrences, records, warnings, input_file=input_file, remaining=remaining)
    return (json.dumps(report, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def format_occurrences(occurrences: list[SmellOccurrence]) -> str:
    lines = []
    for o in occurrences:
        where = f"{o.test_id}"
        if o.step_index is not None:
            where += f" step {o.step_index}"
        where += f" {o.list_side.value}"
        if o.sentence_ordinal is not None:
            where += f" #{o.sentence_ordinal}"
        lines.append(f"{where}: {o.kind.label}: {o.evidence}")
    lines.append(f"{len(occurrences)} smell occurrence(s)")
    return "\n".join(lines) + "\n"


def format_count_table(counts: dict[SmellKind, int]) -> str:
    width = max(len(k.label) for k in SmellKind)
    total = sum(counts.values())
    num_width = max(len("Total"), len(f"{total:,}"))
    lines = [
        f"{'Test Smell':<{width}}  {'Total':>{num_width}}",
        f"{'-' * width}  {'-' * num_width}",
    ]
    for kind in SmellKind:
        lines.append(f"{kind.label:<{width}}  {counts.get(kind, 0):>{num_width},}")
    lines.append(f"{'-' * width}  {'-' * num_width}")
    lines.append(f"{'TOTAL':<{width}}  {total:>{num_width},}")
    return "\n".join(lines) + "\n"
