"""Linter and auto-fixer for smells in natural-language (manual) tests."""

__version__ = "0.1.0"

from .model import (  # noqa: E402
    Origin,
    Sentence,
    SmellKind,
    SmellOccurrence,
    Step,
    TestCase,
    TestSuite,
    Transformation,
    TransformationRecord,
    renumber_steps,
    validate,
)
from .pipeline import PipelineConfig, detect_only, run_pipeline  # noqa: E402
from .xmlio import parse_suite_xml, serialize_suite_xml  # noqa: E402

__all__ = [
    "Origin", "PipelineConfig", "Sentence", "SmellKind", "SmellOccurrence", "Step",
    "TestCase", "TestSuite", "Transformation", "TransformationRecord", "detect_only",
    "parse_suite_xml", "renumber_steps", "run_pipeline", "serialize_suite_xml", "validate",
]
