"""Runs detection and the catalog in execution order over a whole suite."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from .detectors import DETECTORS, detect_all, scan_warnings
from .lexicon import Lexicon, default_lexicon
from .model import SmellOccurrence, TestCase, TestSuite, Transformation, TransformationRecord
from .transforms import TRANSFORMS

log = logging.getLogger(__name__)

CATALOG_ORDER = tuple(Transformation)


class PipelineError(RuntimeError):
    pass


@dataclass(frozen=True)
class PipelineConfig:
    enabled_transformations: tuple[Transformation, ...] = CATALOG_ORDER
    max_iterations_per_transformation: int = 100
    max_generated_tests_per_test: int = 64
    lexicon: Lexicon | None = field(default=None, compare=False)

    def __post_init__(self):
        order = [t.number for t in self.enabled_transformations]
        if order != sorted(order) or len(set(order)) != len(order):
            raise ValueError("enabled transformations must follow catalog order without repeats")
        if self.max_iterations_per_transformation < 1 or self.max_generated_tests_per_test < 1:
            raise ValueError("caps must be positive")

    @classmethod
    def select(cls, only=None, skip=None, **kwargs) -> "PipelineConfig":
        """Build a config from ``--only``/``--skip`` style name lists."""
        if only and skip:
            raise ValueError("--only and --skip cannot be combined")
        chosen = list(CATALOG_ORDER)
        if only:
            wanted = {Transformation.parse(n) for n in only}
            chosen = [t for t in CATALOG_ORDER if t in wanted]
        if skip:
            dropped = {Transformation.parse(n) for n in skip}
            chosen = [t for t in CATALOG_ORDER if t not in dropped]
        return cls(enabled_transformations=tuple(chosen), **kwargs)


class PipelineResult(NamedTuple):
    suite: TestSuite
    records: list[TransformationRecord]
    warnings: list[str]


def _dedupe(items):
    return list(dict.fromkeys(items))


class _TestRun:
    def __init__(self, root: TestCase, config: PipelineConfig, lexicon: Lexicon):
        self.root = root
        self.config = config
        self.lexicon = lexicon
        self.records: list[TransformationRecord] = []
        self.warnings: list[str] = []
        self.generated = 0

    def run(self, test: TestCase) -> list[TestCase]:
        for transformation in self.config.enabled_transformations:
            detector = DETECTORS[transformation.smell]
            transform = TRANSFORMS[transformation]
            iterations = 0
            while detector(test, self.lexicon):
                iterations += 1
                if iterations > self.config.max_iterations_per_transformation:
                    raise PipelineError(
                        f"test {test.id!r}: {transformation.value} did not reach a fixpoint "
                        f"within {self.config.max_iterations_per_transformation} iterations"
                    )
                outcome = transform(test, self.lexicon)
                self.records.extend(outcome.records)
                self.warnings.extend(outcome.warnings)
                if not outcome.changed:
                    raise PipelineError(
                        f"test {test.id!r}: {transformation.value} made no progress on a detected smell"
                    )
                if transformation is Transformation.EXTRACT_CONDITIONAL:
                    self.generated += len(outcome.tests) - 1
                    if self.generated > self.config.max_generated_tests_per_test:
                        raise PipelineError(
                            f"test {self.root.id!r}: more than "
                            f"{self.config.max_generated_tests_per_test} generated tests "
                            "(nested conditionals?)"
                        )
                    # derived tests re-enter at the first stage
                    return [t for child in outcome.tests for t in self.run(child)]
                test = outcome.tests[0]
        return [test]


def run_pipeline(suite: TestSuite, config: PipelineConfig | None = None) -> PipelineResult:
    config = config or PipelineConfig()
    lexicon = config.lexicon or default_lexicon()
    tests: list[TestCase] = []
    records: list[TransformationRecord] = []
    warnings: list[str] = []
    for test in suite.tests:
        run = _TestRun(test, config, lexicon)
        produced = run.run(test)
        tests.extend(produced)
        records.extend(run.records)
        warnings.extend(run.warnings)
        for out in produced:
            warnings.extend(scan_warnings(out, lexicon))
            if not out.steps:
                warnings.append(f"test {out.id!r} has no steps")
    for w in _dedupe(warnings):
        log.debug("warning: %s", w)
    return PipelineResult(replace(suite, tests=tuple(tests)), records, _dedupe(warnings))


def detect_only(suite: TestSuite, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    return [occ for test in suite.tests for occ in detect_all(test, lexicon)]


def suite_warnings(suite: TestSuite, lexicon: Lexicon | None = None) -> list[str]:
    return _dedupe(w for test in suite.tests for w in scan_warnings(test, lexicon))
