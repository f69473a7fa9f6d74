"""Test template types shared by every other module.

A test is a precondition clause list plus ordered steps; each step holds an
ordered action list and an ordered verification list. All values are frozen.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

PLACEHOLDER_MARKER = "FILL_VERIFICATION"


class Origin(str, enum.Enum):
    AUTHORED = "authored"
    PLACEHOLDER = "placeholder"
    REWRITTEN = "rewritten"


class ListSide(str, enum.Enum):
    PRECONDITIONS = "preconditions"
    ACTIONS = "actions"
    VERIFICATIONS = "verifications"


class SmellKind(str, enum.Enum):
    UNVERIFIED_ACTION = "UnverifiedAction"
    MISPLACED_PRECONDITION = "MisplacedPrecondition"
    MISPLACED_ACTION = "MisplacedAction"
    MISPLACED_VERIFICATION = "MisplacedVerification"
    EAGER_ACTION = "EagerAction"
    AMBIGUOUS_TEST = "AmbiguousTest"
    CONDITIONAL_TEST = "ConditionalTest"

    @property
    def label(self) -> str:
        return SMELL_LABELS[self]


SMELL_LABELS = {
    SmellKind.UNVERIFIED_ACTION: "Unverified Action",
    SmellKind.MISPLACED_PRECONDITION: "Misplaced Precondition",
    SmellKind.MISPLACED_ACTION: "Misplaced Action",
    SmellKind.MISPLACED_VERIFICATION: "Misplaced Verification",
    SmellKind.EAGER_ACTION: "Eager Action",
    SmellKind.AMBIGUOUS_TEST: "Ambiguous Test",
    SmellKind.CONDITIONAL_TEST: "Conditional Test",
}


class Transformation(str, enum.Enum):
    """The catalog, declared in execution order."""

    EXTRACT_CONDITIONAL = "ExtractConditional"
    EXTRACT_ACTION = "ExtractAction"
    SEPARATE_ACTIONS = "SeparateActions"
    EXTRACT_VERIFICATION = "ExtractVerification"
    EXTRACT_AMBIGUITY = "ExtractAmbiguity"
    EXTRACT_PRECONDITION = "ExtractPrecondition"
    FILL_VERIFICATION = "FillVerification"

    @property
    def number(self) -> int:
        return list(Transformation).index(self) + 1

    @property
    def smell(self) -> SmellKind:
        return ADDRESSED_SMELL[self]

    @classmethod
    def parse(cls, name: str) -> "Transformation":
        """Accept ``ExtractAction``, ``extract-action``, ``extract_action`` or ``2``."""
        key = name.strip()
        if key.isdigit():
            number = int(key)
            if 1 <= number <= len(cls):
                return list(cls)[number - 1]
            raise ValueError(f"no transformation numbered {number}")
        folded = key.replace("-", "").replace("_", "").lower()
        for member in cls:
            if member.value.lower() == folded:
                return member
        raise ValueError(f"unknown transformation {name!r}")


ADDRESSED_SMELL = {
    Transformation.EXTRACT_CONDITIONAL: SmellKind.CONDITIONAL_TEST,
    Transformation.EXTRACT_ACTION: SmellKind.MISPLACED_ACTION,
    Transformation.SEPARATE_ACTIONS: SmellKind.EAGER_ACTION,
    Transformation.EXTRACT_VERIFICATION: SmellKind.MISPLACED_VERIFICATION,
    Transformation.EXTRACT_AMBIGUITY: SmellKind.AMBIGUOUS_TEST,
    Transformation.EXTRACT_PRECONDITION: SmellKind.MISPLACED_PRECONDITION,
    Transformation.FILL_VERIFICATION: SmellKind.UNVERIFIED_ACTION,
}


@dataclass(frozen=True)
class Sentence:
    text: str
    origin: Origin = Origin.AUTHORED

    @property
    def is_placeholder(self) -> bool:
        return self.origin is Origin.PLACEHOLDER or self.text.startswith(PLACEHOLDER_MARKER)


@dataclass(frozen=True)
class Step:
    index: int
    actions: tuple[Sentence, ...] = ()
    verifications: tuple[Sentence, ...] = ()

    def sentences(self, side: ListSide) -> tuple[Sentence, ...]:
        if side is ListSide.ACTIONS:
            return self.actions
        if side is ListSide.VERIFICATIONS:
            return self.verifications
        raise ValueError(f"steps have no {side.value} list")


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # keep pytest from collecting this class

    id: str
    preconditions: tuple[str, ...] = ()
    steps: tuple[Step, ...] = ()


@dataclass(frozen=True)
class TestSuite:
    __test__ = False

    name: str
    tests: tuple[TestCase, ...] = ()


@dataclass(frozen=True)
class SmellOccurrence:
    kind: SmellKind
    test_id: str
    step_index: int | None
    list_side: ListSide
    sentence_ordinal: int | None
    evidence: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "test_id": self.test_id,
            "step_index": self.step_index,
            "list_side": self.list_side.value,
            "sentence_ordinal": self.sentence_ordinal,
            "evidence": self.evidence,
        }


@dataclass(frozen=True)
class TransformationRecord:
    transformation: Transformation
    target: SmellOccurrence
    before: str
    after: str
    created_test_ids: tuple[str, ...] = ()
    note: str = ""

    def __post_init__(self):
        if self.created_test_ids and self.transformation is not Transformation.EXTRACT_CONDITIONAL:
            raise ValueError("only ExtractConditional may create tests")

    def to_dict(self) -> dict:
        return {
            "transformation": self.transformation.value,
            "number": self.transformation.number,
            "target": self.target.to_dict(),
            "before": self.before,
            "after": self.after,
            "created_test_ids": list(self.created_test_ids),
            "note": self.note,
        }


def sentences(texts, origin: Origin = Origin.AUTHORED) -> tuple[Sentence, ...]:
    """Shorthand for building sentence tuples from plain strings."""
    return tuple(Sentence(t, origin) for t in texts)


def renumber_steps(test: TestCase) -> TestCase:
    steps = tuple(
        step if step.index == i else replace(step, index=i)
        for i, step in enumerate(test.steps, start=1)
    )
    if steps == test.steps:
        return test
    return replace(test, steps=steps)


def validate(suite: TestSuite) -> list[str]:
    """Return one description per broken invariant; empty when the suite is well formed."""
    violations: list[str] = []
    first_seen: dict[str, int] = {}
    for position, test in enumerate(suite.tests, start=1):
        if test.id in first_seen:
            violations.append(
                f"TestSuite.tests: duplicate test id {test.id!r} "
                f"(tests #{first_seen[test.id]} and #{position}), step -"
            )
        else:
            first_seen[test.id] = position
        violations.extend(_validate_test(test))
    return violations


def _validate_test(test: TestCase) -> list[str]:
    out = []
    if not test.id:
        out.append("TestCase.id: empty test id, step -")
    for n, clause in enumerate(test.preconditions, start=1):
        if not clause.strip():
            out.append(f"TestCase.preconditions: test {test.id!r} clause {n} is empty, step -")
    for expected, step in enumerate(test.steps, start=1):
        where = f"test {test.id!r} step {step.index}"
        if step.index != expected:
            out.append(f"TestCase.steps: {where} has index {step.index}, expected {expected}")
        if step.index < 1:
            out.append(f"Step.index: {where} index must be >= 1")
        for side in (ListSide.ACTIONS, ListSide.VERIFICATIONS):
            for ordinal, sentence in enumerate(step.sentences(side), start=1):
                if not sentence.text.strip():
                    out.append(f"Step.{side.value}: {where} sentence {ordinal} has empty text")
                elif sentence.origin is Origin.PLACEHOLDER and not sentence.text.startswith(
                    PLACEHOLDER_MARKER
                ):
                    out.append(
                        f"Sentence.text: {where} placeholder in {side.value} {ordinal} "
                        f"must begin with {PLACEHOLDER_MARKER}"
                    )
    return out
