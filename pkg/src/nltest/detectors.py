"""One detector per smell. Each maps a TestCase to SmellOccurrence values."""

from __future__ import annotations

from .annotator import (
    SentenceClass,
    SentencePosition,
    ambiguous_spans,
    annotate,
    classify_sentence,
    imperative_clauses,
    unhandled_conditional_markers,
)
from .lexicon import Lexicon, default_lexicon
from .model import ListSide, Sentence, SmellKind, SmellOccurrence, Step, TestCase

_SIDE_ORDER = {ListSide.PRECONDITIONS: 0, ListSide.ACTIONS: 1, ListSide.VERIFICATIONS: 2}
_KIND_ORDER = {kind: n for n, kind in enumerate(SmellKind)}


def _lex(lexicon):
    return lexicon or default_lexicon()


def sentence_class(
    sentence: Sentence, step_index: int, ordinal: int, side: ListSide, lexicon: Lexicon | None = None
) -> SentenceClass:
    lex = _lex(lexicon)
    return classify_sentence(
        annotate(sentence, lex), SentencePosition(step_index, ordinal, side), lex
    )


def eager_clauses(step: Step, lexicon: Lexicon | None = None):
    """Imperative clauses across all authored action sentences of a step."""
    lex = _lex(lexicon)
    out = []
    for sentence in step.actions:
        if sentence.is_placeholder:
            continue
        out.extend(c for c in imperative_clauses(annotate(sentence, lex), lex) if c.verbs)
    return out


def conditional_sentences(test: TestCase, lexicon: Lexicon | None = None):
    """Yield ``(step, side, ordinal, annotated)`` for sentences holding a conditional.

    Actions are scanned, plus verification sentences that read as actions:
    those will be moved into the action list and must not smuggle a
    conditional past the first stage.
    """
    lex = _lex(lexicon)
    for step in test.steps:
        for side in (ListSide.ACTIONS, ListSide.VERIFICATIONS):
            for ordinal, sentence in enumerate(step.sentences(side), start=1):
                if sentence.is_placeholder:
                    continue
                ann = annotate(sentence, lex)
                if ann.conditional is None:
                    continue
                if side is ListSide.VERIFICATIONS and sentence_class(
                    sentence, step.index, ordinal, side, lex
                ) is not SentenceClass.ACTION:
                    continue
                yield step, side, ordinal, ann


def detect_unverified_action(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    out = []
    for step in test.steps:
        if step.actions and not step.verifications:
            last = len(step.actions)
            out.append(SmellOccurrence(
                SmellKind.UNVERIFIED_ACTION, test.id, step.index, ListSide.ACTIONS,
                last, step.actions[-1].text,
            ))
    return out


def detect_misplaced_precondition(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    if not test.steps or not test.steps[0].actions:
        return []
    step = test.steps[0]
    first = step.actions[0]
    if first.is_placeholder:
        return []
    if sentence_class(first, step.index, 1, ListSide.ACTIONS, lexicon) is SentenceClass.PRECONDITION:
        return [SmellOccurrence(
            SmellKind.MISPLACED_PRECONDITION, test.id, step.index, ListSide.ACTIONS, 1, first.text
        )]
    return []


def _misplaced(test, side, wanted, kind, lexicon):
    out = []
    for step in test.steps:
        for ordinal, sentence in enumerate(step.sentences(side), start=1):
            if sentence.is_placeholder:
                continue
            if sentence_class(sentence, step.index, ordinal, side, lexicon) is wanted:
                out.append(SmellOccurrence(kind, test.id, step.index, side, ordinal, sentence.text))
    return out


def detect_misplaced_action(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    return _misplaced(
        test, ListSide.VERIFICATIONS, SentenceClass.ACTION, SmellKind.MISPLACED_ACTION, lexicon
    )


def detect_misplaced_verification(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    return _misplaced(
        test, ListSide.ACTIONS, SentenceClass.VERIFICATION, SmellKind.MISPLACED_VERIFICATION, lexicon
    )


def detect_eager_action(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    out = []
    for step in test.steps:
        clauses = eager_clauses(step, lexicon)
        if len(clauses) > 1:
            verbs = ", ".join(c.verbs[0] for c in clauses)
            out.append(SmellOccurrence(
                SmellKind.EAGER_ACTION, test.id, step.index, ListSide.ACTIONS, None, verbs
            ))
    return out


def detect_ambiguous_test(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    lex = _lex(lexicon)
    out = []
    for step in test.steps:
        for side in (ListSide.ACTIONS, ListSide.VERIFICATIONS):
            for ordinal, sentence in enumerate(step.sentences(side), start=1):
                if sentence.is_placeholder:
                    continue
                ann = annotate(sentence, lex)
                for start, end, _ in ambiguous_spans(ann):
                    evidence = sentence.text[ann.tokens[start].start:ann.tokens[end - 1].end]
                    out.append(SmellOccurrence(
                        SmellKind.AMBIGUOUS_TEST, test.id, step.index, side, ordinal, evidence
                    ))
    return out


def detect_conditional_test(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    return [
        SmellOccurrence(
            SmellKind.CONDITIONAL_TEST, test.id, step.index, side, ordinal, ann.conditional.clause
        )
        for step, side, ordinal, ann in conditional_sentences(test, lexicon)
    ]


DETECTORS = {
    SmellKind.UNVERIFIED_ACTION: detect_unverified_action,
    SmellKind.MISPLACED_PRECONDITION: detect_misplaced_precondition,
    SmellKind.MISPLACED_ACTION: detect_misplaced_action,
    SmellKind.MISPLACED_VERIFICATION: detect_misplaced_verification,
    SmellKind.EAGER_ACTION: detect_eager_action,
    SmellKind.AMBIGUOUS_TEST: detect_ambiguous_test,
    SmellKind.CONDITIONAL_TEST: detect_conditional_test,
}


def occurrence_sort_key(occ: SmellOccurrence):
    return (
        occ.step_index or 0,
        _SIDE_ORDER[occ.list_side],
        occ.sentence_ordinal or 0,
        _KIND_ORDER[occ.kind],
    )


def detect_all(test: TestCase, lexicon: Lexicon | None = None) -> list[SmellOccurrence]:
    found = [occ for detector in DETECTORS.values() for occ in detector(test, lexicon)]
    return sorted(found, key=occurrence_sort_key)


def scan_warnings(test: TestCase, lexicon: Lexicon | None = None) -> list[str]:
    """Findings the tool reports but never rewrites."""
    lex = _lex(lexicon)
    out = []
    for step in test.steps:
        where = f"test {test.id!r} step {step.index}"
        if not step.actions and not step.verifications:
            out.append(f"{where}: no actions and no verifications")
        for ordinal, sentence in enumerate(step.actions, start=1):
            if sentence.is_placeholder:
                continue
            for marker in unhandled_conditional_markers(annotate(sentence, lex)):
                out.append(
                    f"{where} action {ordinal}: possible conditional (unhandled marker {marker!r})"
                )
        for ordinal, sentence in enumerate(step.verifications, start=1):
            if sentence.is_placeholder:
                continue
            ann = annotate(sentence, lex)
            if ann.conditional is not None and sentence_class(
                sentence, step.index, ordinal, ListSide.VERIFICATIONS, lex
            ) is not SentenceClass.ACTION:
                out.append(
                    f"{where} verification {ordinal}: conditional clause "
                    f"{ann.conditional.clause!r} left in place"
                )
    return out
