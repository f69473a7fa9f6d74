"""The seven catalog transformations.

Each one is a pure rewrite ``TestCase -> TransformOutcome`` and is a no-op
(same test, no records) when its smell is absent.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .annotator import ambiguous_spans, annotate, imperative_clauses
from .detectors import (
    conditional_sentences,
    detect_ambiguous_test,
    detect_conditional_test,
    detect_eager_action,
    detect_misplaced_action,
    detect_misplaced_precondition,
    detect_misplaced_verification,
    detect_unverified_action,
)
from .lexicon import Lexicon, default_lexicon
from .model import (
    PLACEHOLDER_MARKER,
    ListSide,
    Origin,
    Sentence,
    SmellOccurrence,
    Step,
    TestCase,
    Transformation,
    TransformationRecord,
    renumber_steps,
)

IF_TRUE_SUFFIX = "__if_true"
IF_FALSE_SUFFIX = "__if_false"


@dataclass(frozen=True)
class TransformOutcome:
    tests: tuple[TestCase, ...]
    records: tuple[TransformationRecord, ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.tests:
            raise ValueError("a transformation must yield at least one test")

    @property
    def changed(self) -> bool:
        return bool(self.records)


def _unchanged(test: TestCase, warnings=()) -> TransformOutcome:
    return TransformOutcome((test,), (), tuple(warnings))


def render_step(step: Step) -> str:
    actions = "; ".join(s.text for s in step.actions)
    verifications = "; ".join(s.text for s in step.verifications)
    return f"{step.index}. A: [{actions}] V: [{verifications}]"


def _by_location(occurrences: list[SmellOccurrence]) -> dict:
    return {(o.step_index, o.list_side, o.sentence_ordinal): o for o in occurrences}


def _capitalize(text: str) -> str:
    return text[:1].upper() + text[1:]


def fill_verification(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    targets = {o.step_index: o for o in detect_unverified_action(test, lexicon)}
    steps, records, warnings = [], [], []
    for step in test.steps:
        if not step.verifications and not step.actions:
            warnings.append(f"test {test.id!r} step {step.index}: no actions and no verifications")
        if step.index in targets:
            flag = Sentence(f"{PLACEHOLDER_MARKER}: {step.actions[0].text}", Origin.PLACEHOLDER)
            new = replace(step, verifications=(flag,))
            records.append(TransformationRecord(
                Transformation.FILL_VERIFICATION, targets[step.index],
                render_step(step), render_step(new),
                note="write the expected result for this step",
            ))
            step = new
        steps.append(step)
    if not records:
        return _unchanged(test, warnings)
    return TransformOutcome((replace(test, steps=tuple(steps)),), tuple(records), tuple(warnings))


def extract_precondition(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    found = detect_misplaced_precondition(test, lexicon)
    if not found:
        return _unchanged(test)
    first = test.steps[0]
    clause = first.actions[0].text
    rest = replace(first, actions=first.actions[1:])
    if rest.actions or rest.verifications:
        steps = (rest,) + test.steps[1:]
    else:
        steps = test.steps[1:]
    new = renumber_steps(replace(test, preconditions=test.preconditions + (clause,), steps=steps))
    record = TransformationRecord(
        Transformation.EXTRACT_PRECONDITION, found[0],
        render_step(first), f"P: {' AND '.join(new.preconditions)}",
    )
    return TransformOutcome((new,), (record,))


def extract_action(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    targets = _by_location(detect_misplaced_action(test, lexicon))
    if not targets:
        return _unchanged(test)
    steps, records = [], []
    for step in test.steps:
        moved, kept = [], []
        for ordinal, sentence in enumerate(step.verifications, start=1):
            target = targets.get((step.index, ListSide.VERIFICATIONS, ordinal))
            (moved if target else kept).append((sentence, target))
        if moved:
            new = replace(
                step,
                actions=step.actions + tuple(s for s, _ in moved),
                verifications=tuple(s for s, _ in kept),
            )
            records.extend(
                TransformationRecord(Transformation.EXTRACT_ACTION, t, render_step(step), render_step(new))
                for _, t in moved
            )
            step = new
        steps.append(step)
    return TransformOutcome((replace(test, steps=tuple(steps)),), tuple(records))


def extract_verification(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    targets = _by_location(detect_misplaced_verification(test, lexicon))
    if not targets:
        return _unchanged(test)
    steps, records = [], []
    for step in test.steps:
        moved, kept = [], []
        for ordinal, sentence in enumerate(step.actions, start=1):
            target = targets.get((step.index, ListSide.ACTIONS, ordinal))
            (moved if target else kept).append((sentence, target))
        if moved:
            new = replace(
                step,
                actions=tuple(s for s, _ in kept),
                verifications=tuple(s for s, _ in moved) + step.verifications,
            )
            records.extend(
                TransformationRecord(
                    Transformation.EXTRACT_VERIFICATION, t, render_step(step), render_step(new)
                )
                for _, t in moved
            )
            step = new
        steps.append(step)
    return TransformOutcome((replace(test, steps=tuple(steps)),), tuple(records))


def _strip_leading_connectors(text: str, lex: Lexicon) -> str:
    while True:
        words = text.split()
        if not words:
            return text
        lowered = [w.lower().rstrip(",") for w in words]
        seq = next(
            (s for s in lex.connector_sequences if tuple(lowered[:len(s)]) == s and s != (";",)),
            None,
        )
        if seq is None or len(seq) >= len(words):
            return text
        text = " ".join(words[len(seq):])


def _clause_sentence(text: str, original: Sentence, lex: Lexicon) -> Sentence:
    clean = _capitalize(_strip_leading_connectors(text, lex))
    if clean == original.text:
        return original
    return Sentence(clean, Origin.REWRITTEN)


def separate_actions(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    lex = lexicon or default_lexicon()
    targets = {o.step_index: o for o in detect_eager_action(test, lex)}
    if not targets:
        return _unchanged(test)
    steps, records = [], []
    for step in test.steps:
        if step.index not in targets:
            steps.append(step)
            continue
        groups: list[list[Sentence]] = []
        pending: list[Sentence] = []
        for sentence in step.actions:
            clauses = [] if sentence.is_placeholder else imperative_clauses(annotate(sentence, lex), lex)
            if not any(c.verbs for c in clauses):
                pending.append(sentence)
                continue
            for clause in clauses:
                groups.append(pending + [_clause_sentence(clause.text, sentence, lex)])
                pending = []
        if pending:
            groups[-1].extend(pending)
        new_steps = [
            Step(step.index, tuple(g), step.verifications if n == len(groups) - 1 else ())
            for n, g in enumerate(groups)
        ]
        records.append(TransformationRecord(
            Transformation.SEPARATE_ACTIONS, targets[step.index],
            render_step(step), " || ".join(render_step(s) for s in new_steps),
        ))
        steps.extend(new_steps)
    new = renumber_steps(replace(test, steps=tuple(steps)))
    return TransformOutcome((new,), tuple(records))


def specify(text: str, spans: list[tuple[int, int]]) -> str:
    """Wrap each character span of ``text`` in a SPECIFY marker."""
    for start, end in sorted(spans, reverse=True):
        text = f"{text[:start]}<<SPECIFY: {text[start:end]}>>{text[end:]}"
    return text


def extract_ambiguity(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    lex = lexicon or default_lexicon()
    occurrences = detect_ambiguous_test(test, lex)
    if not occurrences:
        return _unchanged(test)
    by_sentence: dict[tuple, list[SmellOccurrence]] = {}
    for occ in occurrences:
        by_sentence.setdefault((occ.step_index, occ.list_side, occ.sentence_ordinal), []).append(occ)

    def gamma(sentence: Sentence, key) -> tuple[Sentence, list[TransformationRecord]]:
        if key not in by_sentence:
            return sentence, []
        ann = annotate(sentence, lex)
        char_spans = [(ann.tokens[s].start, ann.tokens[e - 1].end) for s, e, _ in ambiguous_spans(ann)]
        rewritten = Sentence(specify(sentence.text, char_spans), Origin.REWRITTEN)
        recs = [
            TransformationRecord(
                Transformation.EXTRACT_AMBIGUITY, occ, sentence.text, rewritten.text,
                note=f"replace '{occ.evidence}' with an exact value",
            )
            for occ in by_sentence[key]
        ]
        return rewritten, recs

    steps, records = [], []
    for step in test.steps:
        lists = {}
        for side in (ListSide.ACTIONS, ListSide.VERIFICATIONS):
            out = []
            for ordinal, sentence in enumerate(step.sentences(side), start=1):
                new, recs = gamma(sentence, (step.index, side, ordinal))
                out.append(new)
                records.extend(recs)
            lists[side] = tuple(out)
        steps.append(replace(step, actions=lists[ListSide.ACTIONS], verifications=lists[ListSide.VERIFICATIONS]))
    return TransformOutcome((replace(test, steps=tuple(steps)),), tuple(records))


def extract_conditional(test: TestCase, lexicon: Lexicon | None = None) -> TransformOutcome:
    lex = lexicon or default_lexicon()
    hit = next(conditional_sentences(test, lex), None)
    if hit is None:
        return _unchanged(test)
    step, side, ordinal, ann = hit
    target = next(
        o for o in detect_conditional_test(test, lex)
        if (o.step_index, o.list_side, o.sentence_ordinal) == (step.index, side, ordinal)
    )
    clause, remainder = ann.conditional.clause, ann.conditional.remainder

    kept = list(step.sentences(side))
    if remainder:
        kept[ordinal - 1] = Sentence(_capitalize(remainder), Origin.REWRITTEN)
    else:
        del kept[ordinal - 1]
    if side is ListSide.ACTIONS:
        new_step = replace(step, actions=tuple(kept))
    else:
        new_step = replace(step, verifications=tuple(kept))
    true_steps = tuple(new_step if s.index == step.index else s for s in test.steps)
    if_true = TestCase(
        test.id + IF_TRUE_SUFFIX, test.preconditions + (_capitalize(clause),), true_steps
    )
    if_false = TestCase(test.id + IF_FALSE_SUFFIX, test.preconditions, test.steps[:step.index - 1])

    warnings = []
    if if_false.steps:
        tests = (if_true, if_false)
    else:
        tests = (if_true,)
        warnings.append(
            f"test {test.id!r}: conditional in step {step.index} leaves no steps for the "
            f"false branch; {if_false.id!r} not emitted"
        )
    record = TransformationRecord(
        Transformation.EXTRACT_CONDITIONAL, target, ann.text,
        f"P += {_capitalize(clause)!r}; action -> {_capitalize(remainder)!r}",
        created_test_ids=tuple(t.id for t in tests),
    )
    return TransformOutcome(tests, (record,), tuple(warnings))


TRANSFORMS = {
    Transformation.EXTRACT_CONDITIONAL: extract_conditional,
    Transformation.EXTRACT_ACTION: extract_action,
    Transformation.SEPARATE_ACTIONS: separate_actions,
    Transformation.EXTRACT_VERIFICATION: extract_verification,
    Transformation.EXTRACT_AMBIGUITY: extract_ambiguity,
    Transformation.EXTRACT_PRECONDITION: extract_precondition,
    Transformation.FILL_VERIFICATION: fill_verification,
}
