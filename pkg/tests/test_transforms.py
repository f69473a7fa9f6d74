import pytest

from nltest.detectors import detect_eager_action, detect_unverified_action
from nltest.model import (
    ListSide,
    Origin,
    Sentence,
    SmellKind,
    Step,
    TestCase,
    Transformation,
    sentences,
)
from nltest.transforms import (
    TRANSFORMS,
    TransformOutcome,
    extract_action,
    extract_ambiguity,
    extract_conditional,
    extract_precondition,
    extract_verification,
    fill_verification,
    separate_actions,
    specify,
)


def texts(seq):
    return [s.text for s in seq]


def step(index, actions=(), verifications=()):
    return Step(index, sentences(actions), sentences(verifications))


CLEAN = TestCase("clean", ("A printer is connected",), (
    step(1, ["Open the printer list"], ["The list appears"]),
    step(2, ["Click the OK button"], ["The dialog closes"]),
))


@pytest.mark.parametrize("transform", list(TRANSFORMS.values()))
def test_noop_on_clean_test(transform, lexicon):
    outcome = transform(CLEAN, lexicon)
    assert outcome.tests == (CLEAN,) and outcome.records == () and not outcome.changed


def test_outcome_needs_a_test():
    with pytest.raises(ValueError):
        TransformOutcome(())


def test_fill_verification_uses_placeholder(lexicon):
    test = TestCase("dash", (), (step(1, ["Click the Dash icon"]),))
    outcome = fill_verification(test, lexicon)
    (v,) = outcome.tests[0].steps[0].verifications
    assert v == Sentence("FILL_VERIFICATION: Click the Dash icon", Origin.PLACEHOLDER)
    (rec,) = outcome.records
    assert rec.transformation is Transformation.FILL_VERIFICATION


def test_fill_verification_warns_on_empty_step(lexicon):
    test = TestCase("t", (), (step(1),))
    outcome = fill_verification(test, lexicon)
    assert outcome.tests == (test,) and len(outcome.warnings) == 1


def test_extract_precondition_moves_clause(lexicon):
    pre = "Ensure that Ristretto is loaded without any errors"
    test = TestCase("r", (), (step(1, [pre, "Open an image file"], ["The image is displayed"]),))
    out = extract_precondition(test, lexicon).tests[0]
    assert out.preconditions == (pre,)
    assert texts(out.steps[0].actions) == ["Open an image file"]


def test_extract_precondition_drops_emptied_step(lexicon):
    test = TestCase("r", ("P",), (
        step(1, ["Make sure that Bluetooth is enabled"]),
        step(2, ["Open the settings"], ["It opens"]),
    ))
    out = extract_precondition(test, lexicon).tests[0]
    assert out.preconditions == ("P", "Make sure that Bluetooth is enabled")
    assert [s.index for s in out.steps] == [1]
    assert texts(out.steps[0].actions) == ["Open the settings"]


def test_extract_action_appends_to_tail(lexicon):
    test = TestCase("c", (), (step(1, ["Log in"], ["Open some windows", "The launcher appears"]),))
    out = extract_action(test, lexicon).tests[0]
    assert texts(out.steps[0].actions) == ["Log in", "Open some windows"]
    assert texts(out.steps[0].verifications) == ["The launcher appears"]
    # one existing action plus one moved action is now an eager step
    assert detect_eager_action(out, lexicon)


def test_extract_verification_prepends_in_order(lexicon):
    test = TestCase("v", (), (step(1, [
        "Open the volume settings",
        "Verify that 'Enable Volume Management' is checked",
        "Confirm the dialog appears",
    ], ["The icon is shown"]),))
    out = extract_verification(test, lexicon).tests[0]
    assert texts(out.steps[0].actions) == ["Open the volume settings"]
    assert texts(out.steps[0].verifications) == [
        "Verify that 'Enable Volume Management' is checked",
        "Confirm the dialog appears",
        "The icon is shown",
    ]


def test_extract_verification_also_closes_unverified(lexicon):
    test = TestCase("v", (), (step(1, ["Open it", "Verify that the box is checked"]),))
    assert detect_unverified_action(test, lexicon)
    assert not detect_unverified_action(extract_verification(test, lexicon).tests[0], lexicon)


def test_separate_actions_memo(lexicon):
    test = TestCase("memo", (), (
        step(1, ["Open the Notes application"], ["It opens"]),
        step(2, ["Click the new memo icon"], ["A memo appears"]),
        step(3, ["Add content to the popped up memo and then click the green tick"],
             ["Did the window showed the memo?"]),
    ))
    outcome = separate_actions(test, lexicon)
    out = outcome.tests[0]
    assert [s.index for s in out.steps] == [1, 2, 3, 4]
    assert texts(out.steps[2].actions) == ["Add content to the popped up memo"]
    assert out.steps[2].verifications == ()
    assert texts(out.steps[3].actions) == ["Click the green tick"]
    assert texts(out.steps[3].verifications) == ["Did the window showed the memo?"]
    assert out.steps[3].actions[0].origin is Origin.REWRITTEN
    assert out.steps[2].actions[0].origin is Origin.REWRITTEN


def test_separate_actions_four_clauses_expose_unverified(lexicon):
    test = TestCase("p", (), (step(1, [
        "Select the printer.", "Set the number of copies to 2.", "Choose the page range.", "Click Print.",
    ], ["A window opens"]),))
    out = separate_actions(test, lexicon).tests[0]
    assert len(out.steps) == 4
    assert [o.step_index for o in detect_unverified_action(out, lexicon)] == [1, 2, 3]
    # untouched sentences keep their authored origin
    assert all(s.actions[0].origin is Origin.AUTHORED for s in out.steps)


def test_separate_actions_keeps_non_imperative_with_next_clause(lexicon):
    test = TestCase("n", (), (step(1, ["Open the editor", "Note: the editor is slow", "Save the file"], ["Saved"]),))
    out = separate_actions(test, lexicon).tests[0]
    assert [texts(s.actions) for s in out.steps] == [
        ["Open the editor"], ["Note: the editor is slow", "Save the file"],
    ]


@pytest.mark.parametrize("text, spans, expected", [
    ("After approximately 30 seconds, open the network manager.", [(6, 19)],
     "After <<SPECIFY: approximately>> 30 seconds, open the network manager."),
    ("abc", [], "abc"),
])
def test_specify(text, spans, expected):
    assert specify(text, spans) == expected


@pytest.mark.parametrize("text, expected", [
    ("After approximately 30 seconds, open the network manager.",
     "After <<SPECIFY: approximately>> 30 seconds, open the network manager."),
    ("Open any application", "Open <<SPECIFY: any>> application"),
    ("Wait a few seconds quickly", "Wait <<SPECIFY: a few>> seconds <<SPECIFY: quickly>>"),
])
def test_extract_ambiguity(text, expected, lexicon):
    test = TestCase("a", (), (step(1, [text], ["Done"]),))
    outcome = extract_ambiguity(test, lexicon)
    (sentence,) = outcome.tests[0].steps[0].actions
    assert sentence == Sentence(expected, Origin.REWRITTEN)
    assert all(r.note.startswith("replace '") for r in outcome.records)
    # markers are opaque, so a second pass finds nothing
    assert not extract_ambiguity(outcome.tests[0], lexicon).changed


def test_extract_conditional_usb(lexicon):
    test = TestCase("usb", (), (
        step(1, ["Open the file manager"], ["It opens"]),
        step(2, ["If you have a USB drive, plug it in"], ["The drive is listed"]),
        step(3, ["Eject the drive"], ["It disappears"]),
    ))
    outcome = extract_conditional(test, lexicon)
    if_true, if_false = outcome.tests
    assert if_true.id == "usb__if_true" and if_false.id == "usb__if_false"
    assert if_true.preconditions == ("If you have a USB drive",)
    assert texts(if_true.steps[1].actions) == ["Plug it in"]
    assert len(if_true.steps) == 3
    assert len(if_false.steps) == 1 and if_false.preconditions == ()
    (rec,) = outcome.records
    assert rec.created_test_ids == ("usb__if_true", "usb__if_false")
    assert rec.target.kind is SmellKind.CONDITIONAL_TEST


def test_extract_conditional_in_first_step_warns(lexicon):
    test = TestCase("m", (), (step(1, ["If a second monitor is attached, open the Displays settings"], ["Ok"]),))
    outcome = extract_conditional(test, lexicon)
    assert [t.id for t in outcome.tests] == ["m__if_true"]
    assert len(outcome.warnings) == 1


def test_extract_conditional_drops_whole_conditional_sentence(lexicon):
    test = TestCase("w", (), (step(1, ["Open it"], ["Ok"]), step(2, ["Click OK", "If the dialog is open"], ["Ok"])))
    if_true, _ = extract_conditional(test, lexicon).tests
    assert texts(if_true.steps[1].actions) == ["Click OK"]


def test_extract_conditional_handles_only_the_first(lexicon):
    test = TestCase("n", (), (
        step(1, ["Open it"], ["Ok"]),
        step(2, ["If A is shown, click it"], ["Ok"]),
        step(3, ["If B is shown, click it"], ["Ok"]),
    ))
    if_true, if_false = extract_conditional(test, lexicon).tests
    assert texts(if_true.steps[2].actions) == ["If B is shown, click it"]
    assert len(if_false.steps) == 1


def test_records_name_their_list_side(lexicon):
    test = TestCase("c", (), (step(1, ["Log in"], ["Open some windows"]),))
    (rec,) = extract_action(test, lexicon).records
    assert rec.target.list_side is ListSide.VERIFICATIONS
