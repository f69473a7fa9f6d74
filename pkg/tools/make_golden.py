"""Write the golden fixture pairs (hand-encoded expectations)."""

from pathlib import Path

from nltest.model import Origin, Sentence, Step, TestCase, TestSuite
from nltest.xmlio import serialize_suite_xml

A = Origin.AUTHORED
P = Origin.PLACEHOLDER
R = Origin.REWRITTEN


def s(*texts, origin=A):
    return tuple(Sentence(t, origin) for t in texts)


def fill(text):
    return (Sentence(f"FILL_VERIFICATION: {text}", P),)


PAIRS = {}

# Fill Verification: the action has no verification.
PAIRS["fill_verification"] = (
    TestCase("unity_dash", (), (
        Step(1, s("Click the Dash icon"), ()),
    )),
    [TestCase("unity_dash", (), (
        Step(1, s("Click the Dash icon"), fill("Click the Dash icon")),
    ))],
)

# Extract Precondition: "Ensure that ..." opens the first action list.
PAIRS["extract_precondition"] = (
    TestCase("ristretto", (), (
        Step(1, s("Ensure that Ristretto is loaded without any errors", "Open an image file"),
             s("The image is displayed")),
        Step(2, s("Click the Next button"), s("The next image is displayed")),
    )),
    [TestCase("ristretto", ("Ensure that Ristretto is loaded without any errors",), (
        Step(1, s("Open an image file"), s("The image is displayed")),
        Step(2, s("Click the Next button"), s("The next image is displayed")),
    ))],
)

# Extract Action: an instruction sits in the verification list.
PAIRS["extract_action"] = (
    TestCase("compiz", (), (
        Step(1, (), s("Open some windows")),
        Step(2, s("Press Alt+Tab"), s("The window switcher appears")),
    )),
    [TestCase("compiz", (), (
        Step(1, s("Open <<SPECIFY: some>> windows", origin=R),
             fill("Open <<SPECIFY: some>> windows")),
        Step(2, s("Press Alt+Tab"), s("The window switcher appears")),
    ))],
)

# Extract Verification: a check sits in the action list.
PAIRS["extract_verification"] = (
    TestCase("volume_management", (), (
        Step(1, s("Open the Disks application",
                  "Verify that 'Enable Volume Management' is checked"), ()),
    )),
    [TestCase("volume_management", (), (
        Step(1, s("Open the Disks application"),
             s("Verify that 'Enable Volume Management' is checked")),
    ))],
)

# Separate Actions: two instructions joined by "and then".
PAIRS["separate_actions"] = (
    TestCase("memo", (), (
        Step(1, s("Open the Notes application"), s("The Notes window appears")),
        Step(2, s("Click the New Memo button"), s("A memo pops up")),
        Step(3, s("Add content to the popped up memo and then click the green tick"),
             s("Did the window show the memo content?")),
    )),
    [TestCase("memo", (), (
        Step(1, s("Open the Notes application"), s("The Notes window appears")),
        Step(2, s("Click the New Memo button"), s("A memo pops up")),
        Step(3, s("Add content to the popped up memo", origin=R),
             fill("Add content to the popped up memo")),
        Step(4, s("Click the green tick", origin=R), s("Did the window show the memo content?")),
    ))],
)

# Extract Ambiguity: a manner adverb leaves the wait time open.
PAIRS["extract_ambiguity"] = (
    TestCase("network", (), (
        Step(1, s("After approximately 30 seconds, open the network manager."),
             s("The wireless network is visible")),
    )),
    [TestCase("network", (), (
        Step(1, s("After <<SPECIFY: approximately>> 30 seconds, open the network manager.",
                  origin=R),
             s("The wireless network is visible")),
    ))],
)

# Extract Conditional: the step only applies if a USB drive is present.
PAIRS["extract_conditional"] = (
    TestCase("usb", (), (
        Step(1, s("Open the Files application"), s("The Files window appears")),
        Step(2, s("If you have a USB drive, plug it in"), s("The drive appears in the sidebar")),
        Step(3, s("Eject the USB drive"), s("The drive disappears from the sidebar")),
    )),
    [
        TestCase("usb__if_true", ("If you have a USB drive",), (
            Step(1, s("Open the Files application"), s("The Files window appears")),
            Step(2, s("Plug it in", origin=R), s("The drive appears in the sidebar")),
            Step(3, s("Eject the USB drive"), s("The drive disappears from the sidebar")),
        )),
        TestCase("usb__if_false", (), (
            Step(1, s("Open the Files application"), s("The Files window appears")),
        )),
    ],
)


def main():
    root = Path(__file__).resolve().parent.parent
    golden = root / "tests" / "fixtures" / "golden"
    golden.mkdir(parents=True, exist_ok=True)
    for name, (before, after) in PAIRS.items():
        (golden / f"{name}.before.xml").write_bytes(serialize_suite_xml(TestSuite(name, (before,))))
        (golden / f"{name}.after.xml").write_bytes(serialize_suite_xml(TestSuite(name, tuple(after))))
    suite = TestSuite("golden_corpus", tuple(before for before, _ in PAIRS.values()))
    (root / "corpus" / "golden_corpus.xml").write_bytes(serialize_suite_xml(suite))
    expected = TestSuite("golden_corpus", tuple(t for _, after in PAIRS.values() for t in after))
    (golden / "golden_corpus.after.xml").write_bytes(serialize_suite_xml(expected))


if __name__ == "__main__":
    main()
