import json

from nltest.model import ListSide, SmellKind, SmellOccurrence, Step, TestCase, TestSuite, sentences
from nltest.pipeline import detect_only, run_pipeline
from nltest.report import build_report, emit_report_json, format_count_table, format_occurrences, smell_counts
from nltest.xmlio import parse_suite_xml

from conftest import CORPUS


def test_zero_findings():
    report = json.loads(emit_report_json([], [], []))
    assert report["occurrences"] == [] and report["transformations"] == []
    assert set(report["summary"]["before"].values()) == {0}
    assert list(report) == [
        "tool_version", "input_file", "occurrences", "transformations", "warnings", "remaining", "summary",
    ]


def test_notification_test_detect_only():
    steps = tuple(Step(i, sentences([f"Click item {i}"]), sentences(["It opens"])) for i in range(1, 7))
    steps += (Step(7, sentences(["Click one more time on the same message"]), ()),)
    found = detect_only(TestSuite("s", (TestCase("n", (), steps),)))
    report = json.loads(emit_report_json(found, [], []))
    (occ,) = report["occurrences"]
    assert occ["kind"] == "UnverifiedAction" and occ["step_index"] == 7


def test_full_run_on_corpus_has_zero_after_counts():
    suite = parse_suite_xml(CORPUS.read_bytes())
    before = detect_only(suite)
    result = run_pipeline(suite)
    report = build_report(before, result.records, result.warnings, remaining=detect_only(result.suite))
    assert set(report["summary"]["after"].values()) == {0}
    for kind, n in report["summary"]["before"].items():
        assert n == sum(o["kind"] == kind for o in report["occurrences"])
    assert all(r["number"] in range(1, 8) for r in report["transformations"])


def test_count_table_shape():
    table = format_count_table({SmellKind.EAGER_ACTION: 1234, SmellKind.AMBIGUOUS_TEST: 2})
    lines = table.splitlines()
    assert lines[0].split() == ["Test", "Smell", "Total"]
    assert len(lines) == 2 + 7 + 2
    assert lines[-1].split() == ["TOTAL", "1,236"]
    assert "Eager Action" in table and "1,234" in table
    assert smell_counts([])[SmellKind.CONDITIONAL_TEST] == 0


def test_text_listing():
    occ = SmellOccurrence(SmellKind.EAGER_ACTION, "t", 2, ListSide.ACTIONS, None, "open, click")
    assert format_occurrences([occ]) == "t step 2 actions: Eager Action: open, click\n1 smell occurrence(s)\n"
