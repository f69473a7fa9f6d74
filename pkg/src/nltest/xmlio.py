"""Canonical XML format for test suites.

::

    <?xml version="1.0" encoding="UTF-8"?>
    <testsuite name="...">
      <test id="...">
        <preconditions>
          <condition>...</condition>
        </preconditions>
        <steps>
          <step index="1">
            <actions>
              <action>...</action>
            </actions>
            <verifications>
              <verification origin="placeholder">...</verification>
            </verifications>
          </step>
        </steps>
      </test>
    </testsuite>

Serialization is byte-exact: two-space indent, double-quoted attributes, LF
line endings, ``origin`` emitted only for non-authored sentences and
``<preconditions>`` only when non-empty.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Protocol
from xml.sax.saxutils import escape

from .model import Origin, Sentence, Step, TestCase, TestSuite

XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'


class SuiteFormatError(ValueError):
    pass


class SuiteParser(Protocol):
    """Anything that turns raw bytes into a TestSuite."""

    def parse(self, data: bytes) -> TestSuite: ...


def quoteattr(value: str) -> str:
    return '"' + escape(value, {'"': "&quot;", "\n": "&#10;", "\t": "&#9;"}) + '"'


def _sentence(elem: ET.Element, where: str) -> Sentence:
    text = (elem.text or "").strip()
    if not text:
        raise SuiteFormatError(f"{where}: empty <{elem.tag}> text")
    origin = elem.get("origin", Origin.AUTHORED.value)
    try:
        return Sentence(text, Origin(origin))
    except ValueError:
        raise SuiteFormatError(f"{where}: unknown origin {origin!r}") from None


class CanonicalXmlParser:
    def __init__(self):
        self.warnings: list[str] = []

    def parse(self, data: bytes) -> TestSuite:
        self.warnings = []
        try:
            root = ET.fromstring(data)
        except ET.ParseError as exc:
            line, col = exc.position
            raise SuiteFormatError(f"malformed XML at line {line}, column {col}: {exc}") from None
        if root.tag != "testsuite":
            raise SuiteFormatError(f"unknown root element <{root.tag}>, expected <testsuite>")
        tests = tuple(self._test(elem, n) for n, elem in enumerate(root.findall("test"), start=1))
        return TestSuite(root.get("name", ""), tests)

    def _test(self, elem: ET.Element, position: int) -> TestCase:
        test_id = elem.get("id")
        if not test_id:
            test_id = f"test{position}"
            self.warnings.append(f"test #{position} has no id; using {test_id!r}")
        pre = elem.find("preconditions")
        clauses = ()
        if pre is not None:
            clauses = tuple(
                (c.text or "").strip() for c in pre.findall("condition")
            )
        steps_elem = elem.find("steps")
        step_elems = [] if steps_elem is None else steps_elem.findall("step")
        steps = []
        for n, step_elem in enumerate(step_elems, start=1):
            raw_index = step_elem.get("index")
            if raw_index is None:
                index = n
                self.warnings.append(f"test {test_id!r}: step #{n} has no index; numbered {n}")
            else:
                try:
                    index = int(raw_index)
                except ValueError:
                    raise SuiteFormatError(
                        f"test {test_id!r}: step index {raw_index!r} is not an integer"
                    ) from None
            where = f"test {test_id!r} step {index}"
            actions = step_elem.find("actions")
            verifications = step_elem.find("verifications")
            steps.append(Step(
                index,
                tuple(_sentence(a, where) for a in ([] if actions is None else actions.findall("action"))),
                tuple(_sentence(v, where) for v in (
                    [] if verifications is None else verifications.findall("verification")
                )),
            ))
        return TestCase(test_id, clauses, tuple(steps))


def parse_suite_xml(data: bytes, warnings: list[str] | None = None) -> TestSuite:
    parser = CanonicalXmlParser()
    suite = parser.parse(data)
    if warnings is not None:
        warnings.extend(parser.warnings)
    return suite


def _sentence_line(tag: str, sentence: Sentence, indent: str) -> str:
    attr = ""
    if sentence.origin is not Origin.AUTHORED:
        attr = f" origin={quoteattr(sentence.origin.value)}"
    return f"{indent}<{tag}{attr}>{escape(sentence.text)}</{tag}>"


def _list_block(lines, tag, child, items, indent):
    if not items:
        lines.append(f"{indent}<{tag}/>")
        return
    lines.append(f"{indent}<{tag}>")
    for item in items:
        lines.append(_sentence_line(child, item, indent + "  "))
    lines.append(f"{indent}</{tag}>")


def serialize_suite_xml(suite: TestSuite) -> bytes:
    lines = [XML_DECLARATION]
    if not suite.tests:
        lines.append(f"<testsuite name={quoteattr(suite.name)}/>")
        return ("\n".join(lines) + "\n").encode("utf-8")
    lines.append(f"<testsuite name={quoteattr(suite.name)}>")
    for test in suite.tests:
        lines.append(f"  <test id={quoteattr(test.id)}>")
        if test.preconditions:
            lines.append("    <preconditions>")
            for clause in test.preconditions:
                lines.append(f"      <condition>{escape(clause)}</condition>")
            lines.append("    </preconditions>")
        if not test.steps:
            lines.append("    <steps/>")
        else:
            lines.append("    <steps>")
            for step in test.steps:
                lines.append(f'      <step index="{step.index}">')
                _list_block(lines, "actions", "action", step.actions, "        ")
                _list_block(lines, "verifications", "verification", step.verifications, "        ")
                lines.append("      </step>")
            lines.append("    </steps>")
        lines.append("  </test>")
    lines.append("</testsuite>")
    return ("\n".join(lines) + "\n").encode("utf-8")
