import json
import shutil
import subprocess
import sys

import pytest

from nltest.cli import EXIT_ERROR, EXIT_OK, EXIT_SMELLS, cli_main
from nltest.model import SmellKind
from nltest.pipeline import detect_only
from nltest.report import smell_counts
from nltest.xmlio import parse_suite_xml

from conftest import CORPUS, CORPUS_DIR, GOLDEN

CLEAN = b"""<?xml version="1.0" encoding="UTF-8"?>
<testsuite name="clean">
  <test id="t">
    <steps>
      <step index="1">
        <actions>
          <action>Open the menu</action>
        </actions>
        <verifications>
          <verification>The menu opens</verification>
        </verifications>
      </step>
    </steps>
  </test>
</testsuite>
"""


@pytest.fixture
def clean_file(tmp_path):
    path = tmp_path / "clean.xml"
    path.write_bytes(CLEAN)
    return path


def test_detect_clean_exits_zero(clean_file, capsys):
    assert cli_main(["detect", str(clean_file), "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["occurrences"] == []


def test_detect_smelly_exits_one(tmp_path, capsys):
    report = tmp_path / "r.json"
    assert cli_main(["detect", str(CORPUS), "--report", str(report)]) == EXIT_SMELLS
    out = capsys.readouterr().out
    assert "Unverified Action" in out and "warning:" in out
    assert json.loads(report.read_text())["summary"]["before"]["ConditionalTest"] == 5


def test_fix_golden_corpus(tmp_path):
    out = tmp_path / "out.xml"
    report = tmp_path / "r.json"
    code = cli_main(["fix", str(CORPUS_DIR / "golden_corpus.xml"), "-o", str(out), "--report", str(report)])
    assert code == EXIT_OK
    assert out.read_bytes() == (GOLDEN / "golden_corpus.after.xml").read_bytes()
    data = json.loads(report.read_text())
    assert set(data["summary"]["after"].values()) == {0}
    assert data["remaining"] == []


def test_fix_only_and_skip(tmp_path):
    out = tmp_path / "out.xml"
    assert cli_main(["fix", str(CORPUS), "-o", str(out), "--skip", "FillVerification"]) == EXIT_OK
    left = detect_only(parse_suite_xml(out.read_bytes()))
    assert {o.kind for o in left} == {SmellKind.UNVERIFIED_ACTION}
    assert cli_main(["fix", str(CORPUS), "-o", str(out), "--only", "7"]) == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["fix", "IN", "-o", "OUT", "--only", "1", "--skip", "2"],
    ["fix", "IN", "-o", "OUT", "--only", "NoSuchThing"],
    ["fix", "IN"],
    ["detect", "IN", "--bogus"],
    ["detect", "missing.xml"],
    ["frobnicate"],
    ["stats", "missing-dir"],
    ["detect", "IN", "--lexicon-dir", "no/such/dir"],
])
def test_errors_exit_two(argv, clean_file, tmp_path, capsys):
    argv = [str(clean_file) if a == "IN" else str(tmp_path / "o.xml") if a == "OUT" else a for a in argv]
    assert cli_main(argv) == EXIT_ERROR


def test_malformed_and_invalid_inputs(tmp_path, capsys):
    bad = tmp_path / "bad.xml"
    bad.write_bytes(b"<testsuite><test")
    assert cli_main(["detect", str(bad)]) == EXIT_ERROR
    assert "line 1" in capsys.readouterr().err
    dup = tmp_path / "dup.xml"
    dup.write_bytes(b'<testsuite name="s"><test id="a"/><test id="a"/></testsuite>')
    assert cli_main(["detect", str(dup)]) == EXIT_ERROR
    assert "duplicate test id" in capsys.readouterr().err


def test_stats_matches_detect_only(tmp_path, capsys):
    for path in CORPUS_DIR.glob("*.xml"):
        shutil.copy(path, tmp_path / path.name)
    assert cli_main(["stats", str(tmp_path)]) == EXIT_OK
    out = capsys.readouterr().out
    totals = smell_counts([])
    for path in tmp_path.glob("*.xml"):
        for kind, n in smell_counts(detect_only(parse_suite_xml(path.read_bytes()))).items():
            totals[kind] += n
    for kind in SmellKind:
        line = next(l for l in out.splitlines() if l.startswith(kind.label))
        assert int(line.split()[-1].replace(",", "")) == totals[kind]
    assert out.splitlines()[-1].split()[-1] == f"{sum(totals.values()):,}"


def test_stats_on_empty_directory(tmp_path, capsys):
    assert cli_main(["stats", str(tmp_path)]) == EXIT_OK
    assert "TOTAL" in capsys.readouterr().out


def test_lexicon_dir_from_environment(tmp_path, monkeypatch, capsys):
    lex = tmp_path / "lex"
    lex.mkdir()
    (lex / "ambiguity_terms.txt").write_text("menu\n", encoding="utf-8")
    path = tmp_path / "clean.xml"
    path.write_bytes(CLEAN)
    assert cli_main(["detect", str(path)]) == EXIT_OK
    monkeypatch.setenv("NLTEST_LEXICON_DIR", str(lex))
    assert cli_main(["detect", str(path)]) == EXIT_SMELLS
    monkeypatch.delenv("NLTEST_LEXICON_DIR")
    assert cli_main(["detect", str(path), "--lexicon-dir", str(lex)]) == EXIT_SMELLS


def test_module_entry_point(clean_file):
    proc = subprocess.run([sys.executable, "-m", "nltest", "detect", str(clean_file)], capture_output=True)
    assert proc.returncode == 0
    assert b"0 smell occurrence(s)" in proc.stdout
