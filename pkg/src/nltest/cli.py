"""Command line: ``nltest detect | fix | stats``.

Exit codes: 0 success/clean, 1 smells found (``detect`` only), 2 error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .lexicon import LexiconError, load_lexicon
from .model import validate
from .pipeline import PipelineConfig, PipelineError, detect_only, run_pipeline, suite_warnings
from .report import emit_report_json, format_count_table, format_occurrences, smell_counts
from .xmlio import SuiteFormatError, parse_suite_xml, serialize_suite_xml

EXIT_OK = 0
EXIT_SMELLS = 1
EXIT_ERROR = 2

log = logging.getLogger("nltest")


class CliError(Exception):
    pass


def _names(value: str) -> list[str]:
    return [n for n in (part.strip() for part in value.split(",")) if n]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nltest", description="Detect and remove smells in natural-language test suites."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    lex = argparse.ArgumentParser(add_help=False)
    lex.add_argument("--lexicon-dir", help="directory of extra lexicon files")

    detect = sub.add_parser("detect", parents=[lex], help="report smells without changing anything")
    detect.add_argument("input", type=Path)
    detect.add_argument("--report", type=Path, help="write the JSON report here")
    detect.add_argument("--format", choices=("json", "text"), default="text")

    fix = sub.add_parser("fix", parents=[lex], help="apply the transformations")
    fix.add_argument("input", type=Path)
    fix.add_argument("-o", "--output", type=Path, required=True)
    fix.add_argument("--report", type=Path)
    fix.add_argument("--only", type=_names, help="comma-separated transformations to run")
    fix.add_argument("--skip", type=_names, help="comma-separated transformations to leave out")
    fix.add_argument("--max-iterations", type=int, default=100)

    stats = sub.add_parser("stats", parents=[lex], help="per-smell totals over a directory of suites")
    stats.add_argument("directory", type=Path)
    return parser


def _load(path: Path, lexicon):
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    warnings: list[str] = []
    try:
        suite = parse_suite_xml(data, warnings)
    except SuiteFormatError as exc:
        raise CliError(f"{path}: {exc}") from None
    violations = validate(suite)
    if violations:
        raise CliError(f"{path}: invalid suite:\n  " + "\n  ".join(violations))
    return suite, warnings


def _write(path: Path, data: bytes) -> None:
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from None


def cmd_detect(args, lexicon) -> int:
    suite, warnings = _load(args.input, lexicon)
    occurrences = detect_only(suite, lexicon)
    warnings += suite_warnings(suite, lexicon)
    report = emit_report_json(occurrences, [], warnings, input_file=str(args.input))
    if args.report:
        _write(args.report, report)
    if args.format == "json":
        sys.stdout.write(report.decode("utf-8"))
    else:
        sys.stdout.write(format_occurrences(occurrences))
        for w in warnings:
            sys.stdout.write(f"warning: {w}\n")
    return EXIT_SMELLS if occurrences else EXIT_OK


def cmd_fix(args, lexicon) -> int:
    try:
        config = PipelineConfig.select(
            only=args.only, skip=args.skip,
            max_iterations_per_transformation=args.max_iterations, lexicon=lexicon,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    suite, warnings = _load(args.input, lexicon)
    before = detect_only(suite, lexicon)
    try:
        result = run_pipeline(suite, config)
    except PipelineError as exc:
        raise CliError(str(exc)) from None
    _write(args.output, serialize_suite_xml(result.suite))
    remaining = detect_only(result.suite, lexicon)
    if args.report:
        _write(args.report, emit_report_json(
            before, result.records, warnings + result.warnings,
            input_file=str(args.input), remaining=remaining,
        ))
    log.info(
        "%d smell(s) found, %d transformation(s) applied, %d left",
        len(before), len(result.records), len(remaining),
    )
    return EXIT_OK


def _count_file(path: Path, lexicon):
    suite, _ = _load(path, lexicon)
    return smell_counts(detect_only(suite, lexicon))


def cmd_stats(args, lexicon) -> int:
    if not args.directory.is_dir():
        raise CliError(f"not a directory: {args.directory}")
    files = sorted(args.directory.glob("*.xml"))
    totals = smell_counts([])
    with ThreadPoolExecutor() as pool:
        for counts in pool.map(lambda p: _count_file(p, lexicon), files):
            for kind, n in counts.items():
                totals[kind] += n
    sys.stdout.write(f"{len(files)} file(s) in {args.directory}\n")
    sys.stdout.write(format_count_table(totals))
    return EXIT_OK


COMMANDS = {"detect": cmd_detect, "fix": cmd_fix, "stats": cmd_stats}


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        lexicon = load_lexicon(args.lexicon_dir)
        return COMMANDS[args.command](args, lexicon)
    except (CliError, LexiconError) as exc:
        sys.stderr.write(f"nltest: error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(cli_main())
