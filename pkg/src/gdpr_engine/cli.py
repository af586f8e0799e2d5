"""Command-line front end: check, tailor, trace, glossary."""

from __future__ import annotations

import argparse
import os
import sys

from .glossary import glossary_lookup
from .ingest import LoadError, load_instance, load_profile
from .registry import UnknownClassError, format_citations, trace_articles
from .rules import FAIL, NOT_APPLICABLE, PASS, UNKNOWN, ComplianceReport, evaluate_all
from .timebase import TimestampError, parse_minutes
from .variability import VariabilityError, build_profile, default_profile

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3

_STATUS_COLORS = {PASS: "32", FAIL: "31", NOT_APPLICABLE: "90", UNKNOWN: "33"}


def _use_color(stream) -> bool:
    if os.environ.get("GDPR_ENGINE_NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, code: str, enabled: bool) -> str:
    if not enabled:
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _canonical_json(payload) -> str:
    import json

    return json.dumps(payload, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def _print_human_report(report: ComplianceReport, stream) -> None:
    color = _use_color(stream)
    for verdict in report.verdicts:
        status = _paint(f"{verdict.status:<14}",
                        _STATUS_COLORS.get(verdict.status, "0"), color)
        print(f"{verdict.ruleId:<7}{status}{format_citations([str(a) for a in verdict.articles])}",
              file=stream)
        for finding in verdict.findings:
            subject = f"{finding.objectId}: " if finding.objectId else ""
            print(f"        - {subject}{finding.message}", file=stream)
    counts = report.counts()
    print(f"Pass: {counts[PASS]}  Fail: {counts[FAIL]}  "
          f"NotApplicable: {counts[NOT_APPLICABLE]}  Unknown: {counts[UNKNOWN]}",
          file=stream)


def _load_profile_from_path(path: str | None):
    if path is None:
        return default_profile().finalize()
    with open(path, "rb") as handle:
        resolutions = load_profile(handle.read())
    return build_profile(resolutions)


def cmd_check(args: argparse.Namespace) -> int:
    try:
        profile = _load_profile_from_path(args.profile)
        with open(args.instance, "rb") as handle:
            graph = load_instance(handle.read(), profile)
        if args.check_date is not None:
            parse_minutes(args.check_date)
        report = evaluate_all(graph, profile, check_date=args.check_date,
                              strict=args.strict_variability)
    except (LoadError, VariabilityError, TimestampError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.format == "machine":
        print(_canonical_json(report.to_payload()))
    else:
        _print_human_report(report, sys.stdout)
    counts = report.counts()
    if counts[FAIL]:
        return EXIT_FAIL
    if counts[UNKNOWN]:
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_tailor(args: argparse.Namespace) -> int:
    try:
        with open(args.profile, "rb") as handle:
            resolutions = load_profile(handle.read())
        profile = build_profile(resolutions)
    except (LoadError, VariabilityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    entries = profile.resolution_table()
    if args.format == "machine":
        print(_canonical_json({
            "audit": profile.resolution_table_payload(),
            "activeRules": profile.active_rule_ids(),
            "fingerprint": profile.fingerprint(),
        }))
        return EXIT_OK
    if entries:
        width = max(len(e.variationId) for e in entries)
        for entry in entries:
            print(f"{entry.variationId:<{width + 2}}{entry.artifact:<14}{entry.action}")
    print(f"{len(profile.active_rule_ids())} rules active")
    print(f"profile fingerprint: {profile.fingerprint()}")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    identifier = args.identifier
    profile = default_profile()
    for spec in profile.rules():
        if spec.id == identifier:
            print(format_citations([str(a) for a in spec.articles]))
            return EXIT_OK
    try:
        citations = trace_articles(identifier)
    except UnknownClassError:
        print(f"error: unknown rule or class {identifier!r}", file=sys.stderr)
        return EXIT_ERROR
    print(format_citations(citations))
    return EXIT_OK


def cmd_glossary(args: argparse.Namespace) -> int:
    definition = glossary_lookup(args.term)
    if definition is None:
        print(f"error: no glossary entry for {args.term!r}", file=sys.stderr)
        return EXIT_ERROR
    print(definition)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdpr-engine",
        description="Evaluate GDPR compliance rules over an instance model.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="evaluate all active rules")
    check.add_argument("--instance", required=True, help="instance document path")
    check.add_argument("--profile", help="specialization profile document path")
    check.add_argument("--check-date", help="ISO-8601 evaluation date")
    check.add_argument("--format", choices=("human", "machine"), default="human")
    check.add_argument("--strict-variability", action="store_true",
                       help="report Unknown when a default hook decided a verdict")
    check.set_defaults(handler=cmd_check)

    tailor = commands.add_parser("tailor", help="apply and audit a profile")
    tailor.add_argument("--profile", required=True)
    tailor.add_argument("--format", choices=("human", "machine"), default="human")
    tailor.set_defaults(handler=cmd_tailor)

    trace = commands.add_parser("trace", help="articles for a rule or model class")
    trace.add_argument("identifier")
    trace.set_defaults(handler=cmd_trace)

    glossary = commands.add_parser("glossary", help="look up a model term")
    glossary.add_argument("term")
    glossary.set_defaults(handler=cmd_glossary)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
