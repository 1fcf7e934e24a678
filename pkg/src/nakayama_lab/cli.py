"""Command-line entry point: ``nakayama-lab run session.txt``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .dsl import EXIT_PARSE, ParseError, exit_code, parse_session, run_command


def _report_filename(index: int, report) -> str:
    target = "_".join(report.target.split()) or "session"
    return f"{index:02d}-{report.command}-{target}.json"


def _human(report, seconds: float) -> str:
    head = f"[{report.status}] {report.command} {report.target}".rstrip()
    body = json.dumps(report.details, ensure_ascii=False)
    if len(body) > 160:
        body = body[:157] + "..."
    return f"{head}  ({seconds:.2f}s)\n    {body}"


def cmd_run(args) -> int:
    path = Path(args.session)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        session = parse_session(text, path.parent)
    except ParseError as exc:
        print(f"{path}:{exc.line}:{exc.col}: parse error: {exc.message}", file=sys.stderr)
        return EXIT_PARSE
    reports = []
    for cmd in session.commands:
        t0 = time.perf_counter()
        rep = run_command(session, cmd, args.max_deg)
        reports.append(rep)
        if not args.json:
            print(_human(rep, time.perf_counter() - t0))
    if args.json:
        json.dump([r.to_json() for r in reports], sys.stdout, indent=2, ensure_ascii=False)
        sys.stdout.write("\n")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, rep in enumerate(reports, start=1):
            (out / _report_filename(i, rep)).write_text(
                json.dumps(rep.to_json(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return exit_code(reports)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="nakayama-lab", description=__doc__)
    sub = parser.add_subparsers(dest="action", required=True)
    run = sub.add_parser("run", help="run a session file")
    run.add_argument("session")
    run.add_argument("--out", help="directory for one JSON report per command")
    run.add_argument("--max-deg", type=int, default=5, help="default degree bound for hilbert")
    run.add_argument("--json", action="store_true", help="print all reports as JSON")
    run.set_defaults(func=cmd_run)
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
