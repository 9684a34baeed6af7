"""Command-line driver.

    verify run <suite> [--config PATH] [--seed N] [--format json|text] [--out PATH]
    verify list

Exit status: 0 when every case passes, 1 when any case fails, 2 for usage or
configuration errors.
"""
from __future__ import annotations

import argparse
import sys

from .config import load_config
from .errors import ConfigError
from .report import emit_report
from .suites import run_suite, suite_names

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="verify", description="Run numerical verification suites.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", help="run a suite and emit its report")
    run.add_argument("suite")
    run.add_argument("--config", default=None, help="key = value configuration file")
    run.add_argument("--seed", type=int, default=None, help="overrides the configured seed")
    run.add_argument("--format", choices=("json", "text"), default="json")
    run.add_argument("--out", default=None, help="write the report here instead of stdout")
    sub.add_parser("list", help="print the available suite names")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command == "list":
        print("\n".join(suite_names()))
        return EXIT_PASS

    if args.suite not in suite_names():
        print(f"verify: unknown suite {args.suite!r} (see 'verify list')", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = load_config(args.config)
        if args.seed is not None:
            if args.seed < 0:
                raise ConfigError("seed must be non-negative")
            cfg.seed = args.seed
    except ConfigError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report = run_suite(args.suite, cfg)
    try:
        text = emit_report(report, args.format, args.out)
    except OSError as exc:
        print(f"verify: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_PASS if report.all_passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
