"""Command-line front end.

    ratgauge compute --group "SU(2)" --b2 5 --space b-star
    ratgauge compute --group E8 --b2 3 --space gauge --series 30 --format json
    ratgauge tables --group "Spin(7)" --b2 2
    ratgauge selftest

Exit status: 0 on success, 1 for invalid input, 2 when ``--check`` (or
``selftest``) finds an inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from ratgauge.graded import SpaceTag
from ratgauge.homotopy import BaseData
from ratgauge.liegroups import GroupSpec, GroupSpecError, parse_group_spec
from ratgauge.report import FORMATS, build_report, default_max_degree, render_report
from ratgauge import verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK = 2


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; 2 is reserved for failed checks here
    def error(self, message):
        raise _ArgumentError(message)


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ratgauge", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--group", required=True, help='group expression, e.g. "SU(2) x E8"')
    common.add_argument("--b2", required=True, type=_nonneg_int, help="second Betti number of M")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--series", type=_nonneg_int, metavar="N", help="Betti numbers up to degree N")
    common.add_argument("--max-degree", type=_pos_int, metavar="N", help="highest degree listed and checked")
    common.add_argument("--check", action="store_true", help="run the consistency checks as well")

    compute = sub.add_parser("compute", parents=[common], help="one space")
    compute.add_argument("--space", required=True, choices=[t.value for t in SpaceTag])

    sub.add_parser("tables", parents=[common], help="every space at once")

    selftest = sub.add_parser("selftest", help="consistency checks over the built-in group zoo")
    selftest.add_argument("--max-degree", type=_pos_int, default=64, metavar="N")
    selftest.add_argument("--verbose", action="store_true", help="list every check")
    return parser


def _run_checks(g: GroupSpec, b2: int, max_degree: int) -> verify.CheckReport:
    report = verify.CheckReport()
    report.extend(verify.check_group_data(g))
    report.extend(verify.check_sequence_consistency(g, b2, max_degree))
    report.extend(verify.check_totals(g, b2))
    return report


def _compute(args, spaces: list[SpaceTag], out, err) -> int:
    g = parse_group_spec(args.group)
    base = BaseData(args.b2)
    max_degree = args.max_degree or default_max_degree(g)
    reports = [build_report(g, base, tag, args.series, max_degree) for tag in spaces]

    if args.format == "json":
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        print(json.dumps(payload, indent=2, ensure_ascii=False), file=out)
    else:
        sep = "\n\n" if args.format == "text" else "\n"
        print(sep.join(render_report(r, args.format) for r in reports), file=out)

    if args.check:
        checks = _run_checks(g, base.b2, max_degree)
        if not checks.ok:
            for line in checks.lines():
                if line.startswith("[fail]"):
                    print(line, file=err)
            return EXIT_CHECK
        print(f"checks: {len(checks)} passed", file=err)
    return EXIT_OK


def _selftest(args, out) -> int:
    report = verify.run_selftest(max_degree=args.max_degree)
    if args.verbose:
        print("\n".join(report.lines()), file=out)
    else:
        for line in report.lines():
            if line.startswith("[fail]"):
                print(line, file=out)
    print(f"{len(report) - len(report.failures)}/{len(report)} checks passed", file=out)
    return EXIT_OK if report.ok else EXIT_CHECK


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "selftest":
            return _selftest(args, out)
        spaces = [SpaceTag(args.space)] if args.command == "compute" else list(SpaceTag)
        return _compute(args, spaces, out, err)
    except (_ArgumentError, GroupSpecError, ValueError) as exc:
        print(f"ratgauge: error: {exc}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
