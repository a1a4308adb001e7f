"""
Run a subcommand on a problem document.

Author: Tilings developers
"""


import argparse
import logging
import sys
from typing import Optional

from tilings.commands import create_commands_registry
from tilings.documents import ProblemDocument
from tilings.errors import CapExceededError
from tilings.settings import load_settings


logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_ASSERTION = 2
EXIT_INPUT_ERROR = 3
EXIT_CAP_EXCEEDED = 4


def parse_cli_args(argv: Optional[list[str]] = None) -> argparse.Namespace:
    """
    Parse arguments passed via Command Line Interface (CLI).

    :param argv:
        arguments; `sys.argv` is used if it is `None`
    :return:
        namespace with arguments
    """
    parser = argparse.ArgumentParser(
        prog='tilings', description='Blow-ups of Coxeter cells and mock reflection tilings.'
    )
    parser.add_argument(
        'command', choices=sorted(create_commands_registry()), help='subcommand to run'
    )
    parser.add_argument(
        '-i', '--input', type=str, required=True, help='path to problem document'
    )
    parser.add_argument(
        '-c', '--config_path', type=str, default=None, help='path to configuration file'
    )
    parser.add_argument(
        '--assert', dest='assertions', action='append', default=[], metavar='CONDITION',
        help='exit with code 2 unless the condition holds'
    )
    parser.add_argument('--max-cosets', type=int, default=None, help='cap for coset enumeration')
    parser.add_argument('--t-scan-cap', type=int, default=None, help='cap for the scan of t')
    parser.add_argument(
        '--float-tolerance', type=float, default=None, help='tolerance of float mode'
    )
    parser.add_argument('--out', type=str, default=None, help='path to JSON report')
    parser.add_argument('--dot', type=str, default=None, help='path to DOT graph')
    parser.add_argument('-v', '--verbose', action='store_true', help='print debug messages')
    cli_args = parser.parse_args(argv)
    return cli_args


def main(argv: Optional[list[str]] = None) -> int:
    """Parse CLI arguments and run requested command."""
    cli_args = parse_cli_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if cli_args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s'
    )
    try:
        settings = load_settings(cli_args.config_path).override(
            max_cosets=cli_args.max_cosets,
            t_scan_cap=cli_args.t_scan_cap,
            float_tolerance=cli_args.float_tolerance
        )
        document = ProblemDocument.load(cli_args.input)
        command = create_commands_registry()[cli_args.command]()
        command.check_kind(document)
    except (ValueError, KeyError, TypeError, OSError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        report = command.run(document, settings)
    except CapExceededError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    unknown = [c for c in cli_args.assertions if c not in report.verdicts]
    if unknown:
        print(f"input error: report of `{report.kind}` has no verdict {unknown[0]!r}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        text = report.render_to_json(cli_args.out)
        if cli_args.dot is not None:
            report.render_to_dot(cli_args.dot)
    except (ValueError, OSError) as e:
        print(f"output error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if cli_args.out is None:
        sys.stdout.write(text)

    failed = [c for c in cli_args.assertions if report.verdicts[c] is not True]
    for condition in failed:
        verdict = report.verdicts[condition]
        state = 'unknown' if verdict is None else 'false'
        print(f"assertion failed: {condition} is {state}", file=sys.stderr)
    return EXIT_ASSERTION if failed else EXIT_SUCCESS


if __name__ == '__main__':
    sys.exit(main())
