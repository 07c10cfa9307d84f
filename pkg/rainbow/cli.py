"""
``prcf`` console entry point.

``prcf <subcommand> ...`` runs the matching management command of the
rainbow app and returns its exit code: 0 success, 1 invalid input, 2 budget
exceeded, 3 cross-check mismatch.
"""

import os
import sys
from typing import Sequence, TextIO

COMMANDS = (
    "family",
    "analyze",
    "census",
    "decide",
    "certify",
    "threshold",
    "color",
    "check",
)

USAGE = "usage: prcf {" + ",".join(COMMANDS) + "} [options]\n"


def run(
    argv: Sequence[str],
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "prcf_lab.settings")
    import django

    django.setup()

    from django.core.management import load_command_class
    from django.core.management.base import CommandError

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if not argv or argv[0] in ("-h", "--help"):
        stderr.write(USAGE)
        return 0 if argv else 1
    name, *rest = argv
    if name not in COMMANDS:
        stderr.write(f"Unknown subcommand {name!r}\n{USAGE}")
        return 1

    command = load_command_class("rainbow", name)
    # Without called_from_command_line, argument errors raise CommandError.
    parser = command.create_parser("prcf", name)
    try:
        options = vars(parser.parse_args(list(rest)))
        args = options.pop("args", ())
        command.execute(*args, stdout=stdout, stderr=stderr, **options)
    except CommandError as exc:
        stderr.write(f"Error: {exc}\n")
        return exc.returncode
    except SystemExit as exc:
        # argparse --help
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
