import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from .commands import bound_commands, decompose_commands, search_commands, verify_commands
from .commands.common import ExitCode
from .config.settings import settings

logging.basicConfig(
    level=settings.log_level,
    stream=sys.stderr,
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)
logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girth-thickness",
        description="Planar decompositions of complete graphs with girth at least 4",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    decompose_commands.register(subparsers)
    verify_commands.register(subparsers)
    bound_commands.register(subparsers)
    search_commands.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return int(e.code or 0)

    try:
        return int(args.handler(args))
    except ValidationError as e:
        logger.error(f"Invalid input: {e}")
        return ExitCode.USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
