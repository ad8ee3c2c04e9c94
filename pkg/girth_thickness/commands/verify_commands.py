"""
verify: certify a decomposition file.
"""

import logging
from pathlib import Path

from pydantic import ValidationError

from ..services.verification_service import verify
from ..utils.export_utils import from_json
from .common import ExitCode, positive_int, print_model

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("verify", help="Verify a decomposition JSON file")
    parser.add_argument("--in", dest="in_path", required=True, help="Decomposition JSON file")
    parser.add_argument(
        "--girth", type=positive_int, default=None, help="Girth lower bound to check (default: the file's claim)"
    )
    parser.set_defaults(handler=run_verify)


def run_verify(args) -> int:
    try:
        decomposition = from_json(Path(args.in_path).read_text(encoding="utf-8"))
    except OSError as e:
        logger.error(f"Cannot read {args.in_path}: {e}")
        return ExitCode.USAGE_ERROR
    except ValidationError as e:
        logger.error(f"{args.in_path} is not a decomposition: {e.error_count()} error(s)")
        return ExitCode.USAGE_ERROR
    except UnicodeDecodeError as e:
        logger.error(f"{args.in_path} is not UTF-8 text: {e}")
        return ExitCode.USAGE_ERROR

    if args.girth is not None:
        if args.girth < 3:
            logger.error("--girth must be at least 3")
            return ExitCode.USAGE_ERROR
        decomposition = decomposition.model_copy(update={"girth_claim": args.girth})

    report = verify(decomposition)
    print_model(report)
    return ExitCode.OK if report.ok else ExitCode.VERIFICATION_FAILED
