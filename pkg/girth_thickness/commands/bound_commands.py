"""
bound: counting lower bound and the known theta(4, K_n).
"""

import logging

from ..services.bound_service import lower_bound_report
from .common import ExitCode, positive_int, print_model

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("bound", help="Print the lower bound and theta(4, K_n)")
    parser.add_argument("--n", type=positive_int, required=True, help="Order of the complete graph")
    parser.set_defaults(handler=run_bound)


def run_bound(args) -> int:
    print_model(lower_bound_report(args.n))
    return ExitCode.OK
