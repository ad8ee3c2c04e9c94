"""
decompose: build, verify and export the decomposition of K_n.
"""

import logging

from ..services.construction_service import ConstructionService, vertex_map_for
from ..services.fixture_store import FixtureError, FixtureStore
from ..services.verification_service import verify
from ..utils.export_utils import labeled_parts, to_dot, to_json
from .common import ExitCode, positive_int, print_json, print_model, write_text

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("decompose", help="Construct and export a decomposition of K_n")
    parser.add_argument("--n", type=positive_int, required=True, help="Order of the complete graph")
    parser.add_argument("--format", choices=["json", "dot"], default="json", help="Output format")
    parser.add_argument("--out", dest="out_path", required=True, help="Output file path")
    parser.add_argument("--labels", choices=["paper", "int"], default="int", help="Vertex naming in DOT and summary")
    parser.add_argument("--fixtures-dir", default=None, help="Directory holding the small-order fixtures")
    parser.set_defaults(handler=run_decompose)


def run_decompose(args) -> int:
    service = ConstructionService(FixtureStore(args.fixtures_dir))
    try:
        decomposition = service.decompose(args.n)
    except FixtureError as e:
        logger.error(f"Fixture problem for K_{args.n}: {e}")
        return ExitCode.USAGE_ERROR

    report = verify(decomposition)
    if not report.ok:
        # constructions are expected to verify; dump the report for diagnosis
        logger.error(f"Internal error: decomposition of K_{args.n} failed verification")
        print_model(report)
        return ExitCode.VERIFICATION_FAILED

    vertex_map = vertex_map_for(args.n) if args.labels == "paper" else None
    content = to_json(decomposition) if args.format == "json" else to_dot(decomposition, report, vertex_map)
    try:
        write_text(args.out_path, content)
    except OSError as e:
        logger.error(f"Cannot write {args.out_path}: {e}")
        return ExitCode.USAGE_ERROR

    summary = {
        "n": decomposition.n,
        "parts": decomposition.parts_count,
        "optimal": decomposition.optimal,
        "part_results": [result.model_dump(mode="json") for result in report.part_results],
        "out": args.out_path,
    }
    if args.labels == "paper":
        summary["edges"] = labeled_parts(decomposition, vertex_map)
    print_json(summary)
    return ExitCode.OK
