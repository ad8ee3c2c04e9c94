"""
search, k10, ramsey-k6, generate-fixtures: exact search and experiments.
"""

import logging
import time

from pydantic import ValidationError

from ..config.settings import settings
from ..schemas import SearchConfig, SearchStatus
from ..services.fixture_store import FixtureStore
from ..services.search_service import K10_CONFIG, SearchService
from ..utils.export_utils import to_json
from .common import ExitCode, positive_float, positive_int, print_json, print_model, write_text

logger = logging.getLogger(__name__)

STATUS_EXIT = {
    SearchStatus.FOUND: ExitCode.OK,
    SearchStatus.EXHAUSTED: ExitCode.EXHAUSTED,
    SearchStatus.BUDGET_EXCEEDED: ExitCode.BUDGET_EXCEEDED,
}


def _add_budget_flags(parser):
    parser.add_argument("--node-budget", type=positive_int, default=None, help="Maximum edge-assignment attempts")
    parser.add_argument("--time-budget", type=positive_float, default=None, help="Wall-clock cap in seconds")
    parser.add_argument("--seed", type=int, default=None, help="Tie-breaking seed")


def register(subparsers):
    search = subparsers.add_parser("search", help="Backtracking search for a planar decomposition")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--parts", type=int, required=True, help="Number of parts t")
    search.add_argument("--girth", type=int, default=4, help="Girth lower bound g")
    _add_budget_flags(search)
    search.add_argument("--no-symmetry-breaking", action="store_true")
    search.add_argument("--out", dest="out_path", default=None, help="Write a Found decomposition here")
    search.add_argument("--log", dest="log_path", default=None, help="Append an experiment log entry here")
    search.set_defaults(handler=run_search)

    k10 = subparsers.add_parser("k10", help="Run the bounded K_10 three-part experiment")
    _add_budget_flags(k10)
    k10.add_argument("--out", dest="out_path", default=None)
    k10.add_argument("--log", dest="log_path", default=None)
    k10.set_defaults(handler=run_k10)

    ramsey = subparsers.add_parser("ramsey-k6", help="Exhaustive monochromatic-triangle check")
    ramsey.add_argument("--n", type=int, default=6, help="Order (auxiliary mode for 3..7)")
    ramsey.set_defaults(handler=run_ramsey)

    fixtures = subparsers.add_parser("generate-fixtures", help="Regenerate small-order fixtures by search")
    fixtures.add_argument("--orders", type=int, nargs="+", default=[1, 2, 3, 4, 5, 6, 9])
    fixtures.add_argument("--fixtures-dir", default=None)
    _add_budget_flags(fixtures)
    fixtures.set_defaults(handler=run_generate_fixtures)


def _config(args, n: int, t: int, g: int, symmetry_breaking: bool = True) -> SearchConfig:
    return SearchConfig(
        n=n,
        t=t,
        g=g,
        node_budget=args.node_budget or settings.search_node_budget,
        time_budget=args.time_budget or settings.search_time_budget,
        seed=settings.search_seed if args.seed is None else args.seed,
        symmetry_breaking=symmetry_breaking,
    )


def _finish(outcome, out_path) -> int:
    print_model(outcome)
    if out_path and outcome.status is SearchStatus.FOUND:
        try:
            write_text(out_path, to_json(outcome.decomposition))
        except OSError as e:
            logger.error(f"Cannot write {out_path}: {e}")
            return ExitCode.USAGE_ERROR
    return STATUS_EXIT[outcome.status]


def run_search(args) -> int:
    try:
        config = _config(args, args.n, args.parts, args.girth, not args.no_symmetry_breaking)
    except ValidationError as e:
        logger.error(f"Invalid search configuration: {e}")
        return ExitCode.USAGE_ERROR

    service = SearchService()
    if (config.n, config.t, config.g) == K10_CONFIG:
        outcome = service.k10_experiment(config, args.log_path)
    else:
        started = time.monotonic()
        outcome = service.search_decomposition(config)
        if args.log_path:
            service.append_log(outcome, int((time.monotonic() - started) * 1000), args.log_path)
    return _finish(outcome, args.out_path)


def run_k10(args) -> int:
    config = _config(args, *K10_CONFIG)
    outcome = SearchService().k10_experiment(config, args.log_path)
    return _finish(outcome, args.out_path)


def run_ramsey(args) -> int:
    try:
        result = SearchService().ramsey_check(args.n)
    except ValueError as e:
        logger.error(str(e))
        return ExitCode.USAGE_ERROR
    print_model(result)
    return ExitCode.OK


def run_generate_fixtures(args) -> int:
    unsupported = [n for n in args.orders if n < 1]
    if unsupported:
        logger.error(f"Orders must be positive: {unsupported}")
        return ExitCode.USAGE_ERROR
    store = FixtureStore(args.fixtures_dir)
    results = SearchService().generate_fixtures(
        args.orders,
        store,
        seed=settings.search_seed if args.seed is None else args.seed,
        node_budget=args.node_budget or 10**8,
        time_budget=args.time_budget or 600.0,
    )
    print_json({str(n): status.value for n, status in results.items()})
    all_found = all(status is SearchStatus.FOUND for status in results.values())
    return ExitCode.OK if all_found else ExitCode.BUDGET_EXCEEDED
