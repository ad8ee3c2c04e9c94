"""
Exact backtracking search for planar decompositions of K_n with a girth lower bound,
the exhaustive Ramsey colouring check, and the K_10 experiment harness.

Pruning rules (all sound, so ExhaustedNoSolution is a nonexistence proof):
  size      - a part would exceed max(max_planar_size(n, g), n - 1); forests have any girth
  girth     - a part would close a cycle shorter than g
  planarity - a part became non-planar
  capacity  - remaining edges exceed the total remaining size capacity
Symmetry breaking: edge (0, 1) goes to part 0 and parts are first used in index order.
"""

import logging
import random
import sys
import time
from datetime import datetime, timezone
from itertools import combinations, product
from pathlib import Path
from typing import Dict, Iterable, List, Optional

import networkx as nx
import numpy as np

from ..config.settings import settings
from ..models import Edge, Graph
from ..schemas import (
    Decomposition,
    ExperimentLogEntry,
    RamseyResult,
    SearchConfig,
    SearchOutcome,
    SearchStats,
    SearchStatus,
)
from ..utils.graph_utils import girth
from ..utils.planarity_utils import is_planar, is_planar_nx, part_capacity
from ..utils.process_utils import ProcessMonitor
from .bound_service import counting_lower_bound, theta4
from .fixture_store import FixtureStore

logger = logging.getLogger(__name__)

K10_CONFIG = (10, 3, 4)
RAMSEY_CHUNK = 1 << 16


class BudgetExceeded(Exception):
    """Internal signal: node or time budget ran out."""


def search_edge_order(n: int) -> List[Edge]:
    """Edges of K_n by max endpoint, then lexicographically (K_m grows into K_{m+1})."""
    return sorted(combinations(range(n), 2), key=lambda edge: (edge[1], edge))


def is_optimal(n: int, t: int, g: int) -> bool:
    if g == 4:
        return t == theta4(n).lo
    return t == counting_lower_bound(n, g)


class _Backtracker:
    def __init__(self, config: SearchConfig, check_interval: int):
        self.config = config
        self.check_interval = check_interval
        self.edges = search_edge_order(config.n)
        self.capacity = part_capacity(config.n, config.g)
        self.planarity_threshold = self.capacity // 2
        self.adjacency = [[set() for _ in range(config.n)] for _ in range(config.t)]
        self.graphs = []
        for _ in range(config.t):
            G = nx.Graph()
            G.add_nodes_from(range(config.n))
            self.graphs.append(G)
        self.sizes = [0] * config.t
        self.assignment: List[int] = []
        self.stats = SearchStats()

        # seed fixes the tie-break order between equally loaded parts
        priority = list(range(config.t))
        random.Random(config.seed).shuffle(priority)
        self.tiebreak = {part: rank for rank, part in enumerate(priority)}
        self.deadline = time.monotonic() + config.time_budget

    def _tick(self):
        self.stats.nodes += 1
        if self.stats.nodes > self.config.node_budget:
            raise BudgetExceeded()
        if self.stats.nodes % self.check_interval == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded()

    def _prune(self, rule: str):
        self.stats.prunes[rule] += 1

    def _closes_short_cycle(self, part: int, u: int, v: int) -> bool:
        limit = self.config.g - 2
        if limit < 2:
            return False
        adjacency = self.adjacency[part]
        frontier = {u}
        seen = {u}
        for _ in range(limit):
            following = set()
            for w in frontier:
                for z in adjacency[w]:
                    if z == v:
                        return True
                    if z not in seen:
                        seen.add(z)
                        following.add(z)
            if not following:
                return False
            frontier = following
        return False

    def _add(self, part: int, u: int, v: int):
        self.adjacency[part][u].add(v)
        self.adjacency[part][v].add(u)
        self.graphs[part].add_edge(u, v)
        self.sizes[part] += 1

    def _remove(self, part: int, u: int, v: int):
        self.adjacency[part][u].discard(v)
        self.adjacency[part][v].discard(u)
        self.graphs[part].remove_edge(u, v)
        self.sizes[part] -= 1

    def _all_parts_planar(self) -> bool:
        for part in range(self.config.t):
            if self.sizes[part] <= self.planarity_threshold and not is_planar_nx(self.graphs[part]):
                return False
        return True

    def extend(self, depth: int, used: int) -> bool:
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        if depth == len(self.edges):
            if self._all_parts_planar():
                return True
            self._prune("planarity")
            return False

        remaining = len(self.edges) - depth
        if sum(self.capacity - size for size in self.sizes) < remaining:
            self._prune("capacity")
            return False

        u, v = self.edges[depth]
        limit = min(used + 1, self.config.t) if self.config.symmetry_breaking else self.config.t
        candidates = sorted(range(limit), key=lambda part: (self.sizes[part], self.tiebreak[part]))
        for part in candidates:
            self._tick()
            if self.sizes[part] + 1 > self.capacity:
                self._prune("size")
                continue
            if self._closes_short_cycle(part, u, v):
                self._prune("girth")
                continue
            self._add(part, u, v)
            if self.sizes[part] > self.planarity_threshold and not is_planar_nx(self.graphs[part]):
                self._prune("planarity")
                self._remove(part, u, v)
                continue
            self.assignment.append(part)
            if self.extend(depth + 1, max(used, part + 1)):
                return True
            self.assignment.pop()
            self._remove(part, u, v)
        return False

    def decomposition(self) -> Decomposition:
        parts = [[] for _ in range(self.config.t)]
        for edge, part in zip(self.edges, self.assignment):
            parts[part].append(edge)
        return Decomposition(
            n=self.config.n,
            girth_claim=self.config.g,
            optimal=is_optimal(self.config.n, self.config.t, self.config.g),
            parts=[sorted(part) for part in parts],
        )


class SearchService:
    def __init__(self, check_interval: Optional[int] = None):
        self.check_interval = check_interval or settings.time_check_interval

    def search_decomposition(self, config: SearchConfig) -> SearchOutcome:
        """Assign every edge of K_n to one of t parts; Found, ExhaustedNoSolution or BudgetExceeded."""
        logger.info(
            f"Search n={config.n} t={config.t} g={config.g} "
            f"node_budget={config.node_budget} seed={config.seed}"
        )
        searcher = _Backtracker(config, self.check_interval)
        recursion_limit = sys.getrecursionlimit()
        if len(searcher.edges) + 100 > recursion_limit:
            sys.setrecursionlimit(len(searcher.edges) + 100)
        try:
            found = searcher.extend(0, 0)
            status = SearchStatus.FOUND if found else SearchStatus.EXHAUSTED
        except BudgetExceeded:
            status = SearchStatus.BUDGET_EXCEEDED
            logger.warning(f"Search budget exceeded after {searcher.stats.nodes} nodes")
        finally:
            sys.setrecursionlimit(recursion_limit)

        logger.info(f"Search finished: {status.value}, {searcher.stats.nodes} nodes")
        return SearchOutcome(
            status=status,
            config=config,
            decomposition=searcher.decomposition() if status is SearchStatus.FOUND else None,
            stats=searcher.stats,
        )

    def enumerate_exhaustively(self, config: SearchConfig) -> SearchOutcome:
        """Pruning-free enumeration of all t^m assignments; oracle for the pruned search."""
        edges = search_edge_order(config.n)
        stats = SearchStats()
        for assignment in product(range(config.t), repeat=len(edges)):
            stats.nodes += 1
            if stats.nodes > config.node_budget:
                return SearchOutcome(status=SearchStatus.BUDGET_EXCEEDED, config=config, stats=stats)
            parts = [[] for _ in range(config.t)]
            for edge, part in zip(edges, assignment):
                parts[part].append(edge)
            graphs = [Graph(config.n, frozenset(part)) for part in parts]
            if all(girth(graph).at_least(config.g) for graph in graphs) and all(
                is_planar(graph, with_witness=False).planar for graph in graphs
            ):
                stats.max_depth = len(edges)
                decomposition = Decomposition(
                    n=config.n,
                    girth_claim=config.g,
                    optimal=is_optimal(config.n, config.t, config.g),
                    parts=[sorted(part) for part in parts],
                )
                return SearchOutcome(
                    status=SearchStatus.FOUND, config=config, decomposition=decomposition, stats=stats
                )
        stats.max_depth = len(edges)
        return SearchOutcome(status=SearchStatus.EXHAUSTED, config=config, stats=stats)

    def ramsey_check(self, n: int = 6) -> RamseyResult:
        """Count 2-colourings of E(K_n) in which neither colour class contains a triangle."""
        if not 3 <= n <= 7:
            raise ValueError(f"Ramsey enumeration supports 3 <= n <= 7, got {n}")
        edges = list(combinations(range(n), 2))
        index = {edge: position for position, edge in enumerate(edges)}
        triangles = np.array(
            [
                (1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)])
                for a, b, c in combinations(range(n), 3)
            ],
            dtype=np.int64,
        )
        total = 1 << len(edges)
        triangle_free = 0
        for start in range(0, total, RAMSEY_CHUNK):
            colorings = np.arange(start, min(start + RAMSEY_CHUNK, total), dtype=np.int64)
            hits = colorings[:, None] & triangles[None, :]
            monochromatic = (hits == 0) | (hits == triangles[None, :])
            triangle_free += int(np.count_nonzero(~monochromatic.any(axis=1)))
        return RamseyResult(n=n, total_colorings=total, triangle_free_count=triangle_free)

    def ramsey_k6_check(self) -> RamseyResult:
        return self.ramsey_check(6)

    def k10_experiment(self, config: SearchConfig, log_path: Optional[str | Path] = None) -> SearchOutcome:
        """Bounded search for a 3-part decomposition of K_10; appends the run to the experiment log."""
        if (config.n, config.t, config.g) != K10_CONFIG:
            raise ValueError("The K_10 experiment runs with n=10, t=3, g=4")
        started = time.monotonic()
        outcome = self.search_decomposition(config)
        wall_ms = int((time.monotonic() - started) * 1000)
        self.append_log(outcome, wall_ms, log_path)
        if outcome.status is SearchStatus.BUDGET_EXCEEDED:
            logger.info("K_10 experiment inconclusive: budget exceeded")
        else:
            logger.warning(f"K_10 experiment conclusive: {outcome.status.value}")
        return outcome

    def append_log(self, outcome: SearchOutcome, wall_ms: int, log_path: Optional[str | Path] = None) -> Path:
        path = Path(log_path or settings.k10_log_path)
        entry = ExperimentLogEntry(
            config=outcome.config,
            status=outcome.status,
            nodes=outcome.stats.nodes,
            depth=outcome.stats.max_depth,
            prunes=outcome.stats.prunes,
            wall_ms=wall_ms,
            timestamp=datetime.now(timezone.utc),
            **ProcessMonitor().snapshot(),
        )
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("a", encoding="utf-8") as f:
            f.write(entry.model_dump_json() + "\n")
        logger.info(f"Appended experiment log entry to {path}")
        return path

    def generate_fixtures(
        self,
        orders: Iterable[int],
        store: FixtureStore,
        seed: int = 0,
        node_budget: int = 10**8,
        time_budget: float = 600.0,
    ) -> Dict[int, SearchStatus]:
        """Search each order at its theta(4, K_n) part count and store Found results as fixtures."""
        results = {}
        for n in orders:
            config = SearchConfig(
                n=n, t=theta4(n).hi, g=4, node_budget=node_budget, time_budget=time_budget, seed=seed
            )
            outcome = self.search_decomposition(config)
            results[n] = outcome.status
            if outcome.status is SearchStatus.FOUND:
                store.save(
                    outcome.decomposition,
                    provenance={"generator": "search", "config": config.model_dump(mode="json")},
                )
            else:
                logger.warning(f"No fixture written for K_{n}: {outcome.status.value}")
        return results
