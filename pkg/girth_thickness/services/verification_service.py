"""
Independent certification of decompositions: exact partition, planarity and girth per part.
Uses graph-core and planarity only.
"""

import heapq
import logging
from itertools import chain, combinations, islice
from math import comb
from typing import Dict, Iterator, List, Optional, Union

from ..config.settings import settings
from ..models import Girth, Graph, normalize_edge
from ..schemas import (
    CertificationRejected,
    Decomposition,
    DuplicateEdge,
    ForeignEdge,
    GirthViolation,
    MissingEdge,
    NonPlanar,
    PartResult,
    UpperBoundClaim,
    VerificationReport,
)
from ..utils.graph_utils import shortest_cycle
from ..utils.planarity_utils import is_planar

logger = logging.getLogger(__name__)


def _missing_edges(n: int, owner: Dict[tuple, int]) -> Iterator[MissingEdge]:
    """Uncovered pairs in lexicographic order, which is also their sort order."""
    for u, v in combinations(range(n), 2):
        if (u, v) not in owner:
            yield MissingEdge(u=u, v=v)


def verify(decomposition: Decomposition, violation_cap: Optional[int] = None) -> VerificationReport:
    cap = settings.violation_cap if violation_cap is None else violation_cap
    n = decomposition.n
    claim = Girth.finite(decomposition.girth_claim)
    # missing pairs are counted, and only the first cap of them are built
    violations = []

    owner: Dict[tuple, int] = {}
    valid_edges: List[List[tuple]] = []
    for index, part in enumerate(decomposition.parts):
        kept = []
        for u, v in part:
            if u == v or not (0 <= u < n and 0 <= v < n):
                violations.append(ForeignEdge(u=u, v=v, part=index))
                continue
            edge = normalize_edge(u, v)
            if edge in owner:
                violations.append(DuplicateEdge(u=edge[0], v=edge[1], part_a=owner[edge], part_b=index))
                continue
            owner[edge] = index
            kept.append(edge)
        valid_edges.append(kept)

    missing_count = comb(n, 2) - len(owner)

    part_results = []
    for index, edges in enumerate(valid_edges):
        graph = Graph(n, frozenset(edges))
        verdict = is_planar(graph)
        cycle = shortest_cycle(graph)
        girth = Girth.infinite() if cycle is None else Girth.measured(len(cycle), n)
        if not verdict.planar:
            witness = sorted(verdict.witness) if verdict.witness is not None else None
            violations.append(NonPlanar(part=index, witness=witness))
        if not girth.at_least(claim):
            violations.append(GirthViolation(part=index, cycle=cycle))
        part_results.append(
            PartResult(part=index, size=graph.size, planar=verdict.planar, girth=girth.to_json())
        )

    count = len(violations) + missing_count
    kept_violations = heapq.nsmallest(
        cap,
        chain(violations, islice(_missing_edges(n, owner), max(cap, 0))),
        key=lambda violation: violation.sort_key(),
    )
    if count:
        logger.warning(f"Decomposition of K_{n} failed verification with {count} violation(s)")
    return VerificationReport(
        ok=count == 0,
        n=n,
        girth_claim=decomposition.girth_claim,
        part_results=part_results,
        violations=kept_violations,
        violation_count=count,
        truncated=count > cap,
    )


def certify_upper_bound(decomposition: Decomposition) -> Union[UpperBoundClaim, CertificationRejected]:
    """theta(g, K_n) <= parts_count when the decomposition verifies, else a rejection with the report."""
    report = verify(decomposition)
    if not report.ok:
        return CertificationRejected(n=decomposition.n, report=report)
    return UpperBoundClaim(
        n=decomposition.n,
        parts_count=decomposition.parts_count,
        girth=decomposition.girth_claim,
    )
