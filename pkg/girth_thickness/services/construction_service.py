"""
Explicit planar girth-4 decompositions of complete graphs.

Vertices follow VertexMap: v_j -> j-1, v'_j -> 2k+j-1, x -> 4k, y -> 4k+1.
All label indices are reduced to 1..2k before mapping.
"""

import logging
from math import ceil
from typing import Dict, List, Optional, Tuple

from ..models import Edge, Graph, VertexMap, ZigZag, normalize_edge, reduce_index
from ..schemas import Decomposition
from ..utils.graph_utils import remove_vertices
from .bound_service import closed_form_lower_bound
from .fixture_store import FixtureStore

logger = logging.getLogger(__name__)

FIXTURE_ORDERS = frozenset({1, 2, 3, 4, 5, 6, 9})


class ConstructionError(ValueError):
    """Raised for parameters outside the construction's range."""


class ExcludedCaseError(ConstructionError):
    """The 4k+2 construction does not cover k = 2 (n = 10)."""


def hamiltonian_factorization(k: int) -> List[List[Edge]]:
    """Cyclic factorization of K_2k into k Hamiltonian paths F_1..F_k (on ids 0..2k-1)."""
    if k < 1:
        raise ConstructionError(f"Hamiltonian factorization needs k >= 1, got {k}")
    vmap = VertexMap(k)
    paths = []
    for i in range(1, k + 1):
        paths.append(
            [normalize_edge(vmap.v(a), vmap.v(b)) for a, b in ZigZag(k, i).consecutive_pairs()]
        )
    return paths


def center_edge(k: int, i: int) -> Edge:
    """Middle edge of F_i: v_{i+ceil(k/2)} v_{i+ceil(3k/2)}."""
    vmap = VertexMap(k)
    return normalize_edge(vmap.v(i + ceil(k / 2)), vmap.v(i + ceil(3 * k / 2)))


def _g_part(k: int, i: int) -> List[Edge]:
    # F_i, F'_i and the cross edges of consecutive zig-zag classes form a K_{2,2} chain
    vmap = VertexMap(k)
    edges = []
    for a, b in ZigZag(k, i).consecutive_pairs():
        edges.append(normalize_edge(vmap.v(a), vmap.v(b)))
        edges.append(normalize_edge(vmap.vp(a), vmap.vp(b)))
        edges.append(normalize_edge(vmap.v(a), vmap.vp(b)))
        edges.append(normalize_edge(vmap.vp(a), vmap.v(b)))
    return sorted(edges)


def _matching(k: int) -> List[Edge]:
    vmap = VertexMap(k)
    return [normalize_edge(vmap.v(j), vmap.vp(j)) for j in range(1, 2 * k + 1)]


def build_case_4k(k: int) -> Decomposition:
    """Decompose K_4k into G_1..G_k (order 4k, size 8k-4) and the matching G_{k+1}."""
    if k < 2:
        raise ConstructionError(f"Case n=4k starts at k=2, got k={k}")
    parts = [_g_part(k, i) for i in range(1, k + 1)]
    parts.append(_matching(k))
    return Decomposition(n=4 * k, girth_claim=4, optimal=True, parts=parts)


# Attachments of x and y in H_i, keyed by (k mod 2, i mod 2, ceil(k/2) mod 2).
# Each entry is (hub, primed, offset); the index is i + base + offset where base
# is ceil(3k/2) for odd i and ceil(k/2) for even i.
H_ATTACHMENTS: Dict[Tuple[int, int, int], Tuple[Tuple[str, bool, int], ...]] = {
    # k odd, i odd
    (1, 1, 0): (("x", True, -1), ("x", False, 0), ("y", False, -1), ("y", True, 0)),
    (1, 1, 1): (("y", True, -1), ("y", False, 0), ("x", False, -1), ("x", True, 0)),
    # k odd, i even
    (1, 0, 0): (("x", True, -1), ("x", False, 0), ("y", False, -1), ("y", True, 0)),
    (1, 0, 1): (("y", True, -1), ("y", False, 0), ("x", False, -1), ("x", True, 0)),
    # k even, i odd
    (0, 1, 0): (("x", False, 1), ("x", True, 0), ("y", True, 1), ("y", False, 0)),
    (0, 1, 1): (("y", False, 1), ("y", True, 0), ("x", True, 1), ("x", False, 0)),
    # k even, i even
    (0, 0, 0): (("x", False, 0), ("x", True, -1), ("y", True, 0), ("y", False, -1)),
    (0, 0, 1): (("y", False, 0), ("y", True, -1), ("x", True, 0), ("x", False, -1)),
}


def h_attachment_edges(k: int, i: int) -> List[Edge]:
    """The four edges joining x and y to G_i."""
    vmap = VertexMap(k)
    half = ceil(k / 2)
    base = ceil(3 * k / 2) if i % 2 == 1 else half
    edges = []
    for hub, primed, offset in H_ATTACHMENTS[(k % 2, i % 2, half % 2)]:
        index = reduce_index(i + base + offset, k)
        target = vmap.vp(index) if primed else vmap.v(index)
        hub_id = vmap.x if hub == "x" else vmap.y
        edges.append(normalize_edge(target, hub_id))
    return edges


def _h_last(k: int) -> List[Edge]:
    # matching, xy, x to v_odd and v'_even, y to v'_odd and v_even
    vmap = VertexMap(k)
    edges = _matching(k) + [normalize_edge(vmap.x, vmap.y)]
    for j in range(1, 2 * k + 1):
        if j % 2 == 1:
            edges += [(vmap.v(j), vmap.x), (vmap.vp(j), vmap.y)]
        else:
            edges += [(vmap.vp(j), vmap.x), (vmap.v(j), vmap.y)]
    return sorted(edges)


def build_case_4k_plus_2(k: int) -> Decomposition:
    """Decompose K_{4k+2} into H_1..H_k (size 8k) and H_{k+1} (size 6k+1)."""
    if k == 2:
        raise ExcludedCaseError("The 4k+2 construction excludes k=2 (n=10)")
    if k < 3:
        raise ConstructionError(f"Case n=4k+2 needs k >= 3, got k={k}")
    parts = [sorted(_g_part(k, i) + h_attachment_edges(k, i)) for i in range(1, k + 1)]
    parts.append(_h_last(k))
    return Decomposition(n=4 * k + 2, girth_claim=4, optimal=True, parts=parts)


def restrict(decomposition: Decomposition, drop: List[int], optimal: Optional[bool] = None) -> Decomposition:
    """Delete vertices from every part, relabeling the survivors in order."""
    n = decomposition.n
    parts = []
    for index, part in enumerate(decomposition.parts):
        restricted = remove_vertices(Graph.from_edges(n, part), drop)
        if restricted.size == 0:
            raise ConstructionError(f"Restriction emptied part {index} of K_{n}")
        parts.append(restricted.sorted_edges())
    return Decomposition(
        n=n - len(set(drop)),
        girth_claim=decomposition.girth_claim,
        optimal=decomposition.optimal if optimal is None else optimal,
        parts=parts,
    )


def build_case_4k_minus_1(k: int) -> Decomposition:
    """K_{4k-1} from K_4k by dropping v'_2k."""
    return restrict(build_case_4k(k), [4 * k - 1])


def build_case_4k_plus_1(k: int) -> Decomposition:
    """K_{4k+1} from K_{4k+2} by dropping y."""
    return restrict(build_case_4k_plus_2(k), [4 * k + 1])


def vertex_map_for(n: int) -> Optional[VertexMap]:
    """Label map of the construction serving order n; None for fixture orders."""
    if n in FIXTURE_ORDERS or n < 1:
        return None
    if n == 10:
        return VertexMap(3)
    residue = n % 4
    if residue == 0:
        return VertexMap(n // 4)
    if residue == 3:
        return VertexMap((n + 1) // 4)
    if residue == 2:
        return VertexMap((n - 2) // 4)
    return VertexMap((n - 1) // 4)


class ConstructionService:
    """Dispatches any order n to a decomposition with the minimum part count."""

    def __init__(self, fixture_store: Optional[FixtureStore] = None):
        self.fixture_store = fixture_store or FixtureStore()

    def decompose(self, n: int) -> Decomposition:
        if n < 1:
            raise ConstructionError(f"decompose needs n >= 1, got {n}")

        if n in FIXTURE_ORDERS:
            logger.info(f"K_{n}: serving fixture")
            return self.fixture_store.load(n)

        if n == 10:
            logger.info("K_10: restricting the K_12 construction (upper bound only)")
            return restrict(build_case_4k(3), [10, 11], optimal=False)

        residue = n % 4
        if residue == 0:
            logger.info(f"K_{n}: case n=4k with k={n // 4}")
            decomposition = build_case_4k(n // 4)
        elif residue == 3:
            logger.info(f"K_{n}: case n=4k-1 with k={(n + 1) // 4}")
            decomposition = build_case_4k_minus_1((n + 1) // 4)
        elif residue == 2:
            logger.info(f"K_{n}: case n=4k+2 with k={(n - 2) // 4}")
            decomposition = build_case_4k_plus_2((n - 2) // 4)
        else:
            logger.info(f"K_{n}: case n=4k+1 with k={(n - 1) // 4}")
            decomposition = build_case_4k_plus_1((n - 1) // 4)

        expected = closed_form_lower_bound(n)
        if decomposition.parts_count != expected:
            raise ConstructionError(
                f"K_{n} construction produced {decomposition.parts_count} parts, expected {expected}"
            )
        return decomposition
